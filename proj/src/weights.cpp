#include "rr/weights.hpp"

#include <algorithm>
#include <map>

namespace rr {

BandWeight2::BandWeight2() : period_(1), band_lo_(0), table_(IntMatrix::Zero(1, 1)) {}

BandWeight2::BandWeight2(Int period, Int band_lo, IntMatrix table)
    : period_(period), band_lo_(band_lo), table_(std::move(table)) {
  if (period_ < 1) throw Error(Errc::InvalidInput, "period must be positive");
  if (table_.rows() != period_ || table_.cols() < 1)
    throw Error(Errc::InvalidInput, "weight table shape does not match period and band");
}

BandWeight2 BandWeight2::zero(Int period) {
  return BandWeight2(period, 0, IntMatrix::Zero(period, 1));
}

BandWeight2 BandWeight2::from_entries(Int period, const std::vector<std::array<Int, 3>>& entries) {
  if (period < 1) throw Error(Errc::InvalidInput, "period must be positive");
  std::map<std::pair<Int, Int>, Int> cells;
  for (const auto& [a1, a2, v] : entries) {
    auto key = std::make_pair(mod(a1, period), a1 + a2);
    auto [it, inserted] = cells.emplace(key, v);
    if (!inserted && it->second != v)
      throw Error(Errc::InvalidInput, "conflicting weight entries modulo the period");
  }
  if (cells.empty()) return zero(period);
  Int lo = cells.begin()->first.second, hi = lo;
  for (const auto& [key, v] : cells) {
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  IntMatrix t = IntMatrix::Zero(period, hi - lo + 1);
  for (const auto& [key, v] : cells) t(key.first, key.second - lo) = v;
  return BandWeight2(period, lo, std::move(t));
}

Int BandWeight2::operator()(Int a1, Int a2) const {
  const Int d = a1 + a2;
  if (d < band_lo_ || d > band_hi()) return 0;
  return table_(mod(a1, period_), d - band_lo_);
}

Int BandWeight2::row_sum(Int a1) const { return table_.row(mod(a1, period_)).sum(); }

Int BandWeight2::col_sum(Int a2) const {
  Int s = 0;
  for (Eigen::Index t = 0; t < table_.cols(); ++t) s += table_(mod(band_lo_ + t - a2, period_), t);
  return s;
}

std::vector<std::array<Int, 3>> BandWeight2::entries() const {
  std::vector<std::array<Int, 3>> out;
  for (Eigen::Index r = 0; r < table_.rows(); ++r)
    for (Eigen::Index t = 0; t < table_.cols(); ++t)
      if (table_(r, t) != 0) out.push_back({r, band_lo_ + t - r, table_(r, t)});
  return out;
}

BandWeight2 BandWeight2::with_period(Int q) const {
  if (q < 1 || q % period_ != 0)
    throw Error(Errc::PeriodMismatch, "period " + std::to_string(q) + " is not a multiple of " +
                                          std::to_string(period_));
  IntMatrix t(q, table_.cols());
  for (Int r = 0; r < q; ++r) t.row(r) = table_.row(r % period_);
  return BandWeight2(q, band_lo_, std::move(t));
}

BandWeight2 BandWeight2::with_band(Int lo, Int hi) const {
  if (lo > hi) throw Error(Errc::InvalidInput, "empty band");
  IntMatrix t = IntMatrix::Zero(period_, hi - lo + 1);
  for (Eigen::Index c = 0; c < table_.cols(); ++c) {
    const Int d = band_lo_ + c;
    if (d >= lo && d <= hi)
      t.col(d - lo) = table_.col(c);
    else if (!table_.col(c).isZero())
      throw Error(Errc::InvalidInput, "band does not contain the support");
  }
  return BandWeight2(period_, lo, std::move(t));
}

BandWeight2 BandWeight2::canonical() const {
  Eigen::Index first = -1, last = -1;
  for (Eigen::Index c = 0; c < table_.cols(); ++c)
    if (!table_.col(c).isZero()) {
      if (first < 0) first = c;
      last = c;
    }
  if (first < 0) return zero(1);
  IntMatrix t = table_.middleCols(first, last - first + 1);
  Int q = period_;
  for (Int cand = 1; cand < period_; ++cand) {
    if (period_ % cand) continue;
    bool ok = true;
    for (Int r = cand; r < period_ && ok; ++r) ok = t.row(r) == t.row(r % cand);
    if (ok) {
      q = cand;
      break;
    }
  }
  return BandWeight2(q, band_lo_ + first, t.topRows(q));
}

namespace {

std::pair<BandWeight2, BandWeight2> align(const BandWeight2& a, const BandWeight2& b) {
  const Int p = lcm(a.period(), b.period());
  const Int lo = std::min(a.band_lo(), b.band_lo()), hi = std::max(a.band_hi(), b.band_hi());
  return {a.with_period(p).with_band(lo, hi), b.with_period(p).with_band(lo, hi)};
}

}  // namespace

BandWeight2 operator+(const BandWeight2& a, const BandWeight2& b) {
  auto [x, y] = align(a, b);
  return BandWeight2(x.period(), x.band_lo(), x.table() + y.table());
}

BandWeight2 operator-(const BandWeight2& a, const BandWeight2& b) {
  auto [x, y] = align(a, b);
  return BandWeight2(x.period(), x.band_lo(), x.table() - y.table());
}

BandWeight2 operator-(const BandWeight2& a) {
  return BandWeight2(a.period(), a.band_lo(), -a.table());
}

BandWeight2 operator*(Int c, const BandWeight2& a) {
  return BandWeight2(a.period(), a.band_lo(), c * a.table());
}

bool operator==(const BandWeight2& a, const BandWeight2& b) { return (a - b).is_zero(); }

PerfectMatching::PerfectMatching(Int period, std::vector<Int> pi) : pi_(std::move(pi)) {
  if (period < 1 || static_cast<Int>(pi_.size()) != period)
    throw Error(Errc::InvalidInput, "matching needs exactly period values");
  std::vector<bool> seen(period, false);
  for (Int v : pi_) {
    Int r = mod(v, period);
    if (seen[r]) throw Error(Errc::NotAMatching, "residues of pi are not distinct");
    seen[r] = true;
  }
}

Int PerfectMatching::operator()(Int i) const {
  const Int p = period();
  return pi_[mod(i, p)] - (i - mod(i, p));
}

Int PerfectMatching::band_lo() const {
  Int lo = pi_[0];
  for (Int i = 0; i < period(); ++i) lo = std::min(lo, i + pi_[i]);
  return lo;
}

Int PerfectMatching::band_hi() const {
  Int hi = pi_[0];
  for (Int i = 0; i < period(); ++i) hi = std::max(hi, i + pi_[i]);
  return hi;
}

BandWeight2 PerfectMatching::weight() const {
  std::vector<std::array<Int, 3>> e;
  for (Int i = 0; i < period(); ++i) e.push_back({i, pi_[i], 1});
  return BandWeight2::from_entries(period(), e);
}

PerfectMatching PerfectMatching::with_period(Int q) const {
  if (q < 1 || q % period() != 0) throw Error(Errc::PeriodMismatch, "matching period");
  std::vector<Int> v(q);
  for (Int i = 0; i < q; ++i) v[i] = (*this)(i);
  return PerfectMatching(q, std::move(v));
}

PerfectMatching PerfectMatching::canonical() const {
  const Int p = period();
  for (Int q = 1; q < p; ++q) {
    if (p % q) continue;
    bool ok = true;
    for (Int i = q; i < p && ok; ++i) ok = pi_[i] == pi_[i - q] - q;
    if (ok) return PerfectMatching(q, std::vector<Int>(pi_.begin(), pi_.begin() + q));
  }
  return *this;
}

PerfectMatching PerfectMatching::shifted(const Point2& t) const {
  std::vector<Int> v(period());
  for (Int j = 0; j < period(); ++j) v[j] = (*this)(j - t(0)) + t(1);
  return PerfectMatching(period(), std::move(v));
}

bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
  return a.canonical().values() == b.canonical().values();
}

bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
  auto x = a.canonical(), y = b.canonical();
  if (x.period() != y.period()) return x.period() < y.period();
  return x.values() < y.values();
}

Int fold_of(const BandWeight2& W) {
  if (W.min_value() < 0) throw Error(Errc::NonNegativityViolated, "weight has negative entries");
  const Int r = W.row_sum(0);
  for (Int i = 0; i < W.period(); ++i)
    if (W.row_sum(i) != r || W.col_sum(i) != r)
      throw Error(Errc::FoldMismatch, "row and column sums are not all equal");
  if (r < 1) throw Error(Errc::FoldMismatch, "row sums are zero");
  return r;
}

BandWeight2 weight_of(const RiemannFunction& f2) {
  if (f2.arity() != 2) throw Error(Errc::ArityMismatch, "weight_of needs arity 2");
  if (!f2.period()) throw Error(Errc::MissingPeriod, "weight_of needs a declared period");
  const Int p = *f2.period();
  const Int a = f2.zero_threshold(), b = f2.linear_threshold();
  for (Int x = 0; x < p; ++x)
    for (Int d = a - 1; d <= b + 2; ++d)
      if (f2(x + p, d - x - p) != f2(x, d - x))
        throw Error(Errc::PeriodMismatch, "function is not invariant under the declared period");
  IntMatrix t(p, b - a + 1);
  Point x(2);
  for (Int r = 0; r < p; ++r)
    for (Int d = a + 1; d <= b + 1; ++d) {
      x << r, d - r;
      t(r, d - a - 1) = mobius_weight(f2, x);
    }
  return BandWeight2(p, a + 1, std::move(t)).canonical();
}

Int sum_below(const BandWeight2& W, const Point2& d) {
  const Int lo = W.band_lo(), hi = W.band_hi();
  Int s = 0;
  for (Int x = lo - d(1); x <= d(0); ++x)
    for (Int y = lo - x; y <= std::min(d(1), hi - x); ++y) s += W(x, y);
  return s;
}

bool is_riemann_weight(const BandWeight2& W) {
  for (Int i = 0; i < W.period(); ++i)
    if (W.row_sum(i) != 1 || W.col_sum(i) != 1) return false;
  return true;
}

BandWeight2 dual_weight(const BandWeight2& W, const Point2& L) {
  const Int p = W.period(), dL = L.sum();
  const Int lo = dL - W.band_hi(), width = W.band_hi() - W.band_lo() + 1;
  IntMatrix t(p, width);
  for (Int r = 0; r < p; ++r)
    for (Int c = 0; c < width; ++c) t(r, c) = W(L(0) - r, L(1) - (lo + c - r));
  return BandWeight2(p, lo, std::move(t));
}

PerfectMatching to_matching(const BandWeight2& W) {
  if (W.min_value() < 0) throw Error(Errc::NotNonNegative, "weight has negative entries");
  if (!is_riemann_weight(W)) throw Error(Errc::NotUnitSums, "row or column sum differs from 1");
  std::vector<Int> pi(W.period());
  for (Int r = 0; r < W.period(); ++r)
    for (Eigen::Index c = 0; c < W.table().cols(); ++c)
      if (W.table()(r, c) == 1) pi[r] = W.band_lo() + c - r;
  return PerfectMatching(W.period(), std::move(pi));
}

PerfectMatching dual_matching(const PerfectMatching& pi, const Point2& L) {
  std::vector<Int> v(pi.period());
  for (Int j = 0; j < pi.period(); ++j) v[j] = L(1) - pi(L(0) - j);
  return PerfectMatching(pi.period(), std::move(v));
}

RiemannFunction riemann_of(const BandWeight2& W) {
  if (!is_riemann_weight(W)) throw Error(Errc::NotUnitSums, "riemann_of needs unit sums");
  const Int a = W.band_lo() - 1, b = std::max(W.band_hi() - 1, W.band_lo());
  Point2 probe(0, b);
  const Int C = sum_below(W, probe) - b;
  return RiemannFunction(
      2, C, a, b,
      [W](const Point& d) { return sum_below(W, Point2(d(0), d(1))); }, W.period());
}

bool check_dual_weight_identity(const RiemannFunction& f2, const Point2& K, const Window& w) {
  if (f2.arity() != 2) throw Error(Errc::ArityMismatch, "check_dual_weight_identity");
  Point Kp(2);
  Kp << K(0), K(1);
  const RiemannFunction g = dual_function(f2, Kp);
  Point L = Kp + Point::Ones(2);
  bool ok = true;
  w.for_each([&](const Point& d) {
    if (ok) ok = mobius_weight(g, d) == mobius_weight(f2, L - d);
  });
  return ok;
}

BandWeight2 sum_weights(const std::vector<PerfectMatching>& ms) {
  BandWeight2 s = BandWeight2::zero();
  for (const auto& m : ms) s = s + m.weight();
  return s;
}

}  // namespace rr
