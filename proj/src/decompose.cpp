#include "rr/decompose.hpp"

#include <algorithm>
#include <functional>

namespace rr {

BandWeight2 AlternatingDecomposition::signed_sum() const {
  return sum_weights(plus) - sum_weights(minus);
}

PerfectMatching degree_matching(Int b) { return PerfectMatching(1, {b}); }

BandWeight2 u_gadget(const PeriodicBinarySeq& S) {
  const Int p = S.period();
  IntMatrix t = IntMatrix::Zero(p, 3);
  // U = +1 at (0,0),(1,1) and -1 at (1,0),(0,1).
  auto U = [](Int x, Int y) -> Int {
    if ((x == 0 && y == 0) || (x == 1 && y == 1)) return 1;
    if ((x == 1 && y == 0) || (x == 0 && y == 1)) return -1;
    return 0;
  };
  for (Int r = 0; r < p; ++r)
    for (Int d = 0; d <= 2; ++d)
      for (Int i = r - 1; i <= r; ++i) t(r, d) += U(r - i, d - r + i) * S(i);
  return BandWeight2(p, 0, std::move(t));
}

namespace {

// Rows 2t, 2t+1 follow the s_{2t} pattern; odd entries of S are ignored.
PerfectMatching even_pattern(const PeriodicBinarySeq& S, Int P) {
  std::vector<Int> pi(P);
  for (Int a = 0; a < P; a += 2) {
    if (S(a)) {
      pi[a] = -a;
      pi[a + 1] = -a + 1;
    } else {
      pi[a] = -a + 1;
      pi[a + 1] = -a;
    }
  }
  return PerfectMatching(P, std::move(pi));
}

bool any_even(const PeriodicBinarySeq& S, Int P) {
  for (Int a = 0; a < P; a += 2)
    if (S(a)) return true;
  return false;
}

Int period_of(const AlternatingDecomposition& D) {
  Int p = 1;
  for (const auto& m : D.plus) p = lcm(p, m.period());
  for (const auto& m : D.minus) p = lcm(p, m.period());
  return p;
}

void canonicalize(std::vector<PerfectMatching>& ms) {
  for (auto& m : ms) m = m.canonical();
}

}  // namespace

AlternatingDecomposition u_gadget_decompose(const PeriodicBinarySeq& S) {
  AlternatingDecomposition D;
  const Int p = S.period();
  D.period = p;
  if (std::all_of(S.bits.begin(), S.bits.end(), [](int b) { return b == 0; })) return D;
  const PerfectMatching W1 = degree_matching(1);
  if (p == 1) {
    D.plus = {degree_matching(0), degree_matching(2)};
    D.minus = {W1, W1};
  } else if (p % 2 == 1) {
    for (Int i = 0; i < p; ++i) {
      if (!S(i)) continue;
      std::vector<Int> pi(p);
      for (Int a = 0; a < p; ++a) pi[a] = 1 - a;
      pi[i] = -i;
      pi[(i + 1) % p] = (i + 1 == p) ? -i + 1 + p : -i + 1;
      D.plus.push_back(PerfectMatching(p, std::move(pi)));
      D.minus.push_back(W1);
    }
  } else {
    const Int P = p;
    if (any_even(S, P)) {
      D.plus.push_back(even_pattern(S, P));
      D.minus.push_back(W1);
    }
    PeriodicBinarySeq T;
    T.bits.resize(P);
    for (Int j = 0; j < P; ++j) T.bits[j] = S(j + 1);
    if (any_even(T, P)) {
      D.plus.push_back(even_pattern(T, P).shifted(Point2(1, -1)));
      D.minus.push_back(W1);
    }
  }
  canonicalize(D.plus);
  canonicalize(D.minus);
  return D;
}

std::vector<PerfectMatching> split_rfold(const BandWeight2& W0) {
  const Int r = fold_of(W0);
  const Int p = W0.period();
  BandWeight2 W = W0;
  std::vector<PerfectMatching> out;
  for (Int step = 0; step < r; ++step) {
    IntMatrix e = IntMatrix::Zero(p, p);
    for (const auto& [i, m, v] : W.entries()) e(i, mod(m, p)) += v;
    std::vector<Int> match_col(p, -1);
    std::vector<bool> seen;
    std::function<bool(Int)> augment = [&](Int i) {
      for (Int j = 0; j < p; ++j) {
        if (e(i, j) <= 0 || seen[j]) continue;
        seen[j] = true;
        if (match_col[j] < 0 || augment(match_col[j])) {
          match_col[j] = i;
          return true;
        }
      }
      return false;
    };
    for (Int i = 0; i < p; ++i) {
      seen.assign(p, false);
      if (!augment(i)) throw Error(Errc::FoldMismatch, "residue graph has no perfect matching");
    }
    std::vector<Int> pi(p);
    for (Int j = 0; j < p; ++j) {
      const Int i = match_col[j];
      bool found = false;
      for (Int d = W.band_lo(); d <= W.band_hi() && !found; ++d) {
        const Int m = d - i;
        if (mod(m, p) == j && W(i, m) >= 1) {
          pi[i] = m;
          found = true;
        }
      }
      if (!found) throw Error(Errc::FoldMismatch, "no column to lift a residue match");
    }
    PerfectMatching M(p, std::move(pi));
    W = W - M.weight();
    out.push_back(std::move(M));
  }
  return out;
}

void cancel_pairs(AlternatingDecomposition& D) {
  canonicalize(D.plus);
  canonicalize(D.minus);
  std::sort(D.plus.begin(), D.plus.end());
  std::sort(D.minus.begin(), D.minus.end());
  std::vector<PerfectMatching> plus, minus;
  auto a = D.plus.begin(), b = D.minus.begin();
  while (a != D.plus.end() && b != D.minus.end()) {
    if (*a < *b)
      plus.push_back(*a++);
    else if (*b < *a)
      minus.push_back(*b++);
    else
      ++a, ++b;
  }
  plus.insert(plus.end(), a, D.plus.end());
  minus.insert(minus.end(), b, D.minus.end());
  D.plus = std::move(plus);
  D.minus = std::move(minus);
  D.period = period_of(D);
}

namespace {

void append(std::vector<PerfectMatching>& to, const std::vector<PerfectMatching>& from,
            const Point2& shift) {
  for (const auto& m : from) to.push_back(m.shifted(shift));
}

void push_copies(std::vector<PerfectMatching>& to, const PerfectMatching& m, Int count) {
  for (Int k = 0; k < count; ++k) to.push_back(m);
}

void finish(AlternatingDecomposition& D, const BandWeight2& W) {
  cancel_pairs(D);
  if (!(D.signed_sum() == W))
    throw std::logic_error("decomposition does not reproduce the weight");
}

}  // namespace

AlternatingDecomposition alternating_decomposition(const BandWeight2& W) {
  if (!is_riemann_weight(W)) throw Error(Errc::NotUnitSums, "alternating_decomposition");
  AlternatingDecomposition D;
  if (W.min_value() >= 0) {
    D.plus = {to_matching(W).canonical()};
    D.period = D.plus.front().period();
    return D;
  }
  BandWeight2 R = W;
  const Int C = -W.min_value();
  for (Int b = W.band_lo(); b <= W.band_hi(); ++b) {
    R = R + C * degree_matching(b).weight();
    push_copies(D.minus, degree_matching(b), C);
  }
  R = R.canonical();
  while (R.band_hi() - R.band_lo() >= 2) {
    const Int lo = R.band_lo(), P = R.period();
    PeriodicBinarySeq pos, neg;
    pos.bits.assign(P, 0);
    neg.bits.assign(P, 0);
    for (Int a = 0; a < P; ++a) {
      const Int v = R(a, lo - a);
      pos.bits[a] = v > 0;
      neg.bits[a] = v < 0;
    }
    const Point2 shift(0, lo);
    AlternatingDecomposition gp = u_gadget_decompose(pos);
    AlternatingDecomposition gn = u_gadget_decompose(neg);
    std::vector<PerfectMatching> gp_plus, gp_minus, gn_plus, gn_minus;
    append(gp_plus, gp.plus, shift);
    append(gp_minus, gp.minus, shift);
    append(gn_plus, gn.plus, shift);
    append(gn_minus, gn.minus, shift);
    R = R - (sum_weights(gp_plus) - sum_weights(gp_minus)) +
        (sum_weights(gn_plus) - sum_weights(gn_minus));
    R = R.canonical();
    D.plus.insert(D.plus.end(), gp_plus.begin(), gp_plus.end());
    D.minus.insert(D.minus.end(), gp_minus.begin(), gp_minus.end());
    D.plus.insert(D.plus.end(), gn_minus.begin(), gn_minus.end());
    D.minus.insert(D.minus.end(), gn_plus.begin(), gn_plus.end());
  }
  const Int lo = R.band_lo();
  const Int r = R.row_sum(0), c = R(0, lo);
  const PerfectMatching low = degree_matching(lo), high = degree_matching(lo + 1);
  if (!(R == c * low.weight() + (r - c) * high.weight()))
    throw std::logic_error("two-diagonal remainder is not a combination of degree matchings");
  push_copies(c >= 0 ? D.plus : D.minus, low, c >= 0 ? c : -c);
  push_copies(r - c >= 0 ? D.plus : D.minus, high, r - c >= 0 ? r - c : c - r);
  finish(D, W);
  return D;
}

AlternatingDecomposition hall_decomposition(const BandWeight2& W) {
  if (!is_riemann_weight(W)) throw Error(Errc::NotUnitSums, "hall_decomposition");
  AlternatingDecomposition D;
  BandWeight2 R = W;
  const Int C = std::max<Int>(0, -W.min_value());
  for (Int b = W.band_lo(); b <= W.band_hi() && C > 0; ++b) {
    R = R + C * degree_matching(b).weight();
    push_copies(D.minus, degree_matching(b), C);
  }
  D.plus = split_rfold(R);
  finish(D, W);
  return D;
}

}  // namespace rr
