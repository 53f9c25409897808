#ifndef RR_WEIGHTS_HPP
#define RR_WEIGHTS_HPP

#include <array>
#include <vector>

#include "rr/riemann.hpp"

namespace rr {

// Skew-periodic weight Z^2 -> Z, W(a + (p,-p)) = W(a), supported on
// band_lo <= deg(a) <= band_hi. table(r, t) holds W(r, band_lo + t - r).
class BandWeight2 {
 public:
  BandWeight2();
  BandWeight2(Int period, Int band_lo, IntMatrix table);

  static BandWeight2 zero(Int period = 1);
  // entries are (a1, a2, value); a1 may be any integer, it is reduced.
  static BandWeight2 from_entries(Int period, const std::vector<std::array<Int, 3>>& entries);

  Int operator()(Int a1, Int a2) const;
  Int operator()(const Point2& a) const { return (*this)(a(0), a(1)); }

  Int period() const { return period_; }
  Int band_lo() const { return band_lo_; }
  Int band_hi() const { return band_lo_ + table_.cols() - 1; }
  const IntMatrix& table() const { return table_; }

  Int row_sum(Int a1) const;
  Int col_sum(Int a2) const;
  Int min_value() const { return table_.minCoeff(); }
  Int max_value() const { return table_.maxCoeff(); }
  bool is_zero() const { return table_.isZero(); }

  // Nonzero entries (a1, a2, value) with a1 in [0, period), row-major.
  std::vector<std::array<Int, 3>> entries() const;

  BandWeight2 with_period(Int q) const;
  BandWeight2 with_band(Int lo, Int hi) const;
  // Smallest period and tightest band.
  BandWeight2 canonical() const;

 private:
  Int period_;
  Int band_lo_;
  IntMatrix table_;
};

BandWeight2 operator+(const BandWeight2& a, const BandWeight2& b);
BandWeight2 operator-(const BandWeight2& a, const BandWeight2& b);
BandWeight2 operator-(const BandWeight2& a);
BandWeight2 operator*(Int c, const BandWeight2& a);
bool operator==(const BandWeight2& a, const BandWeight2& b);

// pi(i + p) = pi(i) - p; the support is {(i, pi(i))}.
class PerfectMatching {
 public:
  PerfectMatching(Int period, std::vector<Int> pi);

  Int operator()(Int i) const;
  Int period() const { return static_cast<Int>(pi_.size()); }
  const std::vector<Int>& values() const { return pi_; }
  Int band_lo() const;
  Int band_hi() const;

  BandWeight2 weight() const;
  PerfectMatching with_period(Int q) const;
  PerfectMatching canonical() const;
  // Support moved by t: (i, pi(i)) -> (i + t1, pi(i) + t2).
  PerfectMatching shifted(const Point2& t) const;

 private:
  std::vector<Int> pi_;
};

bool operator==(const PerfectMatching& a, const PerfectMatching& b);
bool operator<(const PerfectMatching& a, const PerfectMatching& b);

// Fold r of a nonnegative weight whose row and column sums all equal r.
Int fold_of(const BandWeight2& W);

BandWeight2 weight_of(const RiemannFunction& f2);

Int sum_below(const BandWeight2& W, const Point2& d);

bool is_riemann_weight(const BandWeight2& W);

BandWeight2 dual_weight(const BandWeight2& W, const Point2& L);

PerfectMatching to_matching(const BandWeight2& W);

PerfectMatching dual_matching(const PerfectMatching& pi, const Point2& L);

// The Riemann function sW of a unit-sum weight.
RiemannFunction riemann_of(const BandWeight2& W);

bool check_dual_weight_identity(const RiemannFunction& f2, const Point2& K, const Window& w);

BandWeight2 sum_weights(const std::vector<PerfectMatching>& ms);

}  // namespace rr

#endif
