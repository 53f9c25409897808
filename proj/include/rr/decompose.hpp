#ifndef RR_DECOMPOSE_HPP
#define RR_DECOMPOSE_HPP

#include <vector>

#include "rr/weights.hpp"

namespace rr {

struct AlternatingDecomposition {
  std::vector<PerfectMatching> plus;
  std::vector<PerfectMatching> minus;
  Int period = 1;

  BandWeight2 signed_sum() const;
};

struct PeriodicBinarySeq {
  std::vector<int> bits;

  Int period() const { return static_cast<Int>(bits.size()); }
  int operator()(Int a) const { return bits[mod(a, period())]; }
};

PerfectMatching degree_matching(Int b);

// U_S(d) = sum_i U(d - (i,-i)) s_i, so that U_S(a,-a) = s_a.
BandWeight2 u_gadget(const PeriodicBinarySeq& S);

std::vector<PerfectMatching> split_rfold(const BandWeight2& W);

AlternatingDecomposition u_gadget_decompose(const PeriodicBinarySeq& S);

AlternatingDecomposition alternating_decomposition(const BandWeight2& W);

// A second route: shift to a nonnegative r-fold weight, then split it.
AlternatingDecomposition hall_decomposition(const BandWeight2& W);

// Removes matchings that occur on both sides.
void cancel_pairs(AlternatingDecomposition& D);

}  // namespace rr

#endif
