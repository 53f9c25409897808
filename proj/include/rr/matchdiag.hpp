#ifndef RR_MATCHDIAG_HPP
#define RR_MATCHDIAG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rr/decompose.hpp"
#include "rr/kdiagram.hpp"

namespace rr {

struct ExtNat {
  bool infinite = false;
  Int value = 0;

  static ExtNat inf() { return {true, 0}; }
  static ExtNat of(Int v) { return {false, v}; }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }
};

struct Betti {
  Int b0 = 0;
  Int b1 = 0;
  Int chi() const { return b0 - b1; }
  friend bool operator==(const Betti& a, const Betti& b) { return a.b0 == b.b0 && a.b1 == b.b1; }
};

using Matchings = std::vector<PerfectMatching>;

Betti betti_closed(const Matchings& ms, const Point2& d);
inline Betti betti_closed(const PerfectMatching& m, const Point2& d) {
  return betti_closed(Matchings{m}, d);
}

Int chi(const Matchings& ms, const Point2& d);

struct RowWindow {
  Int lo;
  Int hi;
};

// [min(d1, lo - d2) - slack, max(d1 + 1, hi - d2) + slack] over the band
// envelope of all matchings.
RowWindow truncation_rows(const Matchings& ms, const Point2& d, Int slack);

// The finite model on rows R: A1 = R, B1 = rows <= d1, B3 = support rows,
// A2 = their columns, B2 = those columns <= d2.
template <class K>
Diagram<typename K::Scalar> truncate(const K& k, const PerfectMatching& m, const Point2& d,
                                     const RowWindow& R) {
  using Scalar = typename K::Scalar;
  const Eigen::Index n = R.hi - R.lo + 1;
  std::vector<Int> cols;
  for (Int i = R.lo; i <= R.hi; ++i) cols.push_back(m(i));
  std::sort(cols.begin(), cols.end());
  auto col_pos = [&](Int c) {
    return static_cast<Eigen::Index>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
  };
  const Eigen::Index nb1 = std::clamp<Int>(d(0) - R.lo + 1, 0, n);
  const Eigen::Index nb2 = col_pos(d(1) + 1);
  Diagram<Scalar> F = shaped(k.from_int(1), {nb1, nb2, n, n, n});
  for (Eigen::Index j = 0; j < nb1; ++j) F.rho11(j, j) = k.from_int(1);
  for (Eigen::Index j = 0; j < nb2; ++j) F.rho22(j, j) = k.from_int(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    F.rho31(i, i) = k.from_int(1);
    F.rho32(col_pos(m(R.lo + i)), i) = k.from_int(1);
  }
  return F;
}

template <class K>
Diagram<typename K::Scalar> truncate(const K& k, const Matchings& ms, const Point2& d, Int slack) {
  using Scalar = typename K::Scalar;
  const RowWindow R = truncation_rows(ms, d, slack);
  std::vector<Diagram<Scalar>> parts;
  for (const auto& m : ms) parts.push_back(truncate(k, m, d, R));
  return direct_sum(parts, k.from_int(1));
}

template <class K>
Betti betti_truncated(const K& k, const Matchings& ms, const Point2& d, Int slack) {
  const auto [b0, b1] = betti(truncate(k, ms, d, slack));
  return {static_cast<Int>(b0), static_cast<Int>(b1)};
}

struct GraphSummary {
  Int core_vertices = 0;
  Int core_edges = 0;
  Int components = 0;
  Int cycle_rank = 0;
  Int v0_loops = 0;
  bool infinite_components = false;
  bool infinite_cycles = false;
};

struct GraphBetti {
  ExtNat b0;
  ExtNat b1;
  GraphSummary graph;
};

GraphBetti graph_betti(const BandWeight2& W, const Point2& d);

bool zipper_check(const PerfectMatching& pi, const PerfectMatching& pj, const Point2& d);

// The same condition read off sW: f(a, d2) = f'(a, d2) for a <= d1.
bool zipper_condition_f(const PerfectMatching& pi, const PerfectMatching& pj, const Point2& d);

bool zipper_check_multi(const Matchings& ws, const Matchings& vs, const Point2& d);

template <class Scalar>
struct ZipperIso {
  Diagram<Scalar> source;
  Diagram<Scalar> target;
  Morphism<Scalar> phi;
};

// Explicit morphism of truncations with identity A1 block. It exists when
// pi(i) <= d2 <=> pi'(i) <= d2 on every row of the common window.
template <class K>
std::optional<ZipperIso<typename K::Scalar>> zipper_morphism(const K& k, const PerfectMatching& pi,
                                                             const PerfectMatching& pj,
                                                             const Point2& d, Int slack) {
  using Scalar = typename K::Scalar;
  const RowWindow R = truncation_rows(Matchings{pi, pj}, d, slack);
  for (Int i = R.lo; i <= R.hi; ++i)
    if ((pi(i) <= d(1)) != (pj(i) <= d(1))) return std::nullopt;
  ZipperIso<Scalar> z{truncate(k, pi, d, R), truncate(k, pj, d, R), {}};
  const Eigen::Index n = R.hi - R.lo + 1;
  auto sorted_cols = [&](const PerfectMatching& m) {
    std::vector<Int> c;
    for (Int i = R.lo; i <= R.hi; ++i) c.push_back(m(i));
    std::sort(c.begin(), c.end());
    return c;
  };
  const std::vector<Int> ci = sorted_cols(pi), cj = sorted_cols(pj);
  auto pos = [](const std::vector<Int>& c, Int x) {
    return static_cast<Eigen::Index>(std::lower_bound(c.begin(), c.end(), x) - c.begin());
  };
  for (Place P : kPlaces) z.phi.at(P) = zeros(k, z.target.dim(P), z.source.dim(P));
  z.phi.at(Place::A1) = identity(k, n);
  z.phi.at(Place::B3) = identity(k, n);
  z.phi.at(Place::B1) = identity(k, z.source.dim(Place::B1));
  for (Int i = R.lo; i <= R.hi; ++i) {
    const Eigen::Index s = pos(ci, pi(i)), t = pos(cj, pj(i));
    z.phi.at(Place::A2)(t, s) = k.from_int(1);
    if (pi(i) <= d(1)) z.phi.at(Place::B2)(t, s) = k.from_int(1);
  }
  return z;
}

struct VirtualMatchingDiagram {
  Matchings plus;
  Matchings minus;
  Point2 d = Point2::Zero();
};

struct VirtualBetti {
  Int b0 = 0;
  Int b1 = 0;
  Int chi = 0;
  friend bool operator==(const VirtualBetti& a, const VirtualBetti& b) {
    return a.b0 == b.b0 && a.b1 == b.b1 && a.chi == b.chi;
  }
};

VirtualBetti virtual_betti(const VirtualMatchingDiagram& V);

VirtualMatchingDiagram virtual_of(const AlternatingDecomposition& D, const Point2& d);

// Signed counts of indicator diagrams, kept as two nonnegative weights.
struct IndicatorMultiset {
  BandWeight2 positive;
  BandWeight2 negative;

  BandWeight2 signed_weight() const { return positive - negative; }
  // The pair (max(W,0), max(-W,0)) of the signed weight.
  IndicatorMultiset canonical() const;
  // b0 = sum over a <= d, b1 = sum over a >= d + (1,1), as signed counts.
  VirtualBetti betti(const Point2& d) const;
};

IndicatorMultiset indicator_multiset(const VirtualMatchingDiagram& V);
IndicatorMultiset indicator_multiset(const BandWeight2& W);

Matchings translate_ref(const Matchings& ms, const Point2& t);

struct DualityResult {
  bool holds = false;
  Betti original;
  Betti dual;
  Int hom_to_dualizing = 0;
};

template <class K>
DualityResult duality_check(const K& k, const PerfectMatching& pi, const Point2& Kd,
                            const Point2& d, Int slack = 1) {
  DualityResult r;
  const Point2 L = Kd + Point2(1, 1);
  r.original = betti_closed(pi, d);
  r.dual = betti_closed(dual_matching(pi, L), Kd - d);
  const auto T = truncate(k, Matchings{pi}, d, slack);
  r.hom_to_dualizing = hom_dim(T, basic_diagram(k, 3));
  r.holds = r.original.b0 == r.dual.b1 && r.original.b1 == r.dual.b0 &&
            r.hom_to_dualizing == r.original.b1;
  return r;
}

}  // namespace rr

#endif
