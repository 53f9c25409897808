#ifndef RR_NVAR_HPP
#define RR_NVAR_HPP

#include <string>
#include <vector>

#include "rr/matchdiag.hpp"

namespace rr {

// f restricted to coordinates (i, j) around base, with its weight and a
// decomposition of that weight into perfect matchings.
struct RestrictionModel {
  Eigen::Index i = 0;
  Eigen::Index j = 1;
  Point base;
  BandWeight2 weight;
  AlternatingDecomposition decomposition;
};

RestrictionModel restriction_model(const RiemannFunction& f, Eigen::Index i, Eigen::Index j,
                                   const Point& base);

// Virtual betti numbers of the restriction at d, evaluated at (0,0).
VirtualBetti betti_at(const RiemannFunction& f, const Point& d, Eigen::Index i = 0,
                      Eigen::Index j = 1);

// The same class through the base with coordinates i, j zeroed, evaluated
// at (d_i, d_j).
VirtualBetti betti_at_canonical(const RiemannFunction& f, const Point& d, Eigen::Index i = 0,
                                Eigen::Index j = 1);

struct GlueReport {
  struct PairResult {
    Eigen::Index i;
    Eigen::Index j;
    VirtualBetti betti;
    Int period;
  };
  std::vector<PairResult> pairs;
  bool triples_agree = true;
  bool axis_agree = true;
  bool zipper_agree = true;
  std::vector<std::string> failures;

  bool ok() const { return triples_agree && axis_agree && zipper_agree; }
};

GlueReport glue_report(const RiemannFunction& f, const Point& d);
inline bool glue_check(const RiemannFunction& f, const Point& d) { return glue_report(f, d).ok(); }

bool nonvirtual_glue_iso(const RiemannFunction& f, const Point& d, Eigen::Index i, Eigen::Index j,
                         Eigen::Index j2);

bool restriction_dual_identity(const RiemannFunction& f, const Point& K, const Point& d,
                               const Window& w);

struct NvarDuality {
  VirtualBetti original;
  VirtualBetti dual;
  bool holds = false;
};

NvarDuality nvar_duality_report(const RiemannFunction& f, const Point& K, const Point& d);
inline bool nvar_duality(const RiemannFunction& f, const Point& K, const Point& d) {
  return nvar_duality_report(f, K, d).holds;
}

}  // namespace rr

#endif
