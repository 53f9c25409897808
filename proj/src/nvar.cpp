#include "rr/nvar.hpp"

namespace rr {

RestrictionModel restriction_model(const RiemannFunction& f, Eigen::Index i, Eigen::Index j,
                                   const Point& base) {
  RestrictionModel m;
  m.i = i;
  m.j = j;
  m.base = base;
  m.weight = weight_of(restrict_two(f, i, j, base));
  m.decomposition = alternating_decomposition(m.weight);
  return m;
}

namespace {

VirtualBetti model_betti(const RestrictionModel& m, const Point2& at) {
  return virtual_betti({m.decomposition.plus, m.decomposition.minus, at});
}

std::string pair_name(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

VirtualBetti betti_at(const RiemannFunction& f, const Point& d, Eigen::Index i, Eigen::Index j) {
  return model_betti(restriction_model(f, i, j, d), Point2::Zero());
}

VirtualBetti betti_at_canonical(const RiemannFunction& f, const Point& d, Eigen::Index i,
                                Eigen::Index j) {
  Point base = d;
  base(i) = 0;
  base(j) = 0;
  return model_betti(restriction_model(f, i, j, base), Point2(d(i), d(j)));
}

GlueReport glue_report(const RiemannFunction& f, const Point& d) {
  const Eigen::Index n = f.arity();
  if (n < 2) throw Error(Errc::InvalidInput, "gluing needs at least two variables");
  if (d.size() != n) throw Error(Errc::ArityMismatch, "glue_check base");
  GlueReport r;
  std::vector<std::vector<RestrictionModel>> models(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        models[i].emplace_back();
        continue;
      }
      try {
        models[i].push_back(restriction_model(f, i, j, d));
      } catch (const Error& e) {
        r.triples_agree = false;
        r.failures.push_back("restriction " + pair_name(i, j) + ": " + e.what());
        return r;
      }
    }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const VirtualBetti b = model_betti(models[i][j], Point2::Zero());
      r.pairs.push_back({i, j, b, models[i][j].weight.period()});
      if (!(b == r.pairs.front().betti)) {
        r.triples_agree = false;
        r.failures.push_back("betti triple differs at pair " + pair_name(i, j));
      }
    }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index j2 = j + 1; j2 < n; ++j2) {
        if (j == i || j2 == i) continue;
        const RestrictionModel& A = models[i][j];
        const RestrictionModel& B = models[i][j2];
        const Int lo = std::min(A.weight.band_lo(), B.weight.band_lo()) - 2;
        const Int hi = std::max(A.weight.band_hi(), B.weight.band_hi()) + 2;
        for (Int a = lo; a <= hi; ++a) {
          const Point2 at(a, 0);
          const Int direct = f(d + a * unit(n, i));
          if (sum_below(A.weight, at) != direct || sum_below(B.weight, at) != direct) {
            r.axis_agree = false;
            r.failures.push_back("axis values differ at a=" + std::to_string(a) + " for " +
                                 pair_name(i, j) + " and " + pair_name(i, j2));
            break;
          }
        }
        Matchings left = A.decomposition.plus, right = B.decomposition.plus;
        left.insert(left.end(), B.decomposition.minus.begin(), B.decomposition.minus.end());
        right.insert(right.end(), A.decomposition.minus.begin(), A.decomposition.minus.end());
        if (!zipper_check_multi(left, right, Point2::Zero())) {
          r.zipper_agree = false;
          r.failures.push_back("zipper counts differ for " + pair_name(i, j) + " and " +
                               pair_name(i, j2));
        }
      }
  return r;
}

bool nonvirtual_glue_iso(const RiemannFunction& f, const Point& d, Eigen::Index i, Eigen::Index j,
                         Eigen::Index j2) {
  auto matching = [&](Eigen::Index jj) {
    const BandWeight2 W = weight_of(restrict_two(f, i, jj, d));
    try {
      return to_matching(W);
    } catch (const Error&) {
      throw Error(Errc::NotAMatching, "restriction " + pair_name(i, jj) + " is not a perfect matching");
    }
  };
  const PerfectMatching A = matching(j), B = matching(j2);
  if (!zipper_check(A, B, Point2::Zero())) return false;
  const Rationals k;
  const auto z = zipper_morphism(k, A, B, Point2::Zero(), 1);
  return z && is_isomorphism(z->phi, z->source, z->target);
}

bool restriction_dual_identity(const RiemannFunction& f, const Point& K, const Point& d,
                               const Window& w) {
  const Eigen::Index n = f.arity();
  if (K.size() != n || d.size() != n) throw Error(Errc::ArityMismatch, "restriction_dual_identity");
  Point dp = d, Kp = K;
  dp.head(2).setZero();
  Kp.head(2).setZero();
  const RiemannFunction lhs = restrict_two(dual_function(f, K), 0, 1, Kp - dp);
  const RiemannFunction rhs = dual_function(restrict_two(f, 0, 1, dp), point({K(0), K(1)}));
  bool ok = true;
  w.for_each([&](const Point& a) { ok = ok && lhs(a) == rhs(a); });
  return ok;
}

NvarDuality nvar_duality_report(const RiemannFunction& f, const Point& K, const Point& d) {
  NvarDuality r;
  r.original = betti_at(f, d);
  r.dual = betti_at(dual_function(f, K), K - d);
  r.holds = r.original.b0 == r.dual.b1 && r.original.b1 == r.dual.b0;
  return r;
}

}  // namespace rr
