#ifndef RR_KDIAGRAM_HPP
#define RR_KDIAGRAM_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rr/linalg.hpp"

namespace rr {

enum class Place { B1 = 0, B2 = 1, B3 = 2, A1 = 3, A2 = 4 };

constexpr std::array<Place, 5> kPlaces{Place::B1, Place::B2, Place::B3, Place::A1, Place::A2};

inline const char* place_name(Place P) {
  static const char* names[] = {"B1", "B2", "B3", "A1", "A2"};
  return names[static_cast<int>(P)];
}

inline std::optional<Place> parse_place(const std::string& s) {
  for (Place P : kPlaces)
    if (s == place_name(P)) return P;
  return std::nullopt;
}

// Five spaces B1,B2,B3,A1,A2 with rho11: B1->A1, rho22: B2->A2,
// rho31: B3->A1, rho32: B3->A2. `one` fixes the field.
template <class Scalar>
struct Diagram {
  std::array<Eigen::Index, 5> dims{};
  Mat<Scalar> rho11, rho22, rho31, rho32;
  Scalar one = Scalar(1);

  Eigen::Index dim(Place P) const { return dims[static_cast<int>(P)]; }

  void validate() const {
    auto check = [&](const Mat<Scalar>& m, Place to, Place from) {
      if (m.rows() != dim(to) || m.cols() != dim(from))
        throw Error(Errc::InvalidInput, std::string("restriction map shape at ") + place_name(from) +
                                            "->" + place_name(to));
    };
    check(rho11, Place::A1, Place::B1);
    check(rho22, Place::A2, Place::B2);
    check(rho31, Place::A1, Place::B3);
    check(rho32, Place::A2, Place::B3);
  }
};

template <class Scalar>
struct Morphism {
  std::array<Mat<Scalar>, 5> phi;
  const Mat<Scalar>& at(Place P) const { return phi[static_cast<int>(P)]; }
  Mat<Scalar>& at(Place P) { return phi[static_cast<int>(P)]; }
};

template <class Scalar>
struct CohomologyResult {
  Eigen::Index b0 = 0;
  Eigen::Index b1 = 0;
  Mat<Scalar> kernel;
  std::vector<Eigen::Index> cokernel;
  Eigen::Index chi() const { return b0 - b1; }
};

template <class Scalar>
struct HomResult {
  Eigen::Index dim = 0;
  std::vector<Morphism<Scalar>> basis;
};

template <class K>
Mat<typename K::Scalar> zeros(const K& k, Eigen::Index r, Eigen::Index c) {
  return Mat<typename K::Scalar>::Constant(r, c, k.from_int(0));
}

template <class K>
Mat<typename K::Scalar> identity(const K& k, Eigen::Index n) {
  Mat<typename K::Scalar> m = zeros(k, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = k.from_int(1);
  return m;
}

template <class Scalar>
Diagram<Scalar> shaped(const Scalar& one, std::array<Eigen::Index, 5> dims) {
  Diagram<Scalar> F;
  F.one = one;
  F.dims = dims;
  const Scalar z = one - one;
  auto d = [&](Place P) { return dims[static_cast<int>(P)]; };
  F.rho11 = Mat<Scalar>::Constant(d(Place::A1), d(Place::B1), z);
  F.rho22 = Mat<Scalar>::Constant(d(Place::A2), d(Place::B2), z);
  F.rho31 = Mat<Scalar>::Constant(d(Place::A1), d(Place::B3), z);
  F.rho32 = Mat<Scalar>::Constant(d(Place::A2), d(Place::B3), z);
  return F;
}

template <class Scalar>
Mat<Scalar> identity_like(const Scalar& one, Eigen::Index n) {
  Mat<Scalar> m = Mat<Scalar>::Constant(n, n, one - one);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

// (b1,b2,b3) -> (rho11 b1 - rho31 b3, rho22 b2 - rho32 b3).
template <class Scalar>
Mat<Scalar> differential(const Diagram<Scalar>& F) {
  const Eigen::Index b1 = F.dim(Place::B1), b2 = F.dim(Place::B2), b3 = F.dim(Place::B3);
  const Eigen::Index a1 = F.dim(Place::A1), a2 = F.dim(Place::A2);
  Mat<Scalar> D = Mat<Scalar>::Constant(a1 + a2, b1 + b2 + b3, F.one - F.one);
  D.block(0, 0, a1, b1) = F.rho11;
  D.block(0, b1 + b2, a1, b3) = -F.rho31;
  D.block(a1, b1, a2, b2) = F.rho22;
  D.block(a1, b1 + b2, a2, b3) = -F.rho32;
  return D;
}

template <class Scalar>
CohomologyResult<Scalar> cohomology(const Diagram<Scalar>& F) {
  const Mat<Scalar> D = differential(F);
  CohomologyResult<Scalar> h;
  h.kernel = kernel_basis<Scalar>(D, F.one);
  h.cokernel = cokernel_coordinates<Scalar>(D, F.one);
  h.b0 = h.kernel.cols();
  h.b1 = static_cast<Eigen::Index>(h.cokernel.size());
  return h;
}

template <class Scalar>
std::pair<Eigen::Index, Eigen::Index> betti(const Diagram<Scalar>& F) {
  const Mat<Scalar> D = differential(F);
  const Eigen::Index r = echelon<Scalar>(D, F.one).rank();
  return {D.cols() - r, D.rows() - r};
}

// Basic diagram k_{/S}: bit 0 of S removes B1, bit 1 removes B2.
template <class K>
Diagram<typename K::Scalar> basic_diagram(const K& k, unsigned S) {
  using Scalar = typename K::Scalar;
  const Eigen::Index b1 = (S & 1u) ? 0 : 1, b2 = (S & 2u) ? 0 : 1;
  Diagram<Scalar> F = shaped(k.from_int(1), {b1, b2, 1, 1, 1});
  F.rho11 = identity(k, 1).leftCols(b1);
  F.rho22 = identity(k, 1).leftCols(b2);
  F.rho31 = identity(k, 1);
  F.rho32 = identity(k, 1);
  return F;
}

template <class K>
Diagram<typename K::Scalar> constant_diagram(const K& k) {
  return basic_diagram(k, 0);
}

// I_{d >= a}: B_j present iff a_j <= d_j.
template <class K>
Diagram<typename K::Scalar> indicator(const K& k, const Point2& d, const Point2& a) {
  unsigned S = 0;
  if (a(0) > d(0)) S |= 1u;
  if (a(1) > d(1)) S |= 2u;
  return basic_diagram(k, S);
}

template <class K>
Diagram<typename K::Scalar> skyscraper(const K& k, Place P, Eigen::Index n) {
  using Scalar = typename K::Scalar;
  std::array<Eigen::Index, 5> dims{};
  auto set = [&](Place Q) { dims[static_cast<int>(Q)] = n; };
  set(P);
  if (P == Place::A1) set(Place::B1), set(Place::B3);
  if (P == Place::A2) set(Place::B2), set(Place::B3);
  Diagram<Scalar> F = shaped(k.from_int(1), dims);
  if (P == Place::A1) F.rho11 = identity(k, n), F.rho31 = identity(k, n);
  if (P == Place::A2) F.rho22 = identity(k, n), F.rho32 = identity(k, n);
  return F;
}

template <class K>
Diagram<typename K::Scalar> coskyscraper(const K& k, Place P, Eigen::Index n) {
  using Scalar = typename K::Scalar;
  std::array<Eigen::Index, 5> dims{};
  auto set = [&](Place Q) { dims[static_cast<int>(Q)] = n; };
  set(P);
  if (P == Place::B1) set(Place::A1);
  if (P == Place::B2) set(Place::A2);
  if (P == Place::B3) set(Place::A1), set(Place::A2);
  Diagram<Scalar> F = shaped(k.from_int(1), dims);
  if (P == Place::B1) F.rho11 = identity(k, n);
  if (P == Place::B2) F.rho22 = identity(k, n);
  if (P == Place::B3) F.rho31 = identity(k, n), F.rho32 = identity(k, n);
  return F;
}

template <class Scalar>
Diagram<Scalar> direct_sum(const std::vector<Diagram<Scalar>>& Fs, const Scalar& one) {
  std::array<Eigen::Index, 5> dims{};
  for (const auto& F : Fs)
    for (int i = 0; i < 5; ++i) dims[i] += F.dims[i];
  Diagram<Scalar> S = shaped(one, dims);
  std::array<Eigen::Index, 5> at{};
  for (const auto& F : Fs) {
    auto off = [&](Place P) { return at[static_cast<int>(P)]; };
    S.rho11.block(off(Place::A1), off(Place::B1), F.rho11.rows(), F.rho11.cols()) = F.rho11;
    S.rho22.block(off(Place::A2), off(Place::B2), F.rho22.rows(), F.rho22.cols()) = F.rho22;
    S.rho31.block(off(Place::A1), off(Place::B3), F.rho31.rows(), F.rho31.cols()) = F.rho31;
    S.rho32.block(off(Place::A2), off(Place::B3), F.rho32.rows(), F.rho32.cols()) = F.rho32;
    for (int i = 0; i < 5; ++i) at[i] += F.dims[i];
  }
  return S;
}

template <class Scalar>
Diagram<Scalar> direct_sum(const std::vector<Diagram<Scalar>>& Fs) {
  return direct_sum(Fs, Fs.empty() ? Scalar(1) : Fs.front().one);
}

struct Edge {
  Place from;
  Place to;
};

constexpr std::array<Edge, 4> kEdges{Edge{Place::B1, Place::A1}, Edge{Place::B2, Place::A2},
                                     Edge{Place::B3, Place::A1}, Edge{Place::B3, Place::A2}};

template <class Scalar>
const Mat<Scalar>& restriction(const Diagram<Scalar>& F, int edge) {
  switch (edge) {
    case 0: return F.rho11;
    case 1: return F.rho22;
    case 2: return F.rho31;
    default: return F.rho32;
  }
}

template <class Scalar>
bool is_morphism(const Morphism<Scalar>& phi, const Diagram<Scalar>& F, const Diagram<Scalar>& G) {
  for (Place P : kPlaces)
    if (phi.at(P).rows() != G.dim(P) || phi.at(P).cols() != F.dim(P)) return false;
  for (int e = 0; e < 4; ++e) {
    const Mat<Scalar> lhs = restriction(G, e) * phi.at(kEdges[e].from);
    const Mat<Scalar> rhs = phi.at(kEdges[e].to) * restriction(F, e);
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
      for (Eigen::Index j = 0; j < lhs.cols(); ++j)
        if (!is_zero(Scalar(lhs(i, j) - rhs(i, j)))) return false;
  }
  return true;
}

template <class Scalar>
Morphism<Scalar> compose(const Morphism<Scalar>& psi, const Morphism<Scalar>& phi) {
  Morphism<Scalar> out;
  for (Place P : kPlaces) out.at(P) = psi.at(P) * phi.at(P);
  return out;
}

template <class Scalar>
bool is_isomorphism(const Morphism<Scalar>& phi, const Diagram<Scalar>& F,
                    const Diagram<Scalar>& G) {
  if (!is_morphism(phi, F, G)) return false;
  for (Place P : kPlaces) {
    if (F.dim(P) != G.dim(P)) return false;
    if (echelon<Scalar>(phi.at(P), F.one).rank() != F.dim(P)) return false;
  }
  return true;
}

// Unknowns are the entries of phi(P), column-major, in place order.
template <class Scalar>
HomResult<Scalar> hom(const Diagram<Scalar>& F, const Diagram<Scalar>& G) {
  std::array<Eigen::Index, 5> off{};
  Eigen::Index nvars = 0;
  for (Place P : kPlaces) {
    off[static_cast<int>(P)] = nvars;
    nvars += G.dim(P) * F.dim(P);
  }
  Eigen::Index neqs = 0;
  for (const Edge& e : kEdges) neqs += G.dim(e.to) * F.dim(e.from);
  const Scalar zero = F.one - F.one;
  Mat<Scalar> A = Mat<Scalar>::Constant(neqs, nvars, zero);
  Eigen::Index row0 = 0;
  for (int ei = 0; ei < 4; ++ei) {
    const Edge& e = kEdges[ei];
    const Mat<Scalar>& rG = restriction(G, ei);
    const Mat<Scalar>& rF = restriction(F, ei);
    const Eigen::Index gi = G.dim(e.from), gj = G.dim(e.to), fi = F.dim(e.from), fj = F.dim(e.to);
    const Eigen::Index ob = off[static_cast<int>(e.from)], oa = off[static_cast<int>(e.to)];
    for (Eigen::Index r = 0; r < gj; ++r)
      for (Eigen::Index c = 0; c < fi; ++c) {
        const Eigen::Index eq = row0 + r + c * gj;
        for (Eigen::Index s = 0; s < gi; ++s) A(eq, ob + s + c * gi) += rG(r, s);
        for (Eigen::Index t = 0; t < fj; ++t) A(eq, oa + r + t * gj) -= rF(t, c);
      }
    row0 += gj * fi;
  }
  const Mat<Scalar> K = kernel_basis<Scalar>(A, F.one);
  HomResult<Scalar> h;
  h.dim = K.cols();
  for (Eigen::Index k = 0; k < K.cols(); ++k) {
    Morphism<Scalar> phi;
    for (Place P : kPlaces) {
      const Eigen::Index g = G.dim(P), f = F.dim(P), o = off[static_cast<int>(P)];
      phi.at(P) = Mat<Scalar>::Constant(g, f, zero);
      for (Eigen::Index c = 0; c < f; ++c)
        for (Eigen::Index r = 0; r < g; ++r) phi.at(P)(r, c) = K(o + r + c * g, k);
    }
    h.basis.push_back(std::move(phi));
  }
  return h;
}

template <class Scalar>
Eigen::Index hom_dim(const Diagram<Scalar>& F, const Diagram<Scalar>& G) {
  return hom(F, G).dim;
}

template <class Scalar>
Mat<Scalar> global_sections(const Diagram<Scalar>& F) {
  return kernel_basis<Scalar>(differential(F), F.one);
}

// Ext via P1 -> P0 -> F with P0 = sum_P CoSky_P(F(P)) and P1 the kernel of
// the canonical surjection (nonzero only at A1, A2).
template <class Scalar>
std::pair<Eigen::Index, Eigen::Index> ext_pair(const Diagram<Scalar>& F, const Diagram<Scalar>& G) {
  const Scalar one = F.one, zero = one - one;
  auto d = [&](Place P) { return F.dim(P); };
  auto g = [&](Place P) { return G.dim(P); };
  auto surjection = [&](Place A, Place Bi, const Mat<Scalar>& rA, const Mat<Scalar>& r3) {
    Mat<Scalar> eps = Mat<Scalar>::Constant(d(A), d(A) + d(Bi) + d(Place::B3), zero);
    eps.leftCols(d(A)) = identity_like(one, d(A));
    eps.middleCols(d(A), d(Bi)) = rA;
    eps.rightCols(d(Place::B3)) = r3;
    return eps;
  };
  const Mat<Scalar> k1 = kernel_basis<Scalar>(surjection(Place::A1, Place::B1, F.rho11, F.rho31), one);
  const Mat<Scalar> k2 = kernel_basis<Scalar>(surjection(Place::A2, Place::B2, F.rho22, F.rho32), one);

  std::array<Eigen::Index, 5> off{};
  Eigen::Index n0 = 0;
  for (Place P : kPlaces) {
    off[static_cast<int>(P)] = n0;
    n0 += g(P) * d(P);
  }
  const Eigen::Index t1 = g(Place::A1) * k1.cols(), t2 = g(Place::A2) * k2.cols();
  Mat<Scalar> nu = Mat<Scalar>::Constant(t1 + t2, n0, zero);
  for (Place P : kPlaces) {
    for (Eigen::Index c = 0; c < d(P); ++c)
      for (Eigen::Index r = 0; r < g(P); ++r) {
        std::array<Mat<Scalar>, 5> phi;
        for (Place Q : kPlaces) phi[static_cast<int>(Q)] = Mat<Scalar>::Constant(g(Q), d(Q), zero);
        phi[static_cast<int>(P)](r, c) = one;
        auto at = [&](Place Q) -> const Mat<Scalar>& { return phi[static_cast<int>(Q)]; };
        const Mat<Scalar> Phi1 = hcat<Scalar>(
            {at(Place::A1), G.rho11 * at(Place::B1), G.rho31 * at(Place::B3)}, g(Place::A1), zero);
        const Mat<Scalar> Phi2 = hcat<Scalar>(
            {at(Place::A2), G.rho22 * at(Place::B2), G.rho32 * at(Place::B3)}, g(Place::A2), zero);
        const Mat<Scalar> y1 = Phi1 * k1, y2 = Phi2 * k2;
        const Eigen::Index col = off[static_cast<int>(P)] + r + c * g(P);
        for (Eigen::Index j = 0; j < y1.cols(); ++j)
          for (Eigen::Index i = 0; i < y1.rows(); ++i) nu(i + j * y1.rows(), col) = y1(i, j);
        for (Eigen::Index j = 0; j < y2.cols(); ++j)
          for (Eigen::Index i = 0; i < y2.rows(); ++i) nu(t1 + i + j * y2.rows(), col) = y2(i, j);
      }
  }
  const Eigen::Index rk = echelon<Scalar>(nu, one).rank();
  return {n0 - rk, t1 + t2 - rk};
}

// Resolution 0 -> CoSky_A1(k) + CoSky_A2(k) -> CoSky_B1(k) + CoSky_B2(k) + CoSky_B3(k) -> k.
template <class Scalar>
struct ConstantResolution {
  Diagram<Scalar> P1;
  Diagram<Scalar> P0;
  Morphism<Scalar> mu1;
};

template <class K>
ConstantResolution<typename K::Scalar> constant_resolution(const K& k) {
  using Scalar = typename K::Scalar;
  ConstantResolution<Scalar> R;
  R.P1 = direct_sum<Scalar>({coskyscraper(k, Place::A1, 1), coskyscraper(k, Place::A2, 1)},
                            k.from_int(1));
  R.P0 = direct_sum<Scalar>({coskyscraper(k, Place::B1, 1), coskyscraper(k, Place::B2, 1),
                             coskyscraper(k, Place::B3, 1)},
                            k.from_int(1));
  // alpha_{i,j}: 1 on B_i, -1 on B3, 0 on the other B.
  for (Place P : kPlaces) R.mu1.at(P) = zeros(k, R.P0.dim(P), R.P1.dim(P));
  R.mu1.at(Place::A1)(0, 0) = k.from_int(1);   // B1 component of P0(A1)
  R.mu1.at(Place::A1)(1, 0) = k.from_int(-1);  // B3 component
  R.mu1.at(Place::A2)(0, 0) = k.from_int(1);   // B2 component of P0(A2)
  R.mu1.at(Place::A2)(1, 0) = k.from_int(-1);  // B3 component
  return R;
}

// The map Hom(P0, F) -> Hom(P1, F) induced by mu1, written in the
// coordinates F(B1)+F(B2)+F(B3) -> F(A1)+F(A2).
template <class K>
Mat<typename K::Scalar> constant_resolution_hom_map(const K& k,
                                                    const Diagram<typename K::Scalar>& F) {
  using Scalar = typename K::Scalar;
  const auto R = constant_resolution(k);
  const HomResult<Scalar> h = hom(R.P0, F);
  const Eigen::Index nb = F.dim(Place::B1) + F.dim(Place::B2) + F.dim(Place::B3);
  const Eigen::Index na = F.dim(Place::A1) + F.dim(Place::A2);
  Mat<Scalar> X = zeros(k, nb, h.dim), Y = zeros(k, na, h.dim);
  for (Eigen::Index c = 0; c < h.dim; ++c) {
    const Morphism<Scalar>& psi = h.basis[c];
    const Scalar z = k.from_int(0);
    X.col(c) = vcat<Scalar>({psi.at(Place::B1), psi.at(Place::B2), psi.at(Place::B3)}, 1, z);
    const Morphism<Scalar> m = compose(psi, R.mu1);
    Y.col(c) = vcat<Scalar>({m.at(Place::A1), m.at(Place::A2)}, 1, z);
  }
  if (h.dim != nb) throw std::logic_error("Hom(P0,F) does not match F(B1)+F(B2)+F(B3)");
  const Mat<Scalar> aug = hcat<Scalar>({X, identity(k, nb)}, nb, k.from_int(0));
  const Echelon<Scalar> E = echelon<Scalar>(aug, F.one);
  const Mat<Scalar> Xinv = E.R.rightCols(nb);
  return Y * Xinv;
}

}  // namespace rr

#endif
