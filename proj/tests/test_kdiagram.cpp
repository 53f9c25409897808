#include <doctest.h>

#include "support.hpp"

using namespace rr;
using rrtest::Rng;

namespace {

const Rationals Q;

using QDiagram = Diagram<Rational>;

std::pair<Eigen::Index, Eigen::Index> bb(const QDiagram& F) { return betti(F); }

std::pair<Eigen::Index, Eigen::Index> pair_of(Eigen::Index a, Eigen::Index b) { return {a, b}; }

Mat<Rational> qmat(std::initializer_list<std::initializer_list<Int>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  Mat<Rational> m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Int v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

// Betti numbers from the integer differential via fraction-free rank.
std::pair<Eigen::Index, Eigen::Index> bareiss_betti(const QDiagram& F) {
  const Mat<Rational> D = differential(F);
  IntMatrix M(D.rows(), D.cols());
  for (Eigen::Index i = 0; i < D.rows(); ++i)
    for (Eigen::Index j = 0; j < D.cols(); ++j)
      M(i, j) = static_cast<Int>(boost::multiprecision::numerator(D(i, j)));
  const Int r = rrtest::bareiss_rank(M);
  return {D.cols() - r, D.rows() - r};
}

}  // namespace

TEST_SUITE("kdiagram") {
  TEST_CASE("differential blocks") {
    CHECK(differential(constant_diagram(Q)) == qmat({{1, 0, -1}, {0, 1, -1}}));
    CHECK(differential(basic_diagram(Q, 3)) == qmat({{-1}, {-1}}));
    const Mat<Rational> Z = differential(shaped(Rational(1), {0, 0, 0, 0, 0}));
    CHECK(Z.rows() == 0);
    CHECK(Z.cols() == 0);
  }

  TEST_CASE("cohomology examples") {
    CHECK(bb(constant_diagram(Q)) == pair_of(1, 0));
    CHECK(bb(basic_diagram(Q, 3)) == pair_of(0, 1));
    CHECK(bb(basic_diagram(Q, 1)) == pair_of(0, 0));
    CHECK(bb(basic_diagram(Q, 2)) == pair_of(0, 0));
    CHECK(bb(skyscraper(Q, Place::A1, 1)) == pair_of(1, 0));
    CHECK(bb(coskyscraper(Q, Place::A1, 1)) == pair_of(0, 1));
    CHECK(bb(skyscraper(Q, Place::B3, 1)) == pair_of(1, 0));
    CHECK(bb(skyscraper(Q, Place::A2, 3)) == pair_of(3, 0));

    const auto h = cohomology(basic_diagram(Q, 3));
    CHECK(h.b0 == 0);
    CHECK(h.b1 == 1);
    CHECK(h.chi() == -1);
    CHECK(h.cokernel.size() == 1);
  }

  TEST_CASE("coskyscraper at B3 carries the data of the dualizing diagram") {
    const QDiagram C = coskyscraper(Q, Place::B3, 1), D = basic_diagram(Q, 3);
    CHECK(C.dims == D.dims);
    CHECK(C.rho31 == D.rho31);
    CHECK(C.rho32 == D.rho32);
  }

  TEST_CASE("indicators are basic diagrams") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
      const Point2 d(rng.uniform(-3, 3), rng.uniform(-3, 3)), a(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const QDiagram I = indicator(Q, d, a);
      CHECK(I.dim(Place::B1) == (a(0) <= d(0) ? 1 : 0));
      CHECK(I.dim(Place::B2) == (a(1) <= d(1) ? 1 : 0));
      const Eigen::Index b0 = (a(0) <= d(0) && a(1) <= d(1)) ? 1 : 0;
      const Eigen::Index b1 = (a(0) > d(0) && a(1) > d(1)) ? 1 : 0;
      CHECK(bb(I) == pair_of(b0, b1));
    }
  }

  TEST_CASE("betti against a fraction-free oracle") {
    Rng rng(73);
    for (int t = 0; t < 60; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 4, 3);
      const auto h = cohomology(F);
      CHECK(pair_of(h.b0, h.b1) == bareiss_betti(F));
      CHECK(bb(F) == bareiss_betti(F));
      const Eigen::Index in = F.dim(Place::B1) + F.dim(Place::B2) + F.dim(Place::B3);
      const Eigen::Index out = F.dim(Place::A1) + F.dim(Place::A2);
      CHECK(h.chi() == in - out);
      if (h.b0 > 0) CHECK((differential(F) * h.kernel).isZero());
    }
  }

  TEST_CASE("direct sums add") {
    CHECK(bb(direct_sum<Rational>({constant_diagram(Q), basic_diagram(Q, 3)})) == pair_of(1, 1));
    CHECK(bb(direct_sum<Rational>({}, Rational(1))) == pair_of(0, 0));
    Rng rng(79);
    for (int t = 0; t < 20; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 3, 2), G = rrtest::random_diagram(Q, rng, 3, 2);
      const auto [f0, f1] = bb(F);
      const auto [g0, g1] = bb(G);
      CHECK(bb(direct_sum<Rational>({F, G})) == pair_of(f0 + g0, f1 + g1));
      CHECK(global_sections(direct_sum<Rational>({F, G})).cols() == f0 + g0);
    }
  }

  TEST_CASE("morphisms between basic diagrams") {
    for (unsigned S = 0; S < 4; ++S)
      for (unsigned T = 0; T < 4; ++T) {
        const Eigen::Index expected = (T & ~S) == 0 ? 1 : 0;
        CHECK(hom_dim(basic_diagram(Q, S), basic_diagram(Q, T)) == expected);
      }
    CHECK(hom_dim(basic_diagram(Q, 1), constant_diagram(Q)) == 1);
    CHECK(hom_dim(constant_diagram(Q), basic_diagram(Q, 1)) == 0);
    CHECK(hom_dim(basic_diagram(Q, 3), basic_diagram(Q, 3)) == 1);
    for (unsigned S = 0; S < 3; ++S) CHECK(hom_dim(basic_diagram(Q, S), basic_diagram(Q, 3)) == 0);
  }

  TEST_CASE("hom bases are morphisms") {
    Rng rng(83);
    for (int t = 0; t < 15; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 2, 2), G = rrtest::random_diagram(Q, rng, 2, 2);
      const HomResult<Rational> h = hom(F, G);
      CHECK(static_cast<Eigen::Index>(h.basis.size()) == h.dim);
      for (const auto& phi : h.basis) CHECK(is_morphism(phi, F, G));
    }
    const QDiagram k = constant_diagram(Q);
    Morphism<Rational> id;
    for (Place P : kPlaces) id.at(P) = identity(Q, k.dim(P));
    CHECK(is_isomorphism(id, k, k));
    CHECK(is_isomorphism(compose(id, id), k, k));
  }

  TEST_CASE("coskyscrapers represent evaluation") {
    Rng rng(89);
    for (int t = 0; t < 15; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 3, 2);
      for (Place P : kPlaces) {
        CHECK(hom_dim(coskyscraper(Q, P, 1), F) == F.dim(P));
        CHECK(ext_pair(coskyscraper(Q, P, 1), F) == pair_of(F.dim(P), 0));
      }
    }
  }

  TEST_CASE("global sections and the dualizing diagram") {
    CHECK(global_sections(constant_diagram(Q)).cols() == 1);
    CHECK(global_sections(basic_diagram(Q, 3)).cols() == 0);
    Rng rng(97);
    for (int t = 0; t < 25; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 3, 2);
      const auto [b0, b1] = bb(F);
      CHECK(global_sections(F).cols() == b0);
      CHECK(hom_dim(constant_diagram(Q), F) == b0);
      CHECK(hom_dim(F, basic_diagram(Q, 3)) == b1);
    }
  }

  TEST_CASE("ext through the two-term resolution") {
    Rng rng(101);
    for (int t = 0; t < 25; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 3, 2);
      const auto [b0, b1] = bb(F);
      CHECK(ext_pair(constant_diagram(Q), F) == pair_of(b0, b1));
      CHECK(ext_pair(F, basic_diagram(Q, 3)) == pair_of(b1, b0));
      const auto e = ext_pair(F, rrtest::random_diagram(Q, rng, 2, 2));
      CHECK(e.first >= 0);
      CHECK(e.second >= 0);
    }
  }

  TEST_CASE("ext0 is hom") {
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 2, 2), G = rrtest::random_diagram(Q, rng, 2, 2);
      CHECK(ext_pair(F, G).first == hom_dim(F, G));
    }
  }

  TEST_CASE("resolution of the constant diagram") {
    const auto R = constant_resolution(Q);
    CHECK(bb(R.P0) == pair_of(0, 1));
    CHECK(bb(R.P1) == pair_of(0, 2));
    CHECK(is_morphism(R.mu1, R.P1, R.P0));
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
      const QDiagram F = rrtest::random_diagram(Q, rng, 3, 3);
      CHECK(constant_resolution_hom_map(Q, F) == differential(F));
    }
  }

  TEST_CASE("field independence on indicator and matching constructions") {
    Rng rng(109);
    for (int t = 0; t < 20; ++t) {
      Matchings ms;
      const Int count = rng.uniform(1, 3);
      for (Int c = 0; c < count; ++c) ms.push_back(rrtest::random_matching(rng, 4));
      const Point2 d(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const Betti q = betti_truncated(Q, ms, d, 2);
      for (Int p : {2, 3, 65521}) CHECK(betti_truncated(PrimeField(p), ms, d, 2) == q);

      std::vector<QDiagram> parts;
      std::vector<Diagram<Zp>> parts2;
      for (int k = 0; k < 4; ++k) {
        const Point2 a(rng.uniform(-3, 3), rng.uniform(-3, 3));
        parts.push_back(indicator(Q, d, a));
        parts2.push_back(indicator(PrimeField(2), d, a));
      }
      CHECK(betti(direct_sum<Rational>(parts)) == betti(direct_sum<Zp>(parts2)));
    }
  }

  TEST_CASE("prime fields") {
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(PrimeField(1), Error);
    const PrimeField F5(5);
    CHECK((F5.from_int(3) * F5.from_int(2)).value() == 1);
    CHECK(F5.from_int(-1).value() == 4);
    CHECK((F5.from_int(1) / F5.from_int(3)).value() == 2);
    const Diagram<Zp> k = constant_diagram(F5);
    CHECK(betti(k) == pair_of(1, 0));
    CHECK(ext_pair(k, basic_diagram(F5, 3)) == pair_of(0, 1));
  }
}
