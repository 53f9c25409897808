#include <doctest.h>

#include "support.hpp"

using namespace rr;
using rrtest::Rng;

namespace {

const Rationals Q;

const PerfectMatching& c4() {
  static const PerfectMatching m(4, {0, 1, -1, -2});
  return m;
}

const BandWeight2& period3() {
  static const BandWeight2 W =
      BandWeight2::from_entries(3, {{1, 0, 1}, {1, 2, 1}, {0, 1, 1}, {2, 1, 1}, {1, 1, -1}});
  return W;
}

Matchings random_list(Rng& rng, Int max_count) {
  Matchings ms;
  const Int n = rng.uniform(1, max_count);
  for (Int k = 0; k < n; ++k) ms.push_back(rrtest::random_matching(rng, 5));
  return ms;
}

Point2 random_point(Rng& rng, Int r) { return Point2(rng.uniform(-r, r), rng.uniform(-r, r)); }

}  // namespace

TEST_SUITE("matchdiag") {
  TEST_CASE("closed form examples") {
    const PerfectMatching W1 = degree_matching(1);
    CHECK(betti_closed(W1, Point2(0, 0)) == Betti{0, 0});
    CHECK(betti_closed(c4(), Point2(0, 0)) == Betti{1, 1});
    CHECK(betti_closed(W1, Point2(1, 1)) == Betti{2, 0});
    CHECK(chi(Matchings{W1}, Point2(0, 0)) == 0);
    CHECK(chi(Matchings{W1}, Point2(2, 1)) == 3);
  }

  TEST_CASE("closed form against a row scan") {
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
      const Matchings ms = random_list(rng, 3);
      const Point2 d = random_point(rng, 6);
      REQUIRE(betti_closed(ms, d) == rrtest::scan_betti(ms, d));
    }
  }

  TEST_CASE("euler characteristic steps by one") {
    Rng rng(127);
    for (int t = 0; t < 50; ++t) {
      const Matchings ms = random_list(rng, 3);
      const Point2 d = random_point(rng, 5);
      const Int n = static_cast<Int>(ms.size());
      CHECK(chi(ms, Point2(d(0) + 1, d(1))) == chi(ms, d) + n);
      CHECK(chi(ms, Point2(d(0), d(1) + 1)) == chi(ms, d) + n);
      CHECK(chi(ms, d) == n * rrtest::deg2(d) + chi(ms, Point2(0, 0)));
    }
  }

  TEST_CASE("monotone steps and the codimension-one dichotomy") {
    Rng rng(131);
    for (int t = 0; t < 80; ++t) {
      const PerfectMatching m = rrtest::random_matching(rng, 5);
      const Point2 d = random_point(rng, 5);
      const Betti b = betti_closed(m, d);
      for (int i = 0; i < 2; ++i) {
        Point2 e = d;
        ++e(i);
        const Betti c = betti_closed(m, e);
        CHECK(b.b0 <= c.b0);
        CHECK(c.b0 <= b.b0 + 1);
        CHECK(b.b1 - 1 <= c.b1);
        CHECK(c.b1 <= b.b1);
        const bool up = c == Betti{b.b0 + 1, b.b1}, down = c == Betti{b.b0, b.b1 - 1};
        CHECK(up != down);
      }
    }
  }

  TEST_CASE("b0 is the summation and b1 is the dual summation") {
    Rng rng(137);
    for (int t = 0; t < 60; ++t) {
      const PerfectMatching m = rrtest::random_matching(rng, 5);
      const Point2 d = random_point(rng, 5), K = random_point(rng, 3);
      const Betti b = betti_closed(m, d);
      CHECK(b.b0 == sum_below(m.weight(), d));
      const BandWeight2 dual = dual_weight(m.weight(), K + Point2(1, 1));
      CHECK(b.b1 == sum_below(dual, K - d));
    }
    CHECK(is_slowly_growing(riemann_of(c4().weight()), Window::cube(2, -5, 5)));
  }

  TEST_CASE("truncation examples") {
    CHECK(betti_truncated(Q, Matchings{degree_matching(1)}, Point2(0, 0), 1) == Betti{0, 0});
    CHECK(betti_truncated(Q, Matchings{c4()}, Point2(0, 0), 1) == Betti{1, 1});
    CHECK(betti_truncated(Q, Matchings{c4()}, Point2(0, 0), 6) == Betti{1, 1});

    const Matchings two{c4(), degree_matching(2)};
    const Point2 d(1, -1);
    const RowWindow R = truncation_rows(two, d, 2);
    const auto whole = truncate(Q, two, d, 2);
    const auto sum = direct_sum<Rational>({truncate(Q, two[0], d, R), truncate(Q, two[1], d, R)});
    CHECK(whole.dims == sum.dims);
    CHECK(whole.rho11 == sum.rho11);
    CHECK(whole.rho22 == sum.rho22);
    CHECK(whole.rho31 == sum.rho31);
    CHECK(whole.rho32 == sum.rho32);
    CHECK_NOTHROW(whole.validate());
  }

  TEST_CASE("triple agreement") {
    Rng rng(139);
    for (int t = 0; t < 40; ++t) {
      const PerfectMatching m = rrtest::random_matching(rng, 5);
      const Point2 d = random_point(rng, 4);
      const Betti b = betti_closed(m, d);
      for (Int s : {1, 3, 6}) REQUIRE(betti_truncated(Q, Matchings{m}, d, s) == b);
      const GraphBetti g = graph_betti(m.weight(), d);
      CHECK(g.b0 == ExtNat::of(b.b0));
      CHECK(g.b1 == ExtNat::of(b.b1));
    }
  }

  TEST_CASE("graph betti of sums of matchings") {
    Rng rng(149);
    for (int t = 0; t < 30; ++t) {
      const Int p = rng.uniform(1, 4);
      const Matchings ms{rrtest::random_matching(rng, p, 0, p + 1), rrtest::random_matching(rng, p, 0, p + 1)};
      const GraphBetti g = graph_betti(sum_weights(ms), random_point(rng, 3));
      CHECK(g.b0.infinite);
      CHECK_FALSE(g.b1.infinite);
    }
    const GraphBetti ends = graph_betti(degree_matching(0).weight() + degree_matching(2).weight(), Point2(0, 0));
    CHECK(ends.b0 == ExtNat::inf());
    CHECK(ends.graph.infinite_cycles);
  }

  TEST_CASE("graph betti with infinite values") {
    const BandWeight2& W = period3();
    const BandWeight2 plus = BandWeight2::from_entries(3, {{1, 0, 1}, {1, 2, 1}, {0, 1, 1}, {2, 1, 1}});
    const BandWeight2 minus = BandWeight2::from_entries(3, {{1, 1, 1}});
    CHECK(plus - minus == W);
    for (Int x = -2; x <= 2; ++x) {
      const Point2 d(x, -x + 1);
      CHECK(graph_betti(plus, d).b0 == ExtNat::inf());
      CHECK(graph_betti(minus, d).b1 == ExtNat::inf());
      CHECK(graph_betti(minus, d).graph.infinite_components);
    }
    const BandWeight2 gap = BandWeight2::from_entries(2, {{0, 0, 1}});
    CHECK(graph_betti(gap, Point2(0, 0)).b1.infinite);
    try {
      graph_betti(W, Point2(0, 0));
      FAIL("expected NegativeWeight");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NegativeWeight);
    }
  }

  TEST_CASE("graph summary of a perfect matching") {
    const GraphBetti g = graph_betti(c4().weight(), Point2(0, 0));
    CHECK_FALSE(g.graph.infinite_components);
    CHECK_FALSE(g.graph.infinite_cycles);
    CHECK(g.graph.cycle_rank ==
          g.graph.core_edges - g.graph.core_vertices + g.graph.components + g.graph.v0_loops);
    CHECK(g.graph.v0_loops == 1);
    CHECK(g.b0 == ExtNat::of(1));
    CHECK(g.b1 == ExtNat::of(1));
    CHECK((ExtNat::of(2) + ExtNat::inf()).infinite);
    CHECK(ExtNat::inf().str() == "inf");
  }

  TEST_CASE("zipper examples") {
    const PerfectMatching half(2, {0, 1});
    CHECK(zipper_check(c4(), c4(), Point2(0, 0)));
    CHECK_FALSE(c4() == half);
    CHECK(zipper_check(c4(), half, Point2(0, 0)));
    CHECK(zipper_condition_f(c4(), half, Point2(0, 0)));
    CHECK_FALSE(zipper_check(degree_matching(0), degree_matching(2), Point2(0, 0)));
    CHECK_FALSE(zipper_condition_f(degree_matching(0), degree_matching(2), Point2(0, 0)));
  }

  TEST_CASE("zipper check agrees with the summation condition") {
    Rng rng(151);
    int agreeing = 0;
    for (int t = 0; t < 200; ++t) {
      const Int p = rng.uniform(1, 4);
      const PerfectMatching a = rrtest::random_matching(rng, p, -1, p + 1);
      const Int q = rng.uniform(1, 4);
      const PerfectMatching b = rrtest::random_matching(rng, q, -1, q + 1);
      const Point2 d = random_point(rng, 2);
      const bool z = zipper_check(a, b, d);
      CHECK(z == zipper_condition_f(a, b, d));
      agreeing += z;
    }
    CHECK(agreeing > 0);
  }

  TEST_CASE("zipper morphisms") {
    const PerfectMatching half(2, {0, 1});
    const auto z = zipper_morphism(Q, c4(), half, Point2(0, 0), 2);
    REQUIRE(z.has_value());
    CHECK(is_morphism(z->phi, z->source, z->target));
    CHECK(is_isomorphism(z->phi, z->source, z->target));
    CHECK(betti(z->source) == betti(z->target));
    CHECK_FALSE(zipper_morphism(Q, degree_matching(0), degree_matching(2), Point2(0, 0), 1).has_value());

    Rng rng(157);
    for (int t = 0; t < 150; ++t) {
      const Int p = rng.uniform(1, 4);
      const PerfectMatching a = rrtest::random_matching(rng, p, -1, p + 1);
      const Int q = rng.uniform(1, 4);
      const PerfectMatching b = rrtest::random_matching(rng, q, -1, q + 1);
      const Point2 d = random_point(rng, 2);
      const auto m = zipper_morphism(Q, a, b, d, 1);
      if (!m) continue;
      CHECK(zipper_check(a, b, d));
      CHECK(is_isomorphism(m->phi, m->source, m->target));
      CHECK(betti_closed(a, d) == betti_closed(b, d));
    }
  }

  TEST_CASE("zipper for lists") {
    const Matchings a{c4(), degree_matching(1)}, b{degree_matching(1), c4()};
    CHECK(zipper_check_multi(a, a, Point2(0, 0)));
    CHECK(zipper_check_multi(a, b, Point2(1, -2)));
    CHECK(zipper_check_multi(Matchings{c4()}, Matchings{PerfectMatching(2, {0, 1})}, Point2(0, 0)));
    try {
      zipper_check_multi(a, Matchings{c4()}, Point2(0, 0));
      FAIL("expected LengthMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LengthMismatch);
    }
  }

  TEST_CASE("virtual betti examples") {
    CHECK(virtual_betti({{degree_matching(1)}, {}, Point2(0, 0)}) == VirtualBetti{0, 0, 0});
    const PerfectMatching a = c4(), b = degree_matching(2);
    const Point2 d(1, 0);
    const VirtualBetti padded = virtual_betti({{a, b}, {b}, d});
    const VirtualBetti plain = virtual_betti({{a}, {}, d});
    CHECK(padded == plain);
    const Betti direct = betti_closed(a, d);
    CHECK(plain == VirtualBetti{direct.b0, direct.b1, direct.chi()});
  }

  TEST_CASE("virtual betti is independent of the decomposition") {
    const AlternatingDecomposition D1 = alternating_decomposition(period3());
    const AlternatingDecomposition D2 = hall_decomposition(period3());
    CHECK(virtual_betti(virtual_of(D1, Point2(0, 0))).b0 == 0);
    CHECK(sum_below(period3(), Point2(0, 0)) == 0);
    for (Int x = -4; x <= 4; ++x)
      for (Int y = -4; y <= 4; ++y) {
        const Point2 d(x, y);
        const VirtualBetti v1 = virtual_betti(virtual_of(D1, d)), v2 = virtual_betti(virtual_of(D2, d));
        REQUIRE(v1 == v2);
        CHECK(v1.b0 == sum_below(period3(), d));
        CHECK(v1.chi == v1.b0 - v1.b1);
        CHECK(indicator_multiset(period3()).betti(d) == v1);
      }

    Rng rng(163);
    for (int t = 0; t < 25; ++t) {
      const BandWeight2 W = rrtest::random_unit_weight(rng, 5, 2);
      const AlternatingDecomposition A = alternating_decomposition(W), H = hall_decomposition(W);
      const Point2 d = random_point(rng, 4);
      CHECK(virtual_betti(virtual_of(A, d)) == virtual_betti(virtual_of(H, d)));
    }
  }

  TEST_CASE("indicator multisets") {
    const IndicatorMultiset one = indicator_multiset(c4().weight());
    CHECK(one.positive == c4().weight());
    CHECK(one.negative.is_zero());

    const IndicatorMultiset p3 = indicator_multiset(period3());
    CHECK(p3.positive == BandWeight2::from_entries(3, {{1, 0, 1}, {1, 2, 1}, {0, 1, 1}, {2, 1, 1}}));
    CHECK(p3.negative == BandWeight2::from_entries(3, {{1, 1, 1}}));

    const IndicatorMultiset a = indicator_multiset(virtual_of(alternating_decomposition(period3()), Point2(0, 0)));
    const IndicatorMultiset h = indicator_multiset(virtual_of(hall_decomposition(period3()), Point2(0, 0)));
    CHECK(a.signed_weight() == period3());
    CHECK(a.canonical().positive == h.canonical().positive);
    CHECK(a.canonical().negative == h.canonical().negative);
    for (Int x = -3; x <= 3; ++x) {
      const Point2 d(x, 1 - x);
      CHECK(a.betti(d) == p3.betti(d));
    }
  }

  TEST_CASE("indicator sums reproduce truncations") {
    Rng rng(167);
    for (int t = 0; t < 30; ++t) {
      const PerfectMatching m = rrtest::random_matching(rng, 4);
      const Point2 d = random_point(rng, 3);
      const RowWindow R = truncation_rows(Matchings{m}, d, 1);
      std::vector<Diagram<Rational>> parts;
      for (Int i = R.lo; i <= R.hi; ++i) parts.push_back(indicator(Q, d, Point2(i, m(i))));
      const auto S = direct_sum<Rational>(parts);
      const auto T = truncate(Q, m, d, R);
      CHECK(betti(S) == betti(T));
      CHECK(S.dim(Place::B1) == T.dim(Place::B1));
      CHECK(S.dim(Place::B2) == T.dim(Place::B2));
    }
  }

  TEST_CASE("duality") {
    const auto w1 = duality_check(Q, degree_matching(1), Point2(0, 0), Point2(0, 0));
    CHECK(w1.holds);
    CHECK(w1.original == Betti{0, 0});
    CHECK(w1.dual == Betti{0, 0});
    const auto c = duality_check(Q, c4(), Point2(0, 0), Point2(0, 0));
    CHECK(c.holds);
    CHECK(c.original == Betti{1, 1});
    CHECK(c.dual == Betti{1, 1});
    CHECK(c.hom_to_dualizing == 1);

    Rng rng(173);
    for (int t = 0; t < 200; ++t) {
      const PerfectMatching m = rrtest::random_matching(rng, 4);
      const Point2 K = random_point(rng, 3), d = random_point(rng, 3);
      const auto r = duality_check(Q, m, K, d);
      REQUIRE(r.holds);
    }
  }

  TEST_CASE("translation") {
    const Matchings w1{degree_matching(1)};
    const Matchings same = translate_ref(w1, Point2(0, 0));
    CHECK(same.front() == degree_matching(1));
    const Matchings moved = translate_ref(w1, Point2(1, 0));
    CHECK(moved.front() == degree_matching(0));
    Rng rng(179);
    for (int t = 0; t < 60; ++t) {
      const Matchings ms = random_list(rng, 3);
      const Point2 s = random_point(rng, 3), d = random_point(rng, 4);
      CHECK(betti_closed(translate_ref(ms, s), d) == betti_closed(ms, Point2(d + s)));
    }
    const AlternatingDecomposition D = alternating_decomposition(period3());
    const Point2 s(2, -1), d(0, 1);
    const VirtualMatchingDiagram V{translate_ref(D.plus, s), translate_ref(D.minus, s), d};
    CHECK(virtual_betti(V) == virtual_betti(virtual_of(D, Point2(d + s))));
  }
}
