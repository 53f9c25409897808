#include "rr/matchdiag.hpp"

#include <set>

#include <boost/pending/disjoint_sets.hpp>

namespace rr {

namespace {

Int envelope_lo(const Matchings& ms) {
  Int lo = ms.front().band_lo();
  for (const auto& m : ms) lo = std::min(lo, m.band_lo());
  return lo;
}

Int envelope_hi(const Matchings& ms) {
  Int hi = ms.front().band_hi();
  for (const auto& m : ms) hi = std::max(hi, m.band_hi());
  return hi;
}

}  // namespace

Betti betti_closed(const Matchings& ms, const Point2& d) {
  Betti b;
  for (const auto& m : ms) {
    for (Int i = m.band_lo() - d(1); i <= d(0); ++i)
      if (m(i) <= d(1)) ++b.b0;
    for (Int i = d(0) + 1; i <= m.band_hi() - d(1) - 1; ++i)
      if (m(i) >= d(1) + 1) ++b.b1;
  }
  return b;
}

Int chi(const Matchings& ms, const Point2& d) { return betti_closed(ms, d).chi(); }

RowWindow truncation_rows(const Matchings& ms, const Point2& d, Int slack) {
  if (slack < 1) throw Error(Errc::InvalidInput, "truncation slack must be at least 1");
  if (ms.empty()) return {d(0) - slack, d(0) + 1 + slack};
  const Int lo = envelope_lo(ms), hi = envelope_hi(ms);
  return {std::min(d(0), lo - d(1)) - slack, std::max(d(0) + 1, hi - d(1)) + slack};
}

GraphBetti graph_betti(const BandWeight2& W, const Point2& d) {
  if (W.min_value() < 0) throw Error(Errc::NegativeWeight, "graph_betti needs W >= 0");
  const Int p = W.period(), hi = W.band_hi(), lo = W.band_lo();
  const Int d1 = d(0), d2 = d(1);
  GraphSummary g;
  for (Int r = 0; r < p; ++r) {
    for (Int s : {W.row_sum(r), W.col_sum(r)}) {
      if (s == 0) g.infinite_components = true;
      if (s >= 2) g.infinite_cycles = true;
    }
  }
  const Int row_lo = d1 + 1, row_hi = hi - d2 - 1;
  const Int col_lo = d2 + 1, col_hi = hi - d1 - 1;
  const Int nrows = std::max<Int>(0, row_hi - row_lo + 1);
  const Int ncols = std::max<Int>(0, col_hi - col_lo + 1);
  const Int nv = 1 + nrows + ncols;
  auto row_vertex = [&](Int x) { return 1 + (x - row_lo); };
  auto col_vertex = [&](Int y) { return 1 + nrows + (y - col_lo); };

  std::vector<Int> rank(nv), parent(nv);
  boost::disjoint_sets<Int*, Int*> ds(rank.data(), parent.data());
  for (Int v = 0; v < nv; ++v) ds.make_set(v);
  auto add_edges = [&](Int u, Int v, Int mult) {
    if (mult <= 0) return;
    g.core_edges += mult;
    ds.union_set(u, v);
  };
  for (Int x = row_lo; x <= row_hi; ++x)
    for (Int y = lo - x; y <= hi - x; ++y)
      add_edges(row_vertex(x), y <= d2 ? 0 : col_vertex(y), W(x, y));
  for (Int y = col_lo; y <= col_hi; ++y)
    for (Int x = lo - y; x <= std::min(d1, hi - y); ++x) add_edges(0, col_vertex(y), W(x, y));

  std::set<Int> roots;
  for (Int v = 0; v < nv; ++v) roots.insert(ds.find_set(v));
  g.core_vertices = nv;
  g.components = static_cast<Int>(roots.size());
  g.v0_loops = sum_below(W, d);
  g.cycle_rank = g.core_edges - g.core_vertices + g.components + g.v0_loops;

  GraphBetti out;
  out.graph = g;
  out.b0 = g.infinite_cycles ? ExtNat::inf() : ExtNat::of(g.cycle_rank);
  out.b1 = g.infinite_components ? ExtNat::inf() : ExtNat::of(g.components - 1);
  return out;
}

bool zipper_check(const PerfectMatching& pi, const PerfectMatching& pj, const Point2& d) {
  const Int lo = std::min(pi.band_lo(), pj.band_lo());
  for (Int a = lo - d(1); a <= d(0); ++a)
    if ((pi(a) <= d(1)) != (pj(a) <= d(1))) return false;
  return true;
}

bool zipper_condition_f(const PerfectMatching& pi, const PerfectMatching& pj, const Point2& d) {
  const BandWeight2 Wi = pi.weight(), Wj = pj.weight();
  const Int lo = std::min(pi.band_lo(), pj.band_lo());
  for (Int a = lo - d(1) - 1; a <= d(0); ++a)
    if (sum_below(Wi, Point2(a, d(1))) != sum_below(Wj, Point2(a, d(1)))) return false;
  return true;
}

bool zipper_check_multi(const Matchings& ws, const Matchings& vs, const Point2& d) {
  if (ws.size() != vs.size()) throw Error(Errc::LengthMismatch, "zipper lists differ in length");
  if (ws.empty()) return true;
  const Int lo = std::min(envelope_lo(ws), envelope_lo(vs));
  for (Int a = lo - d(1); a <= d(0); ++a) {
    Int cw = 0, cv = 0;
    for (const auto& m : ws) cw += m(a) <= d(1);
    for (const auto& m : vs) cv += m(a) <= d(1);
    if (cw != cv) return false;
  }
  return true;
}

VirtualBetti virtual_betti(const VirtualMatchingDiagram& V) {
  const Betti p = betti_closed(V.plus, V.d), m = betti_closed(V.minus, V.d);
  VirtualBetti v;
  v.b0 = p.b0 - m.b0;
  v.b1 = p.b1 - m.b1;
  v.chi = v.b0 - v.b1;
  return v;
}

VirtualMatchingDiagram virtual_of(const AlternatingDecomposition& D, const Point2& d) {
  return {D.plus, D.minus, d};
}

IndicatorMultiset IndicatorMultiset::canonical() const {
  const BandWeight2 s = signed_weight().canonical();
  std::vector<std::array<Int, 3>> pos, neg;
  for (const auto& [a1, a2, v] : s.entries()) (v > 0 ? pos : neg).push_back({a1, a2, v > 0 ? v : -v});
  return {BandWeight2::from_entries(s.period(), pos).canonical(),
          BandWeight2::from_entries(s.period(), neg).canonical()};
}

VirtualBetti IndicatorMultiset::betti(const Point2& d) const {
  // entries with a >= d + (1,1); each skew orbit meets that quadrant finitely
  auto above = [&](const BandWeight2& W) {
    Int total = 0;
    const Int p = W.period();
    for (const auto& [a1, a2, v] : W.entries())
      for (Int t = floordiv(d(0) - a1 + p, p); a2 - t * p >= d(1) + 1; ++t) total += v;
    return total;
  };
  VirtualBetti v;
  v.b0 = sum_below(positive, d) - sum_below(negative, d);
  v.b1 = above(positive) - above(negative);
  v.chi = v.b0 - v.b1;
  return v;
}

IndicatorMultiset indicator_multiset(const BandWeight2& W) {
  return IndicatorMultiset{W, BandWeight2::zero(W.period())}.canonical();
}

IndicatorMultiset indicator_multiset(const VirtualMatchingDiagram& V) {
  return {V.plus.empty() ? BandWeight2::zero() : sum_weights(V.plus),
          V.minus.empty() ? BandWeight2::zero() : sum_weights(V.minus)};
}

Matchings translate_ref(const Matchings& ms, const Point2& t) {
  Matchings out;
  for (const auto& m : ms) out.push_back(m.shifted(Point2(-t(0), -t(1))));
  return out;
}

}  // namespace rr
