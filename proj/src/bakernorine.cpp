#include "rr/bakernorine.hpp"

#include <map>
#include <memory>

#include "rr/linalg.hpp"

namespace rr {

using boost::multiprecision::cpp_int;

Multigraph::Multigraph(IntMatrix mult) : mult_(std::move(mult)) {
  const Int n = mult_.rows();
  if (n < 1 || mult_.cols() != n) throw Error(Errc::InvalidInput, "multiplicity matrix must be square");
  for (Int u = 0; u < n; ++u) {
    if (mult_(u, u) != 0) throw Error(Errc::InvalidInput, "self-loops are not allowed");
    for (Int v = 0; v < n; ++v) {
      if (mult_(u, v) < 0) throw Error(Errc::InvalidInput, "negative edge multiplicity");
      if (mult_(u, v) != mult_(v, u)) throw Error(Errc::InvalidInput, "multiplicities not symmetric");
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Int u = stack.back();
    stack.pop_back();
    for (Int v = 0; v < n; ++v)
      if (mult_(u, v) > 0 && !seen[v]) seen[v] = true, stack.push_back(v);
  }
  for (Int v = 0; v < n; ++v)
    if (!seen[v]) throw Error(Errc::NotConnected, "vertex " + std::to_string(v) + " is unreachable");
}

Multigraph Multigraph::from_edges(Int n, const std::vector<std::array<Int, 3>>& edges) {
  if (n < 1) throw Error(Errc::InvalidInput, "graph needs at least one vertex");
  IntMatrix m = IntMatrix::Zero(n, n);
  for (const auto& [u, v, k] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::IndexOutOfRange, "edge endpoint");
    if (u == v) throw Error(Errc::InvalidInput, "self-loops are not allowed");
    m(u, v) += k;
    m(v, u) += k;
  }
  return Multigraph(std::move(m));
}

Multigraph cycle_graph(Int n) {
  if (n < 2) throw Error(Errc::InvalidInput, "cycle needs n >= 2");
  std::vector<std::array<Int, 3>> e;
  for (Int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return Multigraph::from_edges(n, e);
}

Multigraph complete_graph(Int n) {
  std::vector<std::array<Int, 3>> e;
  for (Int i = 0; i < n; ++i)
    for (Int j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return Multigraph::from_edges(n, e);
}

Multigraph banana_graph(Int m) { return Multigraph::from_edges(2, {{0, 1, m}}); }

IntMatrix laplacian(const Multigraph& G) {
  IntMatrix L = -G.mult();
  for (Int v = 0; v < G.n(); ++v) L(v, v) = G.degree(v);
  return L;
}

Point canonical_divisor(const Multigraph& G) {
  Point K(G.n());
  for (Int v = 0; v < G.n(); ++v) K(v) = G.degree(v) - 2;
  return K;
}

Point dhar_reduce(const Multigraph& G, const Point& d0, Int q) {
  const Int n = G.n();
  if (d0.size() != n) throw Error(Errc::ArityMismatch, "divisor length differs from vertex count");
  if (q < 0 || q >= n) throw Error(Errc::IndexOutOfRange, "reduction vertex");
  const IntMatrix& m = G.mult();
  Point d = d0;
  // Borrow at negative vertices other than q until they are all >= 0.
  for (bool changed = true; changed;) {
    changed = false;
    for (Int v = 0; v < n; ++v) {
      if (v == q || d(v) >= 0) continue;
      const Int k = (-d(v) + G.degree(v) - 1) / G.degree(v);
      d(v) += k * G.degree(v);
      for (Int u = 0; u < n; ++u) d(u) -= k * m(v, u);
      changed = true;
    }
  }
  // Dhar burning from q; the unburnt set fires until everything burns.
  for (;;) {
    std::vector<bool> burnt(n, false);
    burnt[q] = true;
    for (bool spread = true; spread;) {
      spread = false;
      for (Int v = 0; v < n; ++v) {
        if (burnt[v]) continue;
        Int fire = 0;
        for (Int u = 0; u < n; ++u)
          if (burnt[u]) fire += m(v, u);
        if (fire > d(v)) burnt[v] = true, spread = true;
      }
    }
    if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) return d;
    for (Int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      for (Int u = 0; u < n; ++u)
        if (burnt[u]) d(v) -= m(v, u), d(u) += m(v, u);
    }
  }
}

bool is_effective(const Multigraph& G, const Point& d) {
  if (deg(d) < 0) return false;
  return dhar_reduce(G, d, 0)(0) >= 0;
}

namespace {

// Calls f on every nonnegative vector of length n and sum k until f returns false.
template <class F>
bool for_each_composition(Int n, Int k, F&& f) {
  Point e = Point::Zero(n);
  std::function<bool(Int, Int)> rec = [&](Int i, Int left) {
    if (i == n - 1) {
      e(i) = left;
      return f(static_cast<const Point&>(e));
    }
    for (Int x = 0; x <= left; ++x) {
      e(i) = x;
      if (!rec(i + 1, left - x)) return false;
    }
    return true;
  };
  return rec(0, k);
}

// x lies in the Laplacian lattice iff deg x = 0 and the reduced system has
// an integral solution.
bool in_lattice(const Multigraph& G, const Point& x) {
  if (deg(x) != 0) return false;
  const Int n = G.n();
  if (n == 1) return true;
  const IntMatrix L = laplacian(G);
  Mat<Rational> aug(n - 1, n);
  for (Int i = 1; i < n; ++i) {
    for (Int j = 1; j < n; ++j) aug(i - 1, j - 1) = Rational(L(i, j));
    aug(i - 1, n - 1) = Rational(x(i));
  }
  const Echelon<Rational> E = echelon<Rational>(aug);
  for (Int i = 0; i < n - 1; ++i)
    if (boost::multiprecision::denominator(E.R(i, n - 1)) != 1) return false;
  return true;
}

}  // namespace

bool is_effective_bruteforce(const Multigraph& G, const Point& d) {
  if (d.size() != G.n()) throw Error(Errc::ArityMismatch, "divisor length differs from vertex count");
  if (deg(d) < 0) return false;
  bool found = false;
  for_each_composition(G.n(), deg(d), [&](const Point& e) {
    found = in_lattice(G, d - e);
    return !found;
  });
  return found;
}

Int bn_rank(const Multigraph& G, const Point& d) {
  if (d.size() != G.n()) throw Error(Errc::ArityMismatch, "divisor length differs from vertex count");
  if (!is_effective(G, d)) return -1;
  for (Int k = 1;; ++k) {
    const bool all = for_each_composition(G.n(), k, [&](const Point& e) {
      return is_effective(G, d - e);
    });
    if (!all) return k - 1;
  }
}

std::vector<cpp_int> invariant_factors(const IntMatrix& M0) {
  const Eigen::Index rows = M0.rows(), cols = M0.cols();
  std::vector<std::vector<cpp_int>> M(rows, std::vector<cpp_int>(cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M[i][j] = M0(i, j);
  std::vector<cpp_int> out;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (M[i][j] != 0 && (pi < 0 || abs(M[i][j]) < abs(M[pi][pj]))) pi = i, pj = j;
      if (pi < 0) return out;
      std::swap(M[t], M[pi]);
      for (auto& row : M) std::swap(row[t], row[pj]);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const cpp_int f = M[i][t] / M[t][t];
        for (Eigen::Index j = t; j < cols; ++j) M[i][j] -= f * M[t][j];
        if (M[i][t] != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const cpp_int f = M[t][j] / M[t][t];
        for (Eigen::Index i = t; i < rows; ++i) M[i][j] -= f * M[i][t];
        if (M[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (M[i][j] % M[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index j = t; j < cols; ++j) M[t][j] += M[bad][j];
    }
    out.push_back(abs(M[t][t]));
  }
  return out;
}

Int sandpile_exponent(const Multigraph& G) {
  const Int n = G.n();
  if (n == 1) return 1;
  const IntMatrix reduced = laplacian(G).bottomRightCorner(n - 1, n - 1);
  cpp_int e = 1;
  for (const auto& f : invariant_factors(reduced)) e = f > e ? f : e;
  return static_cast<Int>(e);
}

RiemannFunction bn_function(const Multigraph& G) {
  const Int g = G.genus();
  auto cache = std::make_shared<std::map<std::vector<Int>, Int>>();
  auto eval = [G, cache](const Point& d) {
    const Point r = dhar_reduce(G, d, 0);
    std::vector<Int> key(r.data(), r.data() + r.size());
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, 1 + bn_rank(G, r)).first;
    return it->second;
  };
  return RiemannFunction(G.n(), 1 - g, -1, 2 * g - 1, eval, sandpile_exponent(G));
}

RiemannFunction cycle_genus1_function(Int n) {
  if (n < 2) throw Error(Errc::InvalidInput, "cycle needs n >= 2");
  auto eval = [n](const Point& d) -> Int {
    const Int k = deg(d);
    if (k != 0) return std::max<Int>(0, k);
    Int s = 0;
    for (Int i = 0; i < n; ++i) s += (i + 1) * d(i);
    return mod(s, n) == 0 ? 1 : 0;
  };
  return RiemannFunction(n, 0, -1, 1, eval, n);
}

}  // namespace rr
