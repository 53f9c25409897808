#ifndef RR_TESTS_SUPPORT_HPP
#define RR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rr/bakernorine.hpp"
#include "rr/decompose.hpp"
#include "rr/kdiagram.hpp"
#include "rr/matchdiag.hpp"

namespace rrtest {

using namespace rr;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), g_);
  }

 private:
  std::mt19937_64 g_;
};

// Random residue permutation, then each row degree drawn from [lo, lo + width]
// within the residue class that realizes it. Needs width >= p - 1.
inline PerfectMatching random_matching(Rng& rng, Int p, Int lo, Int width) {
  std::vector<Int> sigma(p);
  std::iota(sigma.begin(), sigma.end(), 0);
  rng.shuffle(sigma);
  std::vector<Int> pi(p);
  for (Int i = 0; i < p; ++i) {
    std::vector<Int> degrees;
    for (Int e = lo; e <= lo + width; ++e)
      if (mod(e - i, p) == sigma[i]) degrees.push_back(e);
    pi[i] = degrees[rng.uniform(0, static_cast<Int>(degrees.size()) - 1)] - i;
  }
  return PerfectMatching(p, std::move(pi));
}

inline PerfectMatching random_matching(Rng& rng, Int p_max = 6) {
  const Int p = rng.uniform(1, p_max);
  const Int width = rng.uniform(p - 1, p + 2);
  return random_matching(rng, p, rng.uniform(-3, 2), width);
}

// A unit-sum weight built as a signed sum of s plus and s-1 minus matchings
// of one period, kept only if its values lie in [-bound, bound].
inline BandWeight2 random_unit_weight(Rng& rng, Int p_max, Int bound, Int max_width = 10) {
  for (;;) {
    const Int p = rng.uniform(1, p_max);
    const Int s = rng.uniform(1, 3);
    std::vector<PerfectMatching> plus, minus;
    auto draw = [&] {
      const Int width = rng.uniform(p - 1, std::max(p - 1, std::min<Int>(max_width - 1, p + 2)));
      return random_matching(rng, p, rng.uniform(-3, 1), width);
    };
    for (Int t = 0; t < s; ++t) plus.push_back(draw());
    for (Int t = 0; t + 1 < s; ++t) minus.push_back(draw());
    BandWeight2 W = sum_weights(plus);
    if (!minus.empty()) W = W - sum_weights(minus);
    W = W.canonical();
    if (W.min_value() >= -bound && W.max_value() <= bound && W.band_hi() - W.band_lo() < max_width)
      return W;
  }
}

template <class K>
Diagram<typename K::Scalar> random_diagram(const K& k, Rng& rng, Int max_dim, Int entry_bound) {
  using Scalar = typename K::Scalar;
  std::array<Eigen::Index, 5> dims{};
  for (auto& x : dims) x = rng.uniform(0, max_dim);
  Diagram<Scalar> F = shaped(k.from_int(1), dims);
  auto fill = [&](Mat<Scalar>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(i, j) = k.from_int(rng.uniform(-entry_bound, entry_bound));
  };
  fill(F.rho11);
  fill(F.rho22);
  fill(F.rho31);
  fill(F.rho32);
  return F;
}

// Same integer entries read into another field.
template <class K>
Diagram<typename K::Scalar> reinterpret(const K& k, const Diagram<Rational>& F) {
  using Scalar = typename K::Scalar;
  Diagram<Scalar> G = shaped(k.from_int(1), F.dims);
  auto copy = [&](const Mat<Rational>& a, Mat<Scalar>& b) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        b(i, j) = k.from_int(static_cast<Int>(boost::multiprecision::numerator(a(i, j))));
  };
  copy(F.rho11, G.rho11);
  copy(F.rho22, G.rho22);
  copy(F.rho31, G.rho31);
  copy(F.rho32, G.rho32);
  return G;
}

// Rank of an integer matrix by Bareiss fraction-free elimination.
inline Int bareiss_rank(IntMatrix M0) {
  using boost::multiprecision::cpp_int;
  const Eigen::Index rows = M0.rows(), cols = M0.cols();
  std::vector<std::vector<cpp_int>> M(rows, std::vector<cpp_int>(cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M[i][j] = M0(i, j);
  cpp_int prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) M[i][j] = (M[i][j] * M[r][c] - M[i][c] * M[r][j]) / prev;
      M[i][c] = 0;
    }
    prev = M[r][c];
    ++r;
  }
  return r;
}

// Brute-force Betti numbers of M_{W,d} for matchings: scan a wide row range.
inline Betti scan_betti(const Matchings& ms, const Point2& d) {
  Betti b;
  for (const auto& m : ms)
    for (Int i = -200; i <= 200; ++i) {
      const Int j = m(i);
      if (i <= d(0) && j <= d(1)) ++b.b0;
      if (i >= d(0) + 1 && j >= d(1) + 1) ++b.b1;
    }
  return b;
}

inline Int deg2(const Point2& a) { return a(0) + a(1); }

}  // namespace rrtest

#endif
