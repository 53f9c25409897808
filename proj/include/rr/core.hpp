#ifndef RR_CORE_HPP
#define RR_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rr {

using Int = std::int64_t;

// Lattice points of Z^n.
using Point = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Point2 = Eigen::Matrix<Int, 2, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

enum class Errc {
  MissingPeriod,
  PeriodMismatch,
  NotNonNegative,
  NotUnitSums,
  FoldMismatch,
  NonNegativityViolated,
  NegativeWeight,
  LengthMismatch,
  NotAMatching,
  IndexOutOfRange,
  ArityMismatch,
  InvalidInput,
  NotConnected,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline Int deg(const Point& d) { return d.sum(); }
inline Int deg(const Point2& d) { return d.sum(); }

template <class A, class B>
bool leq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.array() <= b.array()).all();
}

inline Point unit(Eigen::Index n, Eigen::Index i) {
  Point e = Point::Zero(n);
  e(i) = 1;
  return e;
}

inline Point point(std::initializer_list<Int> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) p(i++) = x;
  return p;
}

// Floor modulus, result in [0, m).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int floordiv(Int a, Int m) { return (a - mod(a, m)) / m; }

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

std::string to_string(const Point& p);

// Componentwise box [lower, upper].
struct Window {
  Point lower;
  Point upper;

  Window() = default;
  Window(Point lo, Point hi);
  static Window cube(Eigen::Index n, Int lo, Int hi);

  Eigen::Index arity() const { return lower.size(); }
  std::size_t count() const;

  template <class F>
  void for_each(F&& f) const {
    const Eigen::Index n = lower.size();
    if (n == 0) return;
    Point d = lower;
    for (;;) {
      f(static_cast<const Point&>(d));
      Eigen::Index i = 0;
      while (i < n && d(i) == upper(i)) {
        d(i) = lower(i);
        ++i;
      }
      if (i == n) return;
      ++d(i);
    }
  }
};

}  // namespace rr

#endif
