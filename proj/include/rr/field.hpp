#ifndef RR_FIELD_HPP
#define RR_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "rr/core.hpp"

namespace rr {

using Rational = boost::multiprecision::mpq_rational;

// Element of GF(q). A modulus of 0 marks an unbound integer literal, which
// is what Eigen produces for Scalar(0) and Scalar(1); it adopts the modulus
// of whatever it meets.
class Zp {
 public:
  Zp() : v_(0), q_(0) {}
  Zp(int v) : v_(v), q_(0) {}  // NOLINT: Eigen needs the implicit literal conversion
  Zp(Int v, Int q) : v_(q ? mod(v, q) : v), q_(q) {}

  Int value() const { return v_; }
  Int modulus() const { return q_; }
  bool is_zero() const { return q_ ? v_ == 0 : v_ == 0; }

  friend Zp operator+(Zp a, Zp b) {
    const Int q = bind(a, b);
    return Zp(a.v_ + b.v_, q);
  }
  friend Zp operator-(Zp a, Zp b) {
    const Int q = bind(a, b);
    return Zp(a.v_ - b.v_, q);
  }
  friend Zp operator*(Zp a, Zp b) {
    const Int q = bind(a, b);
    if (!q) return Zp(a.v_ * b.v_, 0);
    return Zp(static_cast<Int>(static_cast<__int128>(a.v_) * b.v_ % q), q);
  }
  friend Zp operator/(Zp a, Zp b) {
    const Int q = bind(a, b);
    return a * b.inverse(q);
  }
  Zp operator-() const { return Zp(-v_, q_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }

  friend bool operator==(Zp a, Zp b) {
    const Int q = bind(a, b);
    return q ? mod(a.v_ - b.v_, q) == 0 : a.v_ == b.v_;
  }
  friend bool operator!=(Zp a, Zp b) { return !(a == b); }

  Zp inverse(Int q) const;

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  static Int bind(Zp& a, Zp& b) {
    if (a.q_ && b.q_ && a.q_ != b.q_) throw Error(Errc::InvalidInput, "mixed prime fields");
    const Int q = a.q_ ? a.q_ : b.q_;
    if (q) {
      a = Zp(a.v_, q);
      b = Zp(b.v_, q);
    }
    return q;
  }

  Int v_;
  Int q_;
};

inline Zp abs(const Zp& a) { return a; }

bool is_prime(Int q);

// Field descriptors used by builders to create bound constants.
struct Rationals {
  using Scalar = Rational;
  Scalar from_int(Int v) const { return Scalar(v); }
  std::string name() const { return "rational"; }
};

struct PrimeField {
  using Scalar = Zp;
  Int q;
  explicit PrimeField(Int q_);
  Scalar from_int(Int v) const { return Zp(v, q); }
  std::string name() const { return "gf:" + std::to_string(q); }
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

inline std::string scalar_string(const Rational& x) { return x.str(); }
inline std::string scalar_string(const Zp& x) { return std::to_string(x.value()); }

}  // namespace rr

namespace Eigen {

template <>
struct NumTraits<rr::Zp> : GenericNumTraits<rr::Zp> {
  using Real = rr::Zp;
  using NonInteger = rr::Zp;
  using Nested = rr::Zp;
  using Literal = rr::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return rr::Zp(0); }
  static inline Real dummy_precision() { return rr::Zp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
