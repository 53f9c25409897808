#include "rr/field.hpp"

namespace rr {

Zp Zp::inverse(Int q) const {
  if (!q) {
    if (v_ == 1 || v_ == -1) return *this;
    throw Error(Errc::InvalidInput, "inverse of an unbound field element");
  }
  Int a = mod(v_, q), m = q, x0 = 1, x1 = 0;
  if (a == 0) throw Error(Errc::InvalidInput, "division by zero in GF(" + std::to_string(q) + ")");
  while (m != 0) {
    const Int t = a / m;
    a -= t * m;
    std::swap(a, m);
    x0 -= t * x1;
    std::swap(x0, x1);
  }
  return Zp(x0, q);
}

bool is_prime(Int q) {
  if (q < 2) return false;
  for (Int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Int q_) : q(q_) {
  if (!is_prime(q) || q >= (Int{1} << 31))
    throw Error(Errc::InvalidInput, "field modulus must be a prime below 2^31");
}

}  // namespace rr
