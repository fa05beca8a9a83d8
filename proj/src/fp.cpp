#include "eqh/fp.hpp"

namespace eqh {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw ValidationError("PrimeField: modulus " + std::to_string(p) +
                          " is not prime");
  if (p >= 256)
    throw ValidationError("PrimeField: modulus " + std::to_string(p) +
                          " exceeds the byte-residue limit (p < 256)");
}

uint8_t PrimeField::inv(uint8_t a) const {
  if (a == 0) throw ValidationError("PrimeField: inverse of zero");
  // p is tiny; Fermat exponentiation is plenty.
  uint32_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return uint8_t(result);
}

}  // namespace eqh
