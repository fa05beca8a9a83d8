#pragma once

#include <cstdint>

#include "eqh/common.hpp"

namespace eqh {

bool is_prime(uint32_t n);

// The prime field GF(p). Residues are stored in a single byte, so p < 256;
// that covers every characteristic a dense desk-scale computation can carry.
class PrimeField {
 public:
  PrimeField() : p_(2) {}
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }

  uint8_t add(uint8_t a, uint8_t b) const {
    uint32_t s = uint32_t(a) + b;
    return uint8_t(s >= p_ ? s - p_ : s);
  }
  uint8_t sub(uint8_t a, uint8_t b) const {
    return uint8_t(a >= b ? a - b : a + p_ - b);
  }
  uint8_t neg(uint8_t a) const { return uint8_t(a == 0 ? 0 : p_ - a); }
  uint8_t mul(uint8_t a, uint8_t b) const {
    return uint8_t(uint32_t(a) * b % p_);
  }
  uint8_t inv(uint8_t a) const;
  // Reduce an arbitrary signed integer into [0, p).
  uint8_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return uint8_t(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  uint32_t p_;
};

}  // namespace eqh
