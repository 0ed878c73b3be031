#pragma once

#include <cstdint>

#include "syzkit/errors.hpp"

namespace syz {

// Arithmetic in GF(p) for a machine-word prime p. Elements are residues in
// [0, p) stored as uint32_t; products go through uint64_t.
class GF {
 public:
  explicit GF(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }

  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  uint32_t inv(uint32_t a) const {
    if (a == 0) throw UsageError("division by zero in GF(p)");
    return pow(a, p_ - 2);
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

 private:
  uint32_t p_;
};

bool is_prime(uint32_t n);

}  // namespace syz
