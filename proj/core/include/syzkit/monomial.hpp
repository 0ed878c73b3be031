#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "syzkit/errors.hpp"

namespace syz {

inline constexpr int kMaxVars = 8;

// Exponent vector with the standard grading (every variable has weight 1).
// The variable count lives in the enclosing ring; monomials only carry the
// exponents and a cached total degree.
class Monomial {
 public:
  Monomial() : exp_{}, deg_(0) {}

  static Monomial one() { return Monomial(); }

  static Monomial variable(int v, int nvars, uint16_t e = 1) {
    if (v < 0 || v >= nvars || nvars > kMaxVars) throw UsageError("variable index out of range");
    Monomial m;
    m.exp_[v] = e;
    m.deg_ = e;
    return m;
  }

  uint16_t exponent(int v) const { return exp_[v]; }

  void set_exponent(int v, uint16_t e) {
    deg_ = static_cast<uint16_t>(deg_ - exp_[v] + e);
    exp_[v] = e;
  }

  int degree() const { return deg_; }

  bool is_one() const { return deg_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<uint16_t>(a.exp_[i] + b.exp_[i]);
    r.deg_ = static_cast<uint16_t>(a.deg_ + b.deg_);
    return r;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[i] > m.exp_[i]) return false;
    return true;
  }

  // Requires b | a.
  static Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<uint16_t>(a.exp_[i] - b.exp_[i]);
    r.deg_ = static_cast<uint16_t>(a.deg_ - b.deg_);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    uint16_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      d = static_cast<uint16_t>(d + r.exp_[i]);
    }
    r.deg_ = d;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Structural order (degree, then exponents lexicographically); used only
  // for canonical container keys, not as the term order.
  bool operator<(const Monomial& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    return exp_ < o.exp_;
  }

 private:
  std::array<uint16_t, kMaxVars> exp_;
  uint16_t deg_;
};

// Degree-reverse-lexicographic comparison on nvars variables.
// Returns +1 if a > b, 0 if equal, -1 if a < b. Higher total degree wins;
// on ties, scanning exponents from the last variable leftwards, the first
// difference decides and the smaller exponent wins.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b, int nvars) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = nvars - 1; i >= 0; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace syz
