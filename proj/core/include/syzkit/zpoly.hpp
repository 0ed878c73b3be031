#pragma once

#include <cstdint>
#include <vector>

namespace syz {

// Univariate polynomials over the integers, dense coefficient vector with no
// trailing zeros. Used for Hilbert series numerators and h-polynomials.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly one() { return ZPoly({1}); }
  static ZPoly zpow(int k);  // z^k

  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }

  long long eval_at_one() const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  // Multiplies by z^k.
  ZPoly shifted(int k) const;

  // Exact division by (1 - z); requires eval_at_one() == 0.
  ZPoly divide_by_one_minus_z() const;

  // Coefficients 0..n of the power series c(z) / (1-z)^m.
  std::vector<long long> series(int m, int n) const;

 private:
  void trim();
  std::vector<long long> c_;
};

// sum_{j} binom(j, i) * h_j, the i-th divided derivative of h at 1.
long long divided_derivative_at_one(const ZPoly& h, int i);

}  // namespace syz
