#include "syzkit/zpoly.hpp"

#include "syzkit/errors.hpp"

namespace syz {

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::zpow(int k) {
  std::vector<long long> c(k + 1, 0);
  c[k] = 1;
  return ZPoly(std::move(c));
}

long long ZPoly::eval_at_one() const {
  long long s = 0;
  for (long long v : c_) s += v;
  return s;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::shifted(int k) const {
  if (is_zero()) return ZPoly();
  std::vector<long long> c(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return ZPoly(std::move(c));
}

ZPoly ZPoly::divide_by_one_minus_z() const {
  if (is_zero()) return ZPoly();
  if (eval_at_one() != 0) throw InternalError("(1 - z) does not divide this polynomial");
  // q_i = c_i + q_{i-1}; the top coefficient cancels exactly.
  std::vector<long long> q(c_.size() - 1, 0);
  long long acc = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    acc += c_[i];
    q[i] = acc;
  }
  return ZPoly(std::move(q));
}

std::vector<long long> ZPoly::series(int m, int n) const {
  // 1/(1-z)^m = sum_k binom(k+m-1, m-1) z^k.
  std::vector<long long> binom(n + 1, 1);
  if (m == 0) {
    for (int k = 1; k <= n; ++k) binom[k] = 0;
  } else {
    for (int k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (k + m - 1) / k;
  }
  std::vector<long long> out(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    long long s = 0;
    for (int i = 0; i <= k && i < static_cast<int>(c_.size()); ++i) s += c_[i] * binom[k - i];
    out[k] = s;
  }
  return out;
}

long long divided_derivative_at_one(const ZPoly& h, int i) {
  // binom(j, i) summed against coefficients.
  long long s = 0;
  for (int j = i; j <= h.degree(); ++j) {
    long long b = 1;
    for (int t = 0; t < i; ++t) b = b * (j - t) / (t + 1);
    s += b * h.coeff(j);
  }
  return s;
}

}  // namespace syz
