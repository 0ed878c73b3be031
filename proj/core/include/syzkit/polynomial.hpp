#pragma once

#include <memory>
#include <string>
#include <vector>

#include "syzkit/field.hpp"
#include "syzkit/monomial.hpp"

namespace syz {

// Base polynomial ring GF(p)[x_1,...,x_n] with the standard grading and the
// degrevlex term order. Shared immutably by everything built on top of it.
struct PolyRing {
  uint32_t p;
  std::vector<std::string> vars;

  int nvars() const { return static_cast<int>(vars.size()); }
  GF field() const { return GF(p); }
  int var_index(const std::string& name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(uint32_t p, std::vector<std::string> vars);

struct Term {
  Monomial mon;
  uint32_t coeff;  // nonzero, in [1, p)
};

// Terms sorted in strictly descending degrevlex order, no zero coefficients,
// no duplicate monomials. Empty term list encodes the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(uint32_t c, const PolyRing& ring);
  static Polynomial monomial_term(Monomial m, uint32_t c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  const Term& lead() const;
  int degree() const;  // -1 for zero

  // All terms share one total degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PolyRing& ring);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PolyRing& ring);
Polynomial poly_neg(const Polynomial& a, const PolyRing& ring);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PolyRing& ring);
Polynomial poly_scale(const Polynomial& a, uint32_t c, const PolyRing& ring);
Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, uint32_t c, const PolyRing& ring);

// Sorts, merges duplicate monomials and drops zero coefficients.
Polynomial poly_normalize(std::vector<Term> terms, const PolyRing& ring);

// Text form, e.g. "3*x^2*y + 1". Variables come from the ring declaration,
// '^' marks powers, '*' products; integer coefficients are reduced mod p.
// On bad input throws UsageError with the offset baked into the message and
// reported through *error_pos when provided.
Polynomial poly_parse(const std::string& text, const PolyRing& ring, size_t* error_pos = nullptr);
std::string poly_format(const Polynomial& a, const PolyRing& ring);

}  // namespace syz
