#pragma once

#include <optional>
#include <vector>

#include "syzkit/polynomial.hpp"

namespace syz {

// Graded free module over the base polynomial ring. shifts[i] is the degree
// of the i-th basis element, so a term m*e_i is homogeneous of internal
// degree deg(m) + shifts[i].
struct FreeModule {
  RingPtr ring;
  std::vector<int> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
};

struct MTerm {
  int comp;
  Monomial mon;
  uint32_t coeff;
};

// Module term orders. All compare the pair (component, monomial); the coeff
// never participates.
//   Pot        position over term: lower component first, ties by degrevlex.
//   Filtration monomial degree ascending first (terms of lower order lead),
//              ties by degrevlex, then lower component. Lead terms under this
//              order cut out the associated graded module of the m-adic
//              filtration, which is what the Hilbert pipeline consumes.
//   Schreyer   induced by a list of (component, monomial) tags: compare
//              m * tag[i] against m' * tag[j] in the base order, ties by
//              lower generator index.
class ModuleOrder {
 public:
  enum class Kind { Pot, Filtration, Schreyer };

  static ModuleOrder pot() { return ModuleOrder(Kind::Pot); }
  static ModuleOrder filtration() { return ModuleOrder(Kind::Filtration); }
  static ModuleOrder schreyer(std::vector<std::pair<int, Monomial>> tags, Kind base);

  Kind kind() const { return kind_; }

  // +1 when (ca, a) leads (cb, b), 0 when equal, -1 otherwise.
  int cmp(int ca, const Monomial& a, int cb, const Monomial& b, int nvars) const;

 private:
  explicit ModuleOrder(Kind k) : kind_(k), base_(Kind::Pot) {}

  Kind kind_;
  Kind base_;
  std::vector<std::pair<int, Monomial>> tags_;
};

// Terms kept strictly descending in the order the owning computation uses.
// The element does not remember its order; every operation takes it as
// context. Empty list encodes zero.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::vector<MTerm> terms) : terms_(std::move(terms)) {}

  static ModuleElement basis(int comp, uint32_t coeff = 1) {
    return ModuleElement({MTerm{comp, Monomial::one(), coeff}});
  }

  const std::vector<MTerm>& terms() const { return terms_; }
  std::vector<MTerm>& terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const MTerm& lead() const;

  // Internal degree, requires homogeneity; -1 for zero.
  int degree(const FreeModule& fm) const;
  bool is_homogeneous(const FreeModule& fm) const;

  bool operator==(const ModuleElement& o) const;
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }

 private:
  std::vector<MTerm> terms_;
};

// Construction from arbitrary term soup: merge duplicates, drop zeros, sort.
ModuleElement element_normalize(std::vector<MTerm> terms, const FreeModule& fm,
                                const ModuleOrder& ord);

// Re-sorts an element that is normalized with respect to some other order.
ModuleElement element_resort(const ModuleElement& v, const FreeModule& fm, const ModuleOrder& ord);

ModuleElement element_add_scaled(const ModuleElement& a, const ModuleElement& b, uint32_t c,
                                 const FreeModule& fm, const ModuleOrder& ord);
ModuleElement element_sub(const ModuleElement& a, const ModuleElement& b, const FreeModule& fm,
                          const ModuleOrder& ord);
ModuleElement element_scale(const ModuleElement& a, uint32_t c, const FreeModule& fm);
ModuleElement element_mul_term(const ModuleElement& a, const Monomial& m);
ModuleElement element_mul_poly(const ModuleElement& a, const Polynomial& f, const FreeModule& fm,
                               const ModuleOrder& ord);

// Applies the column matrix to v: components of v index the columns.
ModuleElement element_apply_matrix(const std::vector<ModuleElement>& cols, const ModuleElement& v,
                                   const FreeModule& codomain, const ModuleOrder& ord);

// Component views.
Polynomial element_component(const ModuleElement& v, int comp, const FreeModule& fm);
ModuleElement element_from_components(const std::vector<Polynomial>& comps, const FreeModule& fm,
                                      const ModuleOrder& ord);

// Canonical structural comparison (degree, then Pot-lead, then termwise);
// used to sort generator lists deterministically.
bool element_structural_less(const ModuleElement& a, const ModuleElement& b, const FreeModule& fm);

std::string element_format(const ModuleElement& v, const FreeModule& fm);

}  // namespace syz
