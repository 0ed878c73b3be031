#include "syzkit/free_module.hpp"

#include <algorithm>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

ModuleOrder ModuleOrder::schreyer(std::vector<std::pair<int, Monomial>> tags, Kind base) {
  if (base == Kind::Schreyer) throw UsageError("schreyer order cannot stack on itself");
  ModuleOrder o(Kind::Schreyer);
  o.base_ = base;
  o.tags_ = std::move(tags);
  return o;
}

static int base_cmp(ModuleOrder::Kind kind, int ca, const Monomial& a, int cb, const Monomial& b,
                    int nvars) {
  switch (kind) {
    case ModuleOrder::Kind::Pot: {
      if (ca != cb) return ca < cb ? 1 : -1;
      return degrevlex_cmp(a, b, nvars);
    }
    case ModuleOrder::Kind::Filtration: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      int c = degrevlex_cmp(a, b, nvars);
      if (c != 0) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    default:
      throw InternalError("base_cmp on schreyer order");
  }
}

int ModuleOrder::cmp(int ca, const Monomial& a, int cb, const Monomial& b, int nvars) const {
  if (kind_ != Kind::Schreyer) return base_cmp(kind_, ca, a, cb, b, nvars);
  const auto& ta = tags_.at(ca);
  const auto& tb = tags_.at(cb);
  int c = base_cmp(base_, ta.first, a * ta.second, tb.first, b * tb.second, nvars);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

const MTerm& ModuleElement::lead() const {
  if (terms_.empty()) throw UsageError("zero module element has no lead term");
  return terms_.front();
}

int ModuleElement::degree(const FreeModule& fm) const {
  if (terms_.empty()) return -1;
  return terms_.front().mon.degree() + fm.shifts[terms_.front().comp];
}

bool ModuleElement::is_homogeneous(const FreeModule& fm) const {
  if (terms_.empty()) return true;
  int d = terms_.front().mon.degree() + fm.shifts[terms_.front().comp];
  for (const MTerm& t : terms_)
    if (t.mon.degree() + fm.shifts[t.comp] != d) return false;
  return true;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].comp != o.terms_[i].comp || terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].mon != o.terms_[i].mon)
      return false;
  }
  return true;
}

ModuleElement element_normalize(std::vector<MTerm> terms, const FreeModule& fm,
                                const ModuleOrder& ord) {
  const int nv = fm.ring->nvars();
  for (const MTerm& t : terms)
    if (t.comp < 0 || t.comp >= fm.rank()) throw InternalError("module term component out of range");
  std::sort(terms.begin(), terms.end(), [&](const MTerm& x, const MTerm& y) {
    return ord.cmp(x.comp, x.mon, y.comp, y.mon, nv) > 0;
  });
  GF k = fm.ring->field();
  std::vector<MTerm> out;
  out.reserve(terms.size());
  for (const MTerm& t : terms) {
    uint32_t c = t.coeff % fm.ring->p;
    if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
      out.back().coeff = k.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(MTerm{t.comp, t.mon, c});
    }
  }
  return ModuleElement(std::move(out));
}

ModuleElement element_resort(const ModuleElement& v, const FreeModule& fm, const ModuleOrder& ord) {
  return element_normalize(v.terms(), fm, ord);
}

ModuleElement element_add_scaled(const ModuleElement& a, const ModuleElement& b, uint32_t c,
                                 const FreeModule& fm, const ModuleOrder& ord) {
  const int nv = fm.ring->nvars();
  GF k = fm.ring->field();
  c %= fm.ring->p;
  if (c == 0) return a;
  std::vector<MTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    int cc;
    if (i == ta.size())
      cc = -1;
    else if (j == tb.size())
      cc = 1;
    else
      cc = ord.cmp(ta[i].comp, ta[i].mon, tb[j].comp, tb[j].mon, nv);
    if (cc > 0) {
      out.push_back(ta[i++]);
    } else if (cc < 0) {
      uint32_t v = k.mul(tb[j].coeff, c);
      if (v) out.push_back(MTerm{tb[j].comp, tb[j].mon, v});
      ++j;
    } else {
      uint32_t v = k.add(ta[i].coeff, k.mul(tb[j].coeff, c));
      if (v) out.push_back(MTerm{ta[i].comp, ta[i].mon, v});
      ++i;
      ++j;
    }
  }
  return ModuleElement(std::move(out));
}

ModuleElement element_sub(const ModuleElement& a, const ModuleElement& b, const FreeModule& fm,
                          const ModuleOrder& ord) {
  return element_add_scaled(a, b, fm.ring->field().neg(1), fm, ord);
}

ModuleElement element_scale(const ModuleElement& a, uint32_t c, const FreeModule& fm) {
  GF k = fm.ring->field();
  c %= fm.ring->p;
  if (c == 0) return ModuleElement();
  std::vector<MTerm> out;
  out.reserve(a.terms().size());
  for (const MTerm& t : a.terms()) out.push_back(MTerm{t.comp, t.mon, k.mul(t.coeff, c)});
  return ModuleElement(std::move(out));
}

ModuleElement element_mul_term(const ModuleElement& a, const Monomial& m) {
  // Multiplying every term by one monomial preserves any multiplicative order,
  // so no re-sort is needed.
  std::vector<MTerm> out;
  out.reserve(a.terms().size());
  for (const MTerm& t : a.terms()) out.push_back(MTerm{t.comp, t.mon * m, t.coeff});
  return ModuleElement(std::move(out));
}

ModuleElement element_mul_poly(const ModuleElement& a, const Polynomial& f, const FreeModule& fm,
                               const ModuleOrder& ord) {
  ModuleElement acc;
  for (const Term& t : f.terms())
    acc = element_add_scaled(acc, element_mul_term(a, t.mon), t.coeff, fm, ord);
  return acc;
}

ModuleElement element_apply_matrix(const std::vector<ModuleElement>& cols, const ModuleElement& v,
                                   const FreeModule& codomain, const ModuleOrder& ord) {
  ModuleElement acc;
  for (const MTerm& t : v.terms()) {
    if (t.comp >= static_cast<int>(cols.size()))
      throw InternalError("matrix application: component exceeds column count");
    acc = element_add_scaled(acc, element_mul_term(cols[t.comp], t.mon), t.coeff, codomain, ord);
  }
  return acc;
}

Polynomial element_component(const ModuleElement& v, int comp, const FreeModule& fm) {
  std::vector<Term> terms;
  for (const MTerm& t : v.terms())
    if (t.comp == comp) terms.push_back(Term{t.mon, t.coeff});
  return poly_normalize(std::move(terms), *fm.ring);
}

ModuleElement element_from_components(const std::vector<Polynomial>& comps, const FreeModule& fm,
                                      const ModuleOrder& ord) {
  if (static_cast<int>(comps.size()) != fm.rank())
    throw UsageError("component vector length does not match ambient rank");
  std::vector<MTerm> terms;
  for (int c = 0; c < fm.rank(); ++c)
    for (const Term& t : comps[c].terms()) terms.push_back(MTerm{c, t.mon, t.coeff});
  return element_normalize(std::move(terms), fm, ord);
}

bool element_structural_less(const ModuleElement& a, const ModuleElement& b, const FreeModule& fm) {
  const int nv = fm.ring->nvars();
  int da = a.is_zero() ? -1 : a.degree(fm);
  int db = b.is_zero() ? -1 : b.degree(fm);
  if (da != db) return da < db;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const ModuleOrder pot = ModuleOrder::pot();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = pot.cmp(ta[i].comp, ta[i].mon, tb[i].comp, tb[i].mon, nv);
    if (c != 0) return c > 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

std::string element_format(const ModuleElement& v, const FreeModule& fm) {
  std::ostringstream os;
  os << "(";
  for (int c = 0; c < fm.rank(); ++c) {
    if (c) os << ", ";
    os << poly_format(element_component(v, c, fm), *fm.ring);
  }
  os << ")";
  return os.str();
}

}  // namespace syz
