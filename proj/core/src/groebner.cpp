#include "syzkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

// Working element with cheap subtraction of scaled monomial multiples.
ModuleElement subtract_multiple(const ModuleElement& w, const ModuleElement& g, const Monomial& q,
                                uint32_t c, const FreeModule& fm, const ModuleOrder& ord) {
  return element_add_scaled(w, element_mul_term(g, q), fm.ring->field().neg(c), fm, ord);
}

struct Reducer {
  const std::vector<ModuleElement>* basis;

  // Index of the first basis element whose lead divides t, or -1.
  int find(const MTerm& t) const {
    const auto& b = *basis;
    for (size_t k = 0; k < b.size(); ++k) {
      if (b[k].is_zero()) continue;
      const MTerm& lt = b[k].lead();
      if (lt.comp == t.comp && lt.mon.divides(t.mon)) return static_cast<int>(k);
    }
    return -1;
  }
};

DivisionResult divide_impl(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                           const FreeModule& fm, const ModuleOrder& ord, bool track) {
  DivisionResult res;
  if (track) res.quotients.assign(basis.size(), Polynomial());
  Reducer red{&basis};
  GF k = fm.ring->field();
  ModuleElement w = v;
  std::vector<MTerm> rem;
  while (!w.is_zero()) {
    const MTerm t = w.lead();
    int idx = red.find(t);
    if (idx < 0) {
      rem.push_back(t);
      // Drop the lead term; the rest is untouched.
      std::vector<MTerm> tail(w.terms().begin() + 1, w.terms().end());
      w = ModuleElement(std::move(tail));
      continue;
    }
    const ModuleElement& g = basis[idx];
    Monomial q = Monomial::quotient(t.mon, g.lead().mon);
    uint32_t c = k.div(t.coeff, g.lead().coeff);
    w = subtract_multiple(w, g, q, c, fm, ord);
    if (track) {
      res.quotients[idx] =
          poly_add(res.quotients[idx], Polynomial::monomial_term(q, c), *fm.ring);
    }
  }
  // Remainder terms were emitted in descending order already.
  res.remainder = ModuleElement(std::move(rem));
  return res;
}

}  // namespace

ModuleElement normal_form(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                          const FreeModule& fm, const ModuleOrder& ord) {
  return divide_impl(v, basis, fm, ord, false).remainder;
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  ModuleElement sorted = element_resort(v, gb.ambient, gb.order);
  return normal_form(sorted, gb.gens, gb.ambient, gb.order);
}

DivisionResult divide_tracked(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                              const FreeModule& fm, const ModuleOrder& ord) {
  return divide_impl(v, basis, fm, ord, true);
}

namespace {

struct Pair {
  int deg;  // internal degree of the lcm term
  int i, j;

  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

bool single_component(const ModuleElement& v) {
  if (v.is_zero()) return true;
  int c = v.terms().front().comp;
  for (const MTerm& t : v.terms())
    if (t.comp != c) return false;
  return true;
}

ModuleElement s_pair(const ModuleElement& gi, const ModuleElement& gj, const FreeModule& fm,
                     const ModuleOrder& ord) {
  GF k = fm.ring->field();
  const MTerm& li = gi.lead();
  const MTerm& lj = gj.lead();
  Monomial l = Monomial::lcm(li.mon, lj.mon);
  ModuleElement a = element_mul_term(gi, Monomial::quotient(l, li.mon));
  ModuleElement b = element_mul_term(gj, Monomial::quotient(l, lj.mon));
  uint32_t ci = k.inv(li.coeff);
  uint32_t cj = k.inv(lj.coeff);
  return element_add_scaled(element_scale(a, ci, fm), b, k.neg(cj), fm, ord);
}

}  // namespace

GroebnerBasis buchberger(std::vector<ModuleElement> gens, const FreeModule& fm,
                         const ModuleOrder& ord, const BuchbergerOptions& opts) {
  GF k = fm.ring->field();

  std::vector<ModuleElement> basis;
  for (auto& g : gens) {
    ModuleElement e = element_resort(g, fm, ord);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous(fm)) throw UsageError("buchberger requires homogeneous generators");
    basis.push_back(element_scale(e, k.inv(e.lead().coeff), fm));
  }
  std::sort(basis.begin(), basis.end(),
            [&](const ModuleElement& a, const ModuleElement& b) {
              return element_structural_less(a, b, fm);
            });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  auto pair_of = [&](int i, int j) -> std::optional<Pair> {
    const MTerm& li = basis[i].lead();
    const MTerm& lj = basis[j].lead();
    if (li.comp != lj.comp) return std::nullopt;
    Monomial l = Monomial::lcm(li.mon, lj.mon);
    return Pair{l.degree() + fm.shifts[li.comp], i, j};
  };

  std::set<Pair> queue;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j)
      if (auto p = pair_of(i, j)) queue.insert(*p);

  // Pairs already popped (reduced or discarded); the chain criterion may only
  // cite these, which keeps its usage acyclic.
  std::set<std::pair<int, int>> handled;

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({p.i, p.j});

    const ModuleElement& gi = basis[p.i];
    const ModuleElement& gj = basis[p.j];
    const MTerm& li = gi.lead();
    const MTerm& lj = gj.lead();

    if (opts.use_criteria) {
      // Product criterion: only valid when both elements live in a single
      // component (then the polynomial argument applies verbatim).
      if (Monomial::coprime(li.mon, lj.mon) && single_component(gi) && single_component(gj))
        continue;
      // Chain criterion against already handled pairs.
      Monomial l = Monomial::lcm(li.mon, lj.mon);
      bool skip = false;
      for (int t = 0; t < static_cast<int>(basis.size()) && !skip; ++t) {
        if (t == p.i || t == p.j) continue;
        const MTerm& lt = basis[t].lead();
        if (lt.comp != li.comp || !lt.mon.divides(l)) continue;
        auto key1 = std::minmax(p.i, t);
        auto key2 = std::minmax(p.j, t);
        if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
          skip = true;
      }
      if (skip) continue;
    }

    ModuleElement s = s_pair(gi, gj, fm, ord);
    ModuleElement r = normal_form(s, basis, fm, ord);
    if (r.is_zero()) continue;
    r = element_scale(r, k.inv(r.lead().coeff), fm);
    int n = static_cast<int>(basis.size());
    basis.push_back(std::move(r));
    for (int i = 0; i < n; ++i)
      if (auto q = pair_of(i, n)) queue.insert(*q);
  }

  // Inter-reduce. Keep an element exactly when its lead term is minimal under
  // divisibility (first index wins among equal leads); then put every kept
  // tail in normal form against the other kept elements.
  std::vector<ModuleElement> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    const MTerm& li = basis[i].lead();
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const MTerm& lj = basis[j].lead();
      if (lj.comp != li.comp || !lj.mon.divides(li.mon)) continue;
      if (lj.mon == li.mon ? j < i : true) redundant = true;
    }
    if (!redundant) kept.push_back(basis[i]);
  }

  std::vector<ModuleElement> reduced;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<ModuleElement> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    ModuleElement r = normal_form(kept[i], others, fm, ord);
    if (!r.is_zero()) reduced.push_back(element_scale(r, k.inv(r.lead().coeff), fm));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModuleElement& a, const ModuleElement& b) {
              return element_structural_less(a, b, fm);
            });

  GroebnerBasis gb;
  gb.ambient = fm;
  gb.order = ord;
  gb.gens = std::move(reduced);
  return gb;
}

SyzygyMatrix syzygies(const GroebnerBasis& gb) {
  const FreeModule& fm = gb.ambient;
  GF k = fm.ring->field();
  const auto& g = gb.gens;

  SyzygyMatrix out;
  out.ambient.ring = fm.ring;
  std::vector<std::pair<int, Monomial>> tags;
  for (const ModuleElement& e : g) {
    out.ambient.shifts.push_back(e.degree(fm));
    tags.emplace_back(e.lead().comp, e.lead().mon);
  }
  out.order = ModuleOrder::schreyer(std::move(tags), gb.order.kind());

  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      const MTerm& li = g[i].lead();
      const MTerm& lj = g[j].lead();
      if (li.comp != lj.comp) continue;
      ModuleElement s = s_pair(g[i], g[j], fm, gb.order);
      DivisionResult d = divide_tracked(s, g, fm, gb.order);
      if (!d.remainder.is_zero())
        throw InternalError("s-pair does not reduce to zero against a Groebner basis");
      Monomial l = Monomial::lcm(li.mon, lj.mon);
      // Column: (lcm/lt_i)/lc_i e_i - (lcm/lt_j)/lc_j e_j - quotients.
      std::vector<MTerm> terms;
      terms.push_back(MTerm{static_cast<int>(i), Monomial::quotient(l, li.mon), k.inv(li.coeff)});
      terms.push_back(
          MTerm{static_cast<int>(j), Monomial::quotient(l, lj.mon), k.neg(k.inv(lj.coeff))});
      for (size_t t = 0; t < g.size(); ++t)
        for (const Term& qt : d.quotients[t].terms())
          terms.push_back(MTerm{static_cast<int>(t), qt.mon, k.neg(qt.coeff)});
      ModuleElement col = element_normalize(std::move(terms), out.ambient, out.order);
      if (!col.is_zero()) out.columns.push_back(std::move(col));
    }
  }
  std::sort(out.columns.begin(), out.columns.end(),
            [&](const ModuleElement& a, const ModuleElement& b) {
              return element_structural_less(a, b, out.ambient);
            });
  return out;
}

GeneratorSyzygies syzygies_of_generators(const std::vector<ModuleElement>& gens,
                                         const FreeModule& fm) {
  // Augment F with one basis element per generator and eliminate the F part:
  // basis elements of the augmented module with zero F part carry exactly the
  // syzygies of the input columns.
  const int r = fm.rank();
  const int s = static_cast<int>(gens.size());
  FreeModule aug;
  aug.ring = fm.ring;
  aug.shifts = fm.shifts;
  for (const ModuleElement& g : gens) {
    if (g.is_zero()) throw UsageError("syzygies_of_generators: zero generator");
    if (!g.is_homogeneous(fm)) throw UsageError("syzygies_of_generators: inhomogeneous generator");
    aug.shifts.push_back(g.degree(fm));
  }
  const ModuleOrder ord = ModuleOrder::pot();
  std::vector<ModuleElement> input;
  for (int k = 0; k < s; ++k) {
    std::vector<MTerm> terms = gens[k].terms();
    terms.push_back(MTerm{r + k, Monomial::one(), 1});
    input.push_back(element_normalize(std::move(terms), aug, ord));
  }
  GroebnerBasis gb = buchberger(std::move(input), aug, ord);

  GeneratorSyzygies out;
  out.ambient.ring = fm.ring;
  out.ambient.shifts.assign(aug.shifts.begin() + r, aug.shifts.end());
  for (const ModuleElement& e : gb.gens) {
    bool pure = true;
    for (const MTerm& t : e.terms())
      if (t.comp < r) {
        pure = false;
        break;
      }
    if (!pure) continue;
    std::vector<MTerm> terms;
    for (const MTerm& t : e.terms()) terms.push_back(MTerm{t.comp - r, t.mon, t.coeff});
    out.columns.push_back(
        element_normalize(std::move(terms), out.ambient, ModuleOrder::pot()));
  }
  return out;
}

TrackedIdealBasis ideal_groebner_tracked(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  // Augmented-module elimination: basis of { (f_j, e_j) } in a rank-(1+c)
  // module with component 0 dominant. Components 1..c carry the expression of
  // the component-0 part in the original generators.
  const int c = static_cast<int>(gens.size());
  FreeModule fm;
  fm.ring = ring;
  fm.shifts.assign(1 + c, 0);
  for (int j = 0; j < c; ++j) {
    if (gens[j].is_zero()) throw UsageError("zero generator in ideal basis");
    fm.shifts[1 + j] = gens[j].degree();
  }
  std::vector<ModuleElement> aug;
  const ModuleOrder ord = ModuleOrder::pot();
  for (int j = 0; j < c; ++j) {
    std::vector<MTerm> terms;
    for (const Term& t : gens[j].terms()) terms.push_back(MTerm{0, t.mon, t.coeff});
    terms.push_back(MTerm{1 + j, Monomial::one(), 1});
    aug.push_back(element_normalize(std::move(terms), fm, ord));
  }
  GroebnerBasis gb = buchberger(std::move(aug), fm, ord);

  TrackedIdealBasis out;
  GF k = ring->field();
  for (const ModuleElement& e : gb.gens) {
    Polynomial head = element_component(e, 0, fm);
    if (head.is_zero()) continue;  // syzygy of the generators, no ideal content
    uint32_t lc = head.lead().coeff;
    out.gens.push_back(poly_scale(head, k.inv(lc), *ring));
    std::vector<Polynomial> expr;
    for (int j = 0; j < c; ++j)
      expr.push_back(poly_scale(element_component(e, 1 + j, fm), k.inv(lc), *ring));
    out.expr.push_back(std::move(expr));
  }
  return out;
}

namespace {

PolyDivisionResult poly_divide_impl(const Polynomial& f, const std::vector<Polynomial>& basis,
                                    const PolyRing& ring, bool track) {
  PolyDivisionResult res;
  if (track) res.quotients.assign(basis.size(), Polynomial());
  GF k = ring.field();
  Polynomial w = f;
  std::vector<Term> rem;
  while (!w.is_zero()) {
    const Term t = w.lead();
    int idx = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].is_zero() && basis[i].lead().mon.divides(t.mon)) {
        idx = static_cast<int>(i);
        break;
      }
    }
    if (idx < 0) {
      rem.push_back(t);
      w = Polynomial(std::vector<Term>(w.terms().begin() + 1, w.terms().end()));
      continue;
    }
    const Polynomial& g = basis[idx];
    Monomial q = Monomial::quotient(t.mon, g.lead().mon);
    uint32_t c = k.div(t.coeff, g.lead().coeff);
    w = poly_sub(w, poly_mul_term(g, q, c, ring), ring);
    if (track)
      res.quotients[idx] = poly_add(res.quotients[idx], Polynomial::monomial_term(q, c), ring);
  }
  res.remainder = Polynomial(std::move(rem));
  return res;
}

}  // namespace

Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                            const PolyRing& ring) {
  return poly_divide_impl(f, basis, ring, false).remainder;
}

PolyDivisionResult poly_divide_tracked(const Polynomial& f, const std::vector<Polynomial>& basis,
                                       const PolyRing& ring) {
  return poly_divide_impl(f, basis, ring, true);
}

}  // namespace syz
