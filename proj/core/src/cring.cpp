#include "syzkit/cring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "syzkit/errors.hpp"
#include "syzkit/hilbert.hpp"

namespace syz {

ModuleElement CIRing::nf(const ModuleElement& v, const FreeModule& fm,
                         const ModuleOrder& ord) const {
  std::vector<MTerm> terms;
  for (int c = 0; c < fm.rank(); ++c) {
    Polynomial p = nf(element_component(v, c, fm));
    for (const Term& t : p.terms()) terms.push_back(MTerm{c, t.mon, t.coeff});
  }
  return element_normalize(std::move(terms), fm, ord);
}

CIRing make_ring(RingPtr q, std::vector<Polynomial> f) {
  const int m = q->nvars();
  const int c = static_cast<int>(f.size());
  if (c > m) throw UsageError("more relations than variables cannot form a regular sequence");
  for (const Polynomial& g : f) {
    if (g.is_zero()) throw UsageError("zero entry in the defining sequence");
    if (!g.is_homogeneous()) throw UsageError("defining sequence entries must be homogeneous");
    if (g.degree() < 2) throw UsageError("defining sequence entries must have degree >= 2");
  }

  CIRing A;
  A.q = q;
  A.f = std::move(f);
  TrackedIdealBasis t = ideal_groebner_tracked(A.f, q);
  A.f_gb = std::move(t.gens);
  A.f_gb_expr = std::move(t.expr);
  A.dim_a = m - c;

  // Regular sequence iff the Hilbert series of Q/(f) matches the Koszul
  // prediction prod (1 - z^{deg f_j}) / (1 - z)^m.
  std::vector<Monomial> leads;
  for (const Polynomial& g : A.f_gb) leads.push_back(g.lead().mon);
  ZPoly actual = monomial_ideal_numerator(std::move(leads), m);
  ZPoly expected = ZPoly::one();
  for (const Polynomial& g : A.f) expected = expected * (ZPoly::one() - ZPoly::zpow(g.degree()));
  if (!(actual == expected)) {
    int top = std::max(actual.degree(), expected.degree());
    std::vector<long long> sa = actual.series(m, top);
    std::vector<long long> se = expected.series(m, top);
    int d = 0;
    while (d <= top && sa[d] == se[d]) ++d;
    std::ostringstream os;
    os << "not a regular sequence: dim_k(Q/(f))_" << d << " = " << sa[d]
       << " but a regular sequence would give " << se[d];
    throw UsageError(os.str());
  }
  return A;
}

Presentation present(const CIRing& A, std::vector<int> shifts,
                     const std::vector<std::vector<Polynomial>>& columns) {
  Presentation P;
  P.ambient.ring = A.q;
  P.ambient.shifts = std::move(shifts);
  const ModuleOrder ord = ModuleOrder::pot();
  for (const auto& col : columns) {
    ModuleElement e = element_from_components(col, P.ambient, ord);
    e = A.nf(e, P.ambient, ord);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous(P.ambient))
      throw UsageError("relation column is not homogeneous: " + element_format(e, P.ambient));
    P.relations.push_back(std::move(e));
  }
  std::sort(P.relations.begin(), P.relations.end(),
            [&](const ModuleElement& a, const ModuleElement& b) {
              return element_structural_less(a, b, P.ambient);
            });
  P.minimal = true;
  for (const ModuleElement& e : P.relations)
    for (const MTerm& t : e.terms())
      if (t.mon.is_one()) P.minimal = false;
  return P;
}

Presentation zero_module(const CIRing& A) {
  Presentation P;
  P.ambient.ring = A.q;
  P.minimal = true;
  return P;
}

Presentation free_module_presentation(const CIRing& A, std::vector<int> shifts) {
  Presentation P;
  P.ambient.ring = A.q;
  P.ambient.shifts = std::move(shifts);
  P.minimal = true;
  return P;
}

Presentation minimalize(const CIRing& A, Presentation P, Over over, std::vector<int>* kept_rows) {
  const ModuleOrder ord = ModuleOrder::pot();
  GF k = A.q->field();
  auto& cols = P.relations;
  for (auto& c : cols)
    if (!c.is_homogeneous(P.ambient)) throw UsageError("minimalize requires homogeneous relations");
  std::vector<int> rows(P.ambient.rank());
  for (int i = 0; i < P.ambient.rank(); ++i) rows[i] = i;

  for (;;) {
    // First unit entry in (column, lowest component) order.
    int pj = -1, pi = -1;
    for (size_t j = 0; j < cols.size() && pj < 0; ++j) {
      for (const MTerm& t : cols[j].terms()) {
        if (!t.mon.is_one()) continue;
        if (pj < 0 || t.comp < pi) {
          pj = static_cast<int>(j);
          pi = t.comp;
        }
      }
    }
    if (pj < 0) break;

    // Scale the pivot column so the unit entry becomes 1, then clear row pi
    // from every other column. Column operations leave the cokernel intact.
    uint32_t unit = 0;
    for (const MTerm& t : cols[pj].terms())
      if (t.comp == pi && t.mon.is_one()) unit = t.coeff;
    ModuleElement pivot = element_scale(cols[pj], k.inv(unit), P.ambient);
    for (size_t l = 0; l < cols.size(); ++l) {
      if (static_cast<int>(l) == pj) continue;
      Polynomial q = element_component(cols[l], pi, P.ambient);
      if (q.is_zero()) continue;
      ModuleElement upd = element_sub(
          cols[l], element_mul_poly(pivot, q, P.ambient, ord), P.ambient, ord);
      cols[l] = over == Over::A ? A.nf(upd, P.ambient, ord) : upd;
    }
    cols.erase(cols.begin() + pj);

    // Drop generator pi; remaining columns have no terms there.
    FreeModule next;
    next.ring = P.ambient.ring;
    for (int i = 0; i < P.ambient.rank(); ++i)
      if (i != pi) next.shifts.push_back(P.ambient.shifts[i]);
    std::vector<ModuleElement> remapped;
    for (const ModuleElement& c : cols) {
      std::vector<MTerm> terms;
      for (const MTerm& t : c.terms()) {
        if (t.comp == pi) throw InternalError("pivot row not cleared during minimalization");
        terms.push_back(MTerm{t.comp > pi ? t.comp - 1 : t.comp, t.mon, t.coeff});
      }
      if (!terms.empty()) remapped.push_back(element_normalize(std::move(terms), next, ord));
    }
    P.ambient = next;
    cols = std::move(remapped);
    rows.erase(rows.begin() + pi);
  }

  cols.erase(std::remove_if(cols.begin(), cols.end(),
                            [](const ModuleElement& e) { return e.is_zero(); }),
             cols.end());
  std::sort(cols.begin(), cols.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return element_structural_less(a, b, P.ambient);
  });
  P.minimal = true;
  if (kept_rows) *kept_rows = std::move(rows);
  return P;
}

McmResult mcm_check(const CIRing& A, const Presentation& M, int retries, uint64_t seed) {
  McmResult res{McmStatus::NotVerified, 0};
  HilbertData H = hilbert_series(A, M);
  if (H.zero || H.dim != A.dim()) return McmResult{McmStatus::DimensionMismatch, 0};

  std::mt19937_64 rng(seed);
  const int m = A.q->nvars();
  Presentation cur = M;
  ZPoly cur_num = H.internal_numerator;

  // Depth = dim via a regular sequence of random linear forms. A form l is
  // regular on N exactly when the internal Hilbert numerator of N/lN equals
  // (1 - z) times the numerator of N.
  for (int level = 0; level < A.dim(); ++level) {
    bool found = false;
    for (int t = 0; t < retries && !found; ++t) {
      ++res.attempts;
      std::vector<Term> terms;
      for (int v = 0; v < m; ++v) {
        uint32_t c = static_cast<uint32_t>(rng() % A.q->p);
        if (c) terms.push_back(Term{Monomial::variable(v, m), c});
      }
      if (terms.empty()) continue;
      Polynomial ell = poly_normalize(std::move(terms), *A.q);

      Presentation quo = cur;
      const ModuleOrder ord = ModuleOrder::pot();
      for (int i = 0; i < cur.ambient.rank(); ++i) {
        ModuleElement le = element_mul_poly(ModuleElement::basis(i), ell, quo.ambient, ord);
        quo.relations.push_back(A.nf(le, quo.ambient, ord));
      }
      HilbertData Hq = hilbert_series(A, quo);
      ZPoly want = cur_num * (ZPoly::one() - ZPoly::zpow(1));
      if (Hq.internal_numerator == want) {
        cur = std::move(quo);
        cur_num = std::move(want);
        found = true;
      }
    }
    if (!found) return res;  // NotVerified with attempt count
  }
  res.status = McmStatus::Verified;
  return res;
}

}  // namespace syz
