#include "syzkit/hilbert.hpp"

#include <algorithm>
#include <map>

#include "syzkit/errors.hpp"
#include "syzkit/linalg.hpp"

namespace syz {

namespace {

// Minimal generating set: drop duplicates and multiples.
std::vector<Monomial> interreduce_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool multiple = false;
    for (size_t j = 0; j < gens.size() && !multiple; ++j)
      if (j != i && gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i)) multiple = true;
    if (!multiple) out.push_back(gens[i]);
  }
  return out;
}

using Memo = std::map<std::vector<Monomial>, ZPoly>;

ZPoly numerator_rec(std::vector<Monomial> gens, int nvars, Memo& memo) {
  gens = interreduce_monomials(std::move(gens));
  if (gens.empty()) return ZPoly::one();
  if (gens.size() == 1 && gens[0].is_one()) return ZPoly();

  auto it = memo.find(gens);
  if (it != memo.end()) return it->second;

  // Pairwise coprime generators form a regular sequence.
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;

  ZPoly result;
  if (coprime) {
    result = ZPoly::one();
    for (const Monomial& g : gens)
      result = result * (ZPoly::one() - ZPoly::zpow(g.degree()));
  } else {
    // Pivot on the variable hitting the most generators:
    // N(I) = N(I + (x)) + z * N(I : x).
    int best = -1, best_count = 0;
    for (int v = 0; v < nvars; ++v) {
      int count = 0;
      for (const Monomial& g : gens)
        if (g.exponent(v) > 0) ++count;
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    std::vector<Monomial> plus{Monomial::variable(best, nvars)};
    for (const Monomial& g : gens)
      if (g.exponent(best) == 0) plus.push_back(g);
    std::vector<Monomial> colon;
    for (Monomial g : gens) {
      if (g.exponent(best) > 0) g.set_exponent(best, static_cast<uint16_t>(g.exponent(best) - 1));
      colon.push_back(g);
    }
    result = numerator_rec(std::move(plus), nvars, memo) +
             numerator_rec(std::move(colon), nvars, memo).shifted(1);
  }
  memo.emplace(std::move(gens), result);
  return result;
}

}  // namespace

ZPoly monomial_ideal_numerator(std::vector<Monomial> gens, int nvars) {
  Memo memo;
  return numerator_rec(std::move(gens), nvars, memo);
}

GroebnerBasis defining_groebner(const CIRing& A, const Presentation& P, Over over) {
  const ModuleOrder ord = ModuleOrder::filtration();
  std::vector<ModuleElement> gens;
  for (const ModuleElement& c : P.relations)
    if (!c.is_zero()) gens.push_back(c);
  if (over == Over::A) {
    for (int i = 0; i < P.ambient.rank(); ++i)
      for (const Polynomial& fj : A.f)
        gens.push_back(element_mul_poly(ModuleElement::basis(i), fj, P.ambient, ord));
  }
  return buchberger(std::move(gens), P.ambient, ord);
}

HilbertData hilbert_from_groebner(const GroebnerBasis& gb) {
  // The associated graded extraction reads lead terms, which only cut out
  // the filtration of the module under the filtration-compatible order.
  if (gb.order.kind() != ModuleOrder::Kind::Filtration)
    throw UsageError("hilbert extraction needs a filtration-order basis");
  HilbertData H;
  const FreeModule& fm = gb.ambient;
  H.nvars = fm.ring->nvars();
  if (fm.rank() == 0) return H;  // zero module

  std::vector<std::vector<Monomial>> leads(fm.rank());
  for (const ModuleElement& e : gb.gens) leads[e.lead().comp].push_back(e.lead().mon);

  for (int k = 0; k < fm.rank(); ++k) {
    ZPoly nk = monomial_ideal_numerator(leads[k], H.nvars);
    H.adic_numerator = H.adic_numerator + nk;
    H.internal_numerator = H.internal_numerator + nk.shifted(fm.shifts[k]);
  }
  if (H.adic_numerator.is_zero()) return H;  // every generator is annihilated

  H.zero = false;
  ZPoly h = H.adic_numerator;
  int cancelled = 0;
  while (!h.is_zero() && h.eval_at_one() == 0) {
    h = h.divide_by_one_minus_z();
    ++cancelled;
  }
  H.h = h;
  H.dim = H.nvars - cancelled;
  if (H.dim < 0) throw InternalError("negative pole order in Hilbert series");
  for (int i = 0; i <= H.dim; ++i) H.e.push_back(divided_derivative_at_one(H.h, i));
  return H;
}

HilbertData hilbert_series(const CIRing& A, const Presentation& P, Over over) {
  return hilbert_from_groebner(defining_groebner(A, P, over));
}

long long e_coefficient(const HilbertData& H, int i) {
  if (H.zero) throw UsageError("Hilbert coefficients of the zero module are undefined");
  if (i < 0 || i > H.dim)
    throw UsageError("e_" + std::to_string(i) + " undefined for a module of dimension " +
                     std::to_string(H.dim));
  return H.e[i];
}

long long hilbert_samuel(const HilbertData& H, int n) {
  if (n < 0) throw UsageError("hilbert_samuel requires n >= 0");
  if (H.zero) return 0;
  // sum_{j<=n} of the associated graded series is one extra (1-z) pole.
  return H.adic_numerator.series(H.nvars + 1, n)[n];
}

long long hilbert_samuel(const CIRing& A, const Presentation& P, int n) {
  return hilbert_samuel(hilbert_series(A, P), n);
}

long long graded_dimension(const HilbertData& H, int n) {
  if (H.zero && H.internal_numerator.is_zero()) return 0;
  if (n < 0) return 0;
  return H.internal_numerator.series(H.nvars, n)[n];
}

namespace {

void enumerate_monomials(int v, int rem, int nvars, Monomial& m, std::vector<Monomial>& out) {
  if (v == nvars - 1) {
    m.set_exponent(v, static_cast<uint16_t>(rem));
    out.push_back(m);
    m.set_exponent(v, 0);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    m.set_exponent(v, static_cast<uint16_t>(e));
    enumerate_monomials(v + 1, rem - e, nvars, m, out);
  }
  m.set_exponent(v, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int d, int nvars) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) return out;
  Monomial m;
  enumerate_monomials(0, d, nvars, m, out);
  return out;
}

namespace {

struct DegreeBlock {
  std::map<std::pair<int, std::vector<uint16_t>>, int> row_of;
  int rows = 0;
};

std::vector<uint16_t> key_of(const Monomial& m, int nvars) {
  std::vector<uint16_t> k(nvars);
  for (int i = 0; i < nvars; ++i) k[i] = m.exponent(i);
  return k;
}

}  // namespace

long long oracle_dim(const CIRing& A, const Presentation& P, int n, Over over) {
  const int nv = A.q->nvars();
  const FreeModule& fm = P.ambient;
  if (fm.rank() == 0) return 0;

  DegreeBlock blk;
  for (int k = 0; k < fm.rank(); ++k)
    for (const Monomial& m : monomials_of_degree(n - fm.shifts[k], nv))
      blk.row_of[{k, key_of(m, nv)}] = blk.rows++;
  if (blk.rows == 0) return 0;

  std::vector<ModuleElement> cols = P.relations;
  if (over == Over::A) {
    const ModuleOrder ord = ModuleOrder::pot();
    for (int i = 0; i < fm.rank(); ++i)
      for (const Polynomial& fj : A.f)
        cols.push_back(element_mul_poly(ModuleElement::basis(i), fj, fm, ord));
  }

  std::vector<std::vector<uint32_t>> columns;
  for (const ModuleElement& c : cols) {
    if (c.is_zero()) continue;
    int d = c.degree(fm);
    for (const Monomial& m : monomials_of_degree(n - d, nv)) {
      std::vector<uint32_t> col(blk.rows, 0);
      GF k = A.q->field();
      for (const MTerm& t : c.terms()) {
        auto it = blk.row_of.find({t.comp, key_of(t.mon * m, nv)});
        if (it == blk.row_of.end()) throw InternalError("monomial outside its degree block");
        col[it->second] = k.add(col[it->second], t.coeff);
      }
      columns.push_back(std::move(col));
    }
  }

  DenseMat mat(blk.rows, static_cast<int>(columns.size()));
  for (int j = 0; j < mat.cols; ++j)
    for (int i = 0; i < mat.rows; ++i) mat.at(i, j) = columns[j][i];
  return blk.rows - rank(std::move(mat), A.q->field());
}

long long oracle_mu(const CIRing& A, const Presentation& P, Over over) {
  const int nv = A.q->nvars();
  const FreeModule& fm = P.ambient;
  if (fm.rank() == 0) return 0;
  int lo = *std::min_element(fm.shifts.begin(), fm.shifts.end());
  int hi = *std::max_element(fm.shifts.begin(), fm.shifts.end());

  long long mu = 0;
  for (int d = lo; d <= hi; ++d) {
    DegreeBlock blk;
    for (int k = 0; k < fm.rank(); ++k)
      for (const Monomial& m : monomials_of_degree(d - fm.shifts[k], nv))
        blk.row_of[{k, key_of(m, nv)}] = blk.rows++;
    if (blk.rows == 0) continue;

    std::vector<std::vector<uint32_t>> columns;
    // m * F in degree d: unit columns for every monomial of positive degree.
    for (int k = 0; k < fm.rank(); ++k) {
      if (d - fm.shifts[k] <= 0) continue;
      for (const Monomial& m : monomials_of_degree(d - fm.shifts[k], nv)) {
        std::vector<uint32_t> col(blk.rows, 0);
        col[blk.row_of[{k, key_of(m, nv)}]] = 1;
        columns.push_back(std::move(col));
      }
    }
    std::vector<ModuleElement> cols = P.relations;
    if (over == Over::A) {
      const ModuleOrder ord = ModuleOrder::pot();
      for (int i = 0; i < fm.rank(); ++i)
        for (const Polynomial& fj : A.f)
          cols.push_back(element_mul_poly(ModuleElement::basis(i), fj, fm, ord));
    }
    GF k = A.q->field();
    for (const ModuleElement& c : cols) {
      if (c.is_zero()) continue;
      int dc = c.degree(fm);
      for (const Monomial& m : monomials_of_degree(d - dc, nv)) {
        std::vector<uint32_t> col(blk.rows, 0);
        for (const MTerm& t : c.terms()) {
          auto it = blk.row_of.find({t.comp, key_of(t.mon * m, nv)});
          if (it == blk.row_of.end()) throw InternalError("monomial outside its degree block");
          col[it->second] = k.add(col[it->second], t.coeff);
        }
        columns.push_back(std::move(col));
      }
    }
    DenseMat mat(blk.rows, static_cast<int>(columns.size()));
    for (int j = 0; j < mat.cols; ++j)
      for (int i = 0; i < mat.rows; ++i) mat.at(i, j) = columns[j][i];
    mu += blk.rows - rank(std::move(mat), A.q->field());
  }
  return mu;
}

}  // namespace syz
