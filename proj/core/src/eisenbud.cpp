#include "syzkit/eisenbud.hpp"

#include <algorithm>
#include <random>

#include "syzkit/errors.hpp"
#include "syzkit/linalg.hpp"

namespace syz {

namespace {

const ModuleOrder kPot = ModuleOrder::pot();

ModuleElement apply(const MatrixQ& m, const ModuleElement& v) {
  return element_apply_matrix(m.cols, v, m.codomain, kPot);
}

MatrixQ compose(const MatrixQ& a, const MatrixQ& b) {
  // a after b: codomain(b) must be domain(a).
  MatrixQ r;
  r.domain = b.domain;
  r.codomain = a.codomain;
  for (const ModuleElement& col : b.cols) r.cols.push_back(apply(a, col));
  return r;
}

MatrixQ zero_matrix(const FreeModule& domain, const FreeModule& codomain) {
  MatrixQ r;
  r.domain = domain;
  r.codomain = codomain;
  r.cols.assign(domain.rank(), ModuleElement());
  return r;
}

std::vector<ModuleElement> f_basis_columns(const CIRing& A, const FreeModule& fm) {
  std::vector<ModuleElement> cols;
  for (int i = 0; i < fm.rank(); ++i)
    for (const Polynomial& fj : A.f)
      cols.push_back(element_mul_poly(ModuleElement::basis(i), fj, fm, kPot));
  return cols;
}

}  // namespace

LiftedResolution lift_resolution(const CIRing& A, const Resolution& R) {
  (void)A;
  if (R.computed_steps() < 3)
    throw UsageError("operator construction needs a resolution window of at least three steps");
  LiftedResolution L;
  L.diff.resize(R.steps.size());
  for (int i = 1; i <= R.computed_steps(); ++i) {
    L.diff[i].domain = R.steps[i].pres.ambient;
    L.diff[i].codomain = R.steps[i - 1].pres.ambient;
    L.diff[i].cols = R.steps[i].differential;
  }
  return L;
}

EisenbudOperators eisenbud_operators(const CIRing& A, const LiftedResolution& L) {
  const int c = A.codim();
  EisenbudOperators E;
  E.t.resize(L.diff.size());
  for (int i = 2; i <= L.steps(); ++i) {
    MatrixQ square = compose(L.diff[i - 1], L.diff[i]);
    std::vector<MatrixQ> ops(c);
    for (int j = 0; j < c; ++j) ops[j] = zero_matrix(L.diff[i].domain, L.diff[i - 1].codomain);
    for (int col = 0; col < square.domain.rank(); ++col) {
      std::vector<std::vector<MTerm>> col_terms(c);
      for (int row = 0; row < square.codomain.rank(); ++row) {
        Polynomial e = square.entry(row, col);
        if (e.is_zero()) continue;
        PolyDivisionResult d = poly_divide_tracked(e, A.f_gb, *A.q);
        if (!d.remainder.is_zero())
          throw InternalError("lifted square has an entry outside (f); lifting is broken");
        // Rewrite the Groebner quotients in terms of the sequence itself.
        for (int j = 0; j < c; ++j) {
          Polynomial tj;
          for (size_t g = 0; g < A.f_gb.size(); ++g)
            tj = poly_add(tj, poly_mul(d.quotients[g], A.f_gb_expr[g][j], *A.q), *A.q);
          for (const Term& t : tj.terms()) col_terms[j].push_back(MTerm{row, t.mon, t.coeff});
        }
      }
      for (int j = 0; j < c; ++j)
        ops[j].cols[col] = element_normalize(std::move(col_terms[j]), ops[j].codomain, kPot);
    }
    E.t[i] = std::move(ops);
  }
  return E;
}

bool operator_identity_holds(const CIRing& A, const LiftedResolution& L,
                             const EisenbudOperators& E, int i) {
  MatrixQ square = compose(L.diff[i - 1], L.diff[i]);
  for (int col = 0; col < square.domain.rank(); ++col) {
    for (int row = 0; row < square.codomain.rank(); ++row) {
      Polynomial sum;
      for (int j = 0; j < A.codim(); ++j)
        sum = poly_add(sum, poly_mul(A.f[j], E.t[i][j].entry(row, col), *A.q), *A.q);
      if (!(sum == square.entry(row, col))) return false;
    }
  }
  return true;
}

bool operators_commute(const CIRing& A, const LiftedResolution& L, const EisenbudOperators& E,
                       int i, int j) {
  // diff[i-2] * t[i][j] vs t[i-1][j] * diff[i], compared mod (f).
  if (i < 3 || i > E.steps()) throw UsageError("commutation needs steps i-1 and i");
  MatrixQ left = compose(L.diff[i - 2], E.t[i][j]);
  MatrixQ right = compose(E.t[i - 1][j], L.diff[i]);
  for (int col = 0; col < left.domain.rank(); ++col) {
    for (int row = 0; row < left.codomain.rank(); ++row) {
      Polynomial d = poly_sub(left.entry(row, col), right.entry(row, col), *A.q);
      if (!A.nf(d).is_zero()) return false;
    }
  }
  return true;
}

bool hypersurface_mf_certificate(const CIRing& A, const Resolution& R,
                                 const EisenbudOperators& E, int i) {
  if (A.codim() != 1) return false;
  if (i < 2 || i > E.steps()) return false;
  const FreeModule& dom = R.steps[i].pres.ambient;
  const FreeModule& cod = R.steps[i - 2].pres.ambient;
  if (dom.rank() != cod.rank() || dom.rank() == 0) return false;
  // Uniform degree shift between the two steps.
  int w = dom.shifts[0] - cod.shifts[0];
  for (int k = 0; k < dom.rank(); ++k)
    if (dom.shifts[k] - cod.shifts[k] != w) return false;
  // t reduces mod the irrelevant ideal to a scalar matrix; invertibility
  // there is equivalent to invertibility over A for equal graded ranks.
  const MatrixQ& t = E.t[i][0];
  DenseMat m(cod.rank(), dom.rank());
  for (int col = 0; col < dom.rank(); ++col)
    for (const MTerm& term : t.cols[col].terms())
      if (term.mon.is_one()) m.at(term.comp, col) = term.coeff;
  return rank(std::move(m), A.q->field()) == dom.rank();
}

namespace {

// Generators of {v in F_{n+2} : alpha(v) lies in N} for a submodule N of the
// codomain given by columns; returned in the domain coordinates.
std::vector<ModuleElement> preimage_generators(const CIRing& A, const MatrixQ& alpha,
                                               const std::vector<ModuleElement>& n_cols) {
  const FreeModule& cod = alpha.codomain;
  std::vector<ModuleElement> gens;
  std::vector<int> alpha_index;  // generator slot -> domain basis index, -1 otherwise
  for (int b = 0; b < alpha.domain.rank(); ++b) {
    if (alpha.cols[b].is_zero()) continue;  // e_b maps to zero, handled below
    gens.push_back(alpha.cols[b]);
    alpha_index.push_back(b);
  }
  const size_t head = gens.size();
  for (const ModuleElement& c : n_cols)
    if (!c.is_zero()) gens.push_back(c);
  for (const ModuleElement& c : f_basis_columns(A, cod)) gens.push_back(c);

  std::vector<ModuleElement> out;
  for (int b = 0; b < alpha.domain.rank(); ++b)
    if (alpha.cols[b].is_zero()) out.push_back(ModuleElement::basis(b));

  if (!gens.empty() && head > 0) {
    GeneratorSyzygies syz = syzygies_of_generators(gens, cod);
    for (const ModuleElement& s : syz.columns) {
      std::vector<MTerm> terms;
      for (const MTerm& t : s.terms())
        if (t.comp < static_cast<int>(head))
          terms.push_back(MTerm{alpha_index[t.comp], t.mon, t.coeff});
      ModuleElement v = element_normalize(std::move(terms), alpha.domain, kPot);
      v = A.nf(v, alpha.domain, kPot);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

OperatorMap operator_map(const CIRing& A, const Resolution& R, const EisenbudOperators& E,
                         const std::vector<uint32_t>& coeffs, int n) {
  if (n < 0 || n + 2 > R.computed_steps())
    throw UsageError("operator step outside the computed resolution window");
  if (static_cast<int>(coeffs.size()) != A.codim())
    throw UsageError("coefficient vector length must equal the codimension");

  OperatorMap out;
  out.n = n;
  out.coeffs = coeffs;

  // The combination must be homogeneous: all selected f_j of one degree.
  int w = -1;
  for (int j = 0; j < A.codim(); ++j) {
    if (coeffs[j] % A.q->p == 0) continue;
    int dj = A.f[j].degree();
    if (w >= 0 && dj != w)
      throw UsageError("operator combination mixes defining relations of different degrees");
    w = dj;
  }
  out.weight = std::max(w, 0);

  const FreeModule& dom = R.steps[n + 2].pres.ambient;
  const FreeModule& cod = R.steps[n].pres.ambient;
  out.alpha = zero_matrix(dom, cod);
  for (int j = 0; j < A.codim(); ++j) {
    if (coeffs[j] % A.q->p == 0) continue;
    for (int b = 0; b < dom.rank(); ++b)
      out.alpha.cols[b] = element_add_scaled(out.alpha.cols[b], E.t[n + 2][j].cols[b], coeffs[j],
                                             cod, kPot);
  }
  for (auto& colv : out.alpha.cols) colv = A.nf(colv, cod, kPot);

  // Surjectivity: every ambient basis element of F_n must be a combination of
  // the image columns, the relations of M_n, and (f) F_n.
  const std::vector<ModuleElement>& rels = R.steps[n + 1].differential;
  if (cod.rank() == 0) {
    out.surjective = true;
  } else {
    std::vector<ModuleElement> gens;
    for (const ModuleElement& c : out.alpha.cols)
      if (!c.is_zero()) gens.push_back(c);
    for (const ModuleElement& c : rels) gens.push_back(c);
    for (const ModuleElement& c : f_basis_columns(A, cod)) gens.push_back(c);
    GroebnerBasis gb = buchberger(std::move(gens), cod, ModuleOrder::filtration());
    out.surjective = true;
    for (int a = 0; a < cod.rank() && out.surjective; ++a) {
      if (!normal_form(ModuleElement::basis(a), gb).is_zero()) {
        out.surjective = false;
        out.witness_generator = a;
      }
    }
  }

  if (!out.surjective || n + 3 > R.computed_steps()) return out;

  // Kernel of M_{n+2} -> M_n: preimage of the relations of M_n, presented on
  // its own generators modulo the relations of M_{n+2}.
  if (dom.rank() == 0) {
    out.kernel = zero_module(A);
    return out;
  }
  if (cod.rank() == 0) {
    out.kernel = R.steps[n + 2].pres;
    return out;
  }
  std::vector<ModuleElement> u = preimage_generators(A, out.alpha, rels);
  if (u.empty()) {
    out.kernel = zero_module(A);
    return out;
  }
  std::vector<ModuleElement> gens = u;
  const size_t head = gens.size();
  for (const ModuleElement& c : R.steps[n + 3].differential) gens.push_back(c);
  for (const ModuleElement& c : f_basis_columns(A, dom)) gens.push_back(c);
  GeneratorSyzygies syz = syzygies_of_generators(gens, dom);

  Presentation raw;
  raw.ambient.ring = A.q;
  for (const ModuleElement& v : u) raw.ambient.shifts.push_back(v.degree(dom));
  for (const ModuleElement& s : syz.columns) {
    std::vector<MTerm> terms;
    for (const MTerm& t : s.terms())
      if (t.comp < static_cast<int>(head)) terms.push_back(t);
    ModuleElement col = element_normalize(std::move(terms), raw.ambient, kPot);
    col = A.nf(col, raw.ambient, kPot);
    if (!col.is_zero()) raw.relations.push_back(std::move(col));
  }
  out.kernel = minimalize(A, std::move(raw));
  return out;
}

ScanResult scan_operator(const CIRing& A, const Resolution& R, const EisenbudOperators& E, int n,
                         int trials, uint64_t seed) {
  if (trials < 1) throw UsageError("scan_operator needs at least one trial");
  const int c = A.codim();
  std::vector<int> degrees;
  for (const Polynomial& fj : A.f)
    if (std::find(degrees.begin(), degrees.end(), fj.degree()) == degrees.end())
      degrees.push_back(fj.degree());
  std::sort(degrees.begin(), degrees.end());

  std::mt19937_64 rng(seed);
  ScanResult res;
  for (int t = 0; t < trials; ++t) {
    std::vector<uint32_t> coeffs(c, 0);
    res.trials_used = t + 1;
    if (t < c) {
      coeffs[t] = 1;
    } else {
      int w = degrees[static_cast<size_t>(rng() % degrees.size())];
      bool any = false;
      for (int j = 0; j < c; ++j) {
        if (A.f[j].degree() != w) continue;
        coeffs[j] = static_cast<uint32_t>(rng() % A.q->p);
        any = any || coeffs[j] != 0;
      }
      if (!any) continue;  // a used trial that drew the zero vector
    }
    OperatorMap m = operator_map(A, R, E, coeffs, n);
    if (m.surjective) {
      res.map = std::move(m);
      res.found = true;
      return res;
    }
    res.map = std::move(m);
  }
  return res;
}

}  // namespace syz
