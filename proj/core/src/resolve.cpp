#include "syzkit/resolve.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "syzkit/errors.hpp"
#include "syzkit/linalg.hpp"

namespace syz {

std::vector<long long> Resolution::betti() const {
  std::vector<long long> b;
  for (const ResolutionStep& s : steps) b.push_back(s.pres.rank());
  return b;
}

std::vector<std::vector<int>> Resolution::graded_betti() const {
  std::vector<std::vector<int>> g;
  for (const ResolutionStep& s : steps) {
    std::vector<int> d = s.pres.ambient.shifts;
    std::sort(d.begin(), d.end());
    g.push_back(std::move(d));
  }
  return g;
}

SyzygyStep next_syzygy_step(const CIRing& A, const Presentation& P, Over over) {
  Presentation M = P.minimal ? P : minimalize(A, P, over);
  SyzygyStep out;
  if (M.rank() == 0 || M.relations.empty()) {
    // Free or zero module: the syzygy is zero.
    out.next = zero_module(A);
    return out;
  }

  const ModuleOrder ord = ModuleOrder::filtration();
  GroebnerBasis gb = defining_groebner(A, M, over);
  SyzygyMatrix syz = syzygies(gb);

  // Presentation of the syzygy module on the Groebner generators: Schreyer
  // columns, plus (over A) the expressions of each f_j * e_i, which account
  // for coefficients in (f).
  FreeModule fresh = syz.ambient;
  const ModuleOrder pot = ModuleOrder::pot();
  std::vector<ModuleElement> rels;
  for (const ModuleElement& col : syz.columns) {
    ModuleElement c = element_resort(col, fresh, pot);
    if (over == Over::A) c = A.nf(c, fresh, pot);
    if (!c.is_zero()) rels.push_back(std::move(c));
  }
  if (over == Over::A) {
    for (int i = 0; i < M.ambient.rank(); ++i) {
      for (const Polynomial& fj : A.f) {
        ModuleElement target =
            element_mul_poly(ModuleElement::basis(i), fj, M.ambient, gb.order);
        DivisionResult d = divide_tracked(target, gb.gens, M.ambient, gb.order);
        if (!d.remainder.is_zero())
          throw InternalError("f * basis element fails to reduce against the defining basis");
        std::vector<MTerm> terms;
        for (size_t t = 0; t < gb.gens.size(); ++t)
          for (const Term& qt : d.quotients[t].terms())
            terms.push_back(MTerm{static_cast<int>(t), qt.mon, qt.coeff});
        ModuleElement c = element_normalize(std::move(terms), fresh, pot);
        c = A.nf(c, fresh, pot);
        if (!c.is_zero()) rels.push_back(std::move(c));
      }
    }
  }

  Presentation raw;
  raw.ambient = fresh;
  raw.relations = std::move(rels);
  std::vector<int> kept;
  out.next = minimalize(A, std::move(raw), over, &kept);

  for (int k : kept) {
    ModuleElement g = element_resort(gb.gens[k], M.ambient, pot);
    if (over == Over::A) g = A.nf(g, M.ambient, pot);
    if (g.is_zero()) throw InternalError("kept syzygy generator reduces to zero");
    out.embedding.push_back(std::move(g));
  }
  return out;
}

Presentation next_syzygy(const CIRing& A, const Presentation& P, Over over) {
  return next_syzygy_step(A, P, over).next;
}

namespace {

void detect_periodicity(Resolution& R) {
  // next_syzygy is deterministic and commutes with uniform degree shifts, so
  // a single exact recurrence already proves the tail repeats.
  const int n = static_cast<int>(R.steps.size());
  for (int tau = 0; tau + 2 < n; ++tau) {
    std::optional<int> w;
    bool ok = true;
    for (int i = tau; i + 2 < n; ++i) {
      const Presentation& a = R.steps[i].pres;
      const Presentation& b = R.steps[i + 2].pres;
      if (a.rank() == 0 && b.rank() == 0) continue;
      auto m = presentation_shift_match(a, b);
      if (!m || (w && *w != *m)) {
        ok = false;
        break;
      }
      if (!w) w = *m;
    }
    if (ok) {
      R.periodic_from = tau;
      R.periodic_shift = w.value_or(0);
      return;
    }
  }
}

}  // namespace

Resolution resolve(const CIRing& A, const Presentation& M, const ResolveOptions& opts) {
  if (opts.steps < 1) throw UsageError("resolve requires at least one step");
  auto start = std::chrono::steady_clock::now();
  Resolution R;
  R.over = opts.over;
  R.steps.push_back(ResolutionStep{minimalize(A, M, opts.over), {}});
  for (int i = 1; i <= opts.steps; ++i) {
    if (opts.budget_ms >= 0) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      if (elapsed >= opts.budget_ms) {
        R.truncated = true;
        break;
      }
    }
    R.steps.push_back([&] {
      SyzygyStep s = next_syzygy_step(A, R.steps.back().pres, opts.over);
      return ResolutionStep{std::move(s.next), std::move(s.embedding)};
    }());
  }
  detect_periodicity(R);
  return R;
}

void extend_resolution(const CIRing& A, Resolution& R, int target_steps) {
  while (R.computed_steps() < target_steps) {
    SyzygyStep s = next_syzygy_step(A, R.steps.back().pres, R.over);
    R.steps.push_back(ResolutionStep{std::move(s.next), std::move(s.embedding)});
  }
  R.truncated = false;
  refresh_periodicity(R);
}

void refresh_periodicity(Resolution& R) {
  R.periodic_from.reset();
  R.periodic_shift = 0;
  detect_periodicity(R);
}

Resolution q_resolution(const CIRing& A, const Presentation& M) {
  // As a module over Q the cokernel picks up the defining relations of A.
  Presentation base = M;
  const ModuleOrder pot = ModuleOrder::pot();
  for (int i = 0; i < base.ambient.rank(); ++i)
    for (const Polynomial& fj : A.f)
      base.relations.push_back(element_mul_poly(ModuleElement::basis(i), fj, base.ambient, pot));
  base.minimal = false;

  Resolution R;
  R.over = Over::Q;
  R.steps.push_back(ResolutionStep{minimalize(A, std::move(base), Over::Q), {}});
  const int cap = A.q->nvars() + 1;
  for (int i = 1; i <= cap; ++i) {
    if (R.steps.back().pres.relations.empty()) break;
    SyzygyStep s = next_syzygy_step(A, R.steps.back().pres, Over::Q);
    R.steps.push_back(ResolutionStep{std::move(s.next), std::move(s.embedding)});
  }
  if (!R.steps.back().pres.relations.empty())
    throw InternalError("resolution over the polynomial ring did not terminate");
  return R;
}

int regularity(const CIRing& A, const Presentation& M) {
  Resolution R = q_resolution(A, M);
  if (R.steps.size() == 1 && R.steps[0].pres.rank() == 0) return kNegInfinity;
  int reg = kNegInfinity;
  for (size_t i = 0; i < R.steps.size(); ++i) {
    const auto& shifts = R.steps[i].pres.ambient.shifts;
    for (int s : shifts) reg = std::max(reg, s - static_cast<int>(i));
  }
  return reg;
}

std::optional<int> presentation_shift_match(const Presentation& a, const Presentation& b) {
  if (a.rank() != b.rank() || a.relations.size() != b.relations.size()) return std::nullopt;
  if (a.rank() == 0) return std::nullopt;
  int w = b.ambient.shifts[0] - a.ambient.shifts[0];
  for (int i = 0; i < a.rank(); ++i)
    if (b.ambient.shifts[i] - a.ambient.shifts[i] != w) return std::nullopt;
  for (size_t j = 0; j < a.relations.size(); ++j)
    if (a.relations[j] != b.relations[j]) return std::nullopt;
  return w;
}

bool differentials_compose_to_zero(const CIRing& A, const Resolution& R, int i) {
  // d_i o d_{i+1} on every generator of step i+1.
  if (i < 1 || i + 1 > R.computed_steps()) throw UsageError("differential index out of range");
  const auto& di = R.steps[i].differential;
  const auto& di1 = R.steps[i + 1].differential;
  const FreeModule& target = R.steps[i - 1].pres.ambient;
  const ModuleOrder pot = ModuleOrder::pot();
  for (const ModuleElement& col : di1) {
    ModuleElement img = element_apply_matrix(di, col, target, pot);
    if (R.over == Over::A) img = A.nf(img, target, pot);
    if (!img.is_zero()) return false;
  }
  return true;
}

namespace {

// Degree-d block of a column list against the monomial basis of the target.
struct Block {
  std::map<std::pair<int, std::vector<uint16_t>>, int> row_of;
  int rows = 0;

  static std::vector<uint16_t> key(const Monomial& m, int nv) {
    std::vector<uint16_t> k(nv);
    for (int i = 0; i < nv; ++i) k[i] = m.exponent(i);
    return k;
  }

  void build(const FreeModule& fm, int d, int nv) {
    for (int k = 0; k < fm.rank(); ++k)
      for (const Monomial& m : monomials_of_degree(d - fm.shifts[k], nv))
        row_of[{k, key(m, nv)}] = rows++;
  }
};

void append_multiples(const ModuleElement& col, const FreeModule& fm, int d, int nv, const GF& k,
                      const Block& blk, std::vector<std::vector<uint32_t>>& out) {
  if (col.is_zero()) return;
  int dc = col.degree(fm);
  for (const Monomial& m : monomials_of_degree(d - dc, nv)) {
    std::vector<uint32_t> v(blk.rows, 0);
    for (const MTerm& t : col.terms()) {
      auto it = blk.row_of.find({t.comp, Block::key(t.mon * m, nv)});
      if (it == blk.row_of.end()) throw InternalError("term escaped its degree block");
      v[it->second] = k.add(v[it->second], t.coeff);
    }
    out.push_back(std::move(v));
  }
}

int rank_of(const std::vector<std::vector<uint32_t>>& cols, int rows, const GF& k) {
  if (cols.empty() || rows == 0) return 0;
  DenseMat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return rank(std::move(m), k);
}

std::vector<ModuleElement> f_columns(const CIRing& A, const FreeModule& fm) {
  const ModuleOrder pot = ModuleOrder::pot();
  std::vector<ModuleElement> cols;
  for (int i = 0; i < fm.rank(); ++i)
    for (const Polynomial& fj : A.f)
      cols.push_back(element_mul_poly(ModuleElement::basis(i), fj, fm, pot));
  return cols;
}

}  // namespace

bool exactness_oracle(const CIRing& A, const Resolution& R, int i, int d) {
  if (i < 1 || i + 1 > R.computed_steps()) throw UsageError("exactness index out of range");
  const FreeModule& dom = R.steps[i].pres.ambient;
  const FreeModule& cod = R.steps[i - 1].pres.ambient;
  const int nv = A.q->nvars();
  GF k = A.q->field();
  const bool over_a = R.over == Over::A;

  Block dom_blk, cod_blk;
  dom_blk.build(dom, d, nv);
  cod_blk.build(cod, d, nv);

  // Image of the degree-d domain basis under d_i, as columns over Q.
  std::vector<std::vector<uint32_t>> dmap;
  for (int comp = 0; comp < dom.rank(); ++comp) {
    for (const Monomial& m : monomials_of_degree(d - dom.shifts[comp], nv)) {
      ModuleElement img = element_mul_term(R.steps[i].differential[comp], m);
      std::vector<uint32_t> v(cod_blk.rows, 0);
      for (const MTerm& t : img.terms()) {
        auto it = cod_blk.row_of.find({t.comp, Block::key(t.mon, nv)});
        if (it == cod_blk.row_of.end()) throw InternalError("term escaped its degree block");
        v[it->second] = k.add(v[it->second], t.coeff);
      }
      dmap.push_back(std::move(v));
    }
  }

  std::vector<std::vector<uint32_t>> f_cod, f_dom;
  if (over_a) {
    for (const ModuleElement& c : f_columns(A, cod)) append_multiples(c, cod, d, nv, k, cod_blk, f_cod);
    for (const ModuleElement& c : f_columns(A, dom)) append_multiples(c, dom, d, nv, k, dom_blk, f_dom);
  }

  int rank_f_cod = rank_of(f_cod, cod_blk.rows, k);
  int rank_f_dom = rank_of(f_dom, dom_blk.rows, k);

  std::vector<std::vector<uint32_t>> dmap_and_f = dmap;
  for (auto& c : f_cod) dmap_and_f.push_back(c);
  int rank_pi_d = rank_of(dmap_and_f, cod_blk.rows, k) - rank_f_cod;
  long long dim_ker = static_cast<long long>(dom_blk.rows) - rank_pi_d - rank_f_dom;

  std::vector<std::vector<uint32_t>> img_cols;
  for (const ModuleElement& c : R.steps[i + 1].differential)
    append_multiples(c, dom, d, nv, k, dom_blk, img_cols);
  for (auto& c : f_dom) img_cols.push_back(c);
  long long dim_im = rank_of(img_cols, dom_blk.rows, k) - rank_f_dom;

  return dim_ker == dim_im;
}

}  // namespace syz
