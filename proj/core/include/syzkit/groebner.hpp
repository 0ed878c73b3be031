#pragma once

#include <vector>

#include "syzkit/free_module.hpp"

namespace syz {

// Reduced Groebner basis of a submodule of a graded free module. Elements are
// monic, inter-reduced (no lead term divides another, tails in normal form)
// and sorted, so equal submodules with equal orders produce equal objects.
struct GroebnerBasis {
  FreeModule ambient;
  ModuleOrder order = ModuleOrder::pot();
  std::vector<ModuleElement> gens;
};

struct DivisionResult {
  ModuleElement remainder;
  // quotients[k] collects the multiplier applied to basis[k]; only filled
  // when tracking was requested.
  std::vector<Polynomial> quotients;
};

// Remainder of v on division by basis: no term of the remainder is divisible
// by any lead term of basis. Deterministic: reducers are tried in list order.
ModuleElement normal_form(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                          const FreeModule& fm, const ModuleOrder& ord);
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

DivisionResult divide_tracked(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                              const FreeModule& fm, const ModuleOrder& ord);

struct BuchbergerOptions {
  // Chain criterion plus the product criterion (the latter restricted to
  // pairs of single-component elements, where it is actually valid for
  // modules). Turned off by the syzygy pass, which must divide every pair.
  bool use_criteria = true;
};

// Buchberger with the normal (lowest lcm degree first) strategy. Input must
// be homogeneous; the result is the reduced basis described above.
GroebnerBasis buchberger(std::vector<ModuleElement> gens, const FreeModule& fm,
                         const ModuleOrder& ord, const BuchbergerOptions& opts = {});

// Columns generating the full syzygy module of gb.gens, expressed in a new
// free module whose basis maps onto the generators (Schreyer shifts: basis
// element k has degree deg gens[k]). Every same-component S-pair is divided
// to zero, so the columns also form a Groebner basis for the Schreyer order
// induced by the input lead terms.
struct SyzygyMatrix {
  FreeModule ambient;  // rank = #gens, shifts = generator degrees
  ModuleOrder order = ModuleOrder::pot();  // the induced Schreyer order
  std::vector<ModuleElement> columns;
};

SyzygyMatrix syzygies(const GroebnerBasis& gb);

// Generating set of the syzygy module of an arbitrary homogeneous column
// list, via an augmented-module elimination basis: columns live in a free
// module of rank #gens whose basis element k has degree deg gens[k].
struct GeneratorSyzygies {
  FreeModule ambient;
  std::vector<ModuleElement> columns;
};

GeneratorSyzygies syzygies_of_generators(const std::vector<ModuleElement>& gens,
                                         const FreeModule& fm);

// Reduced Groebner basis of an ideal together with expressions of each basis
// element in the original generators: gb[i] = sum_j expr[i][j] * gens[j].
struct TrackedIdealBasis {
  std::vector<Polynomial> gens;
  std::vector<std::vector<Polynomial>> expr;
};

TrackedIdealBasis ideal_groebner_tracked(const std::vector<Polynomial>& gens, const RingPtr& ring);

// Normal form of a polynomial against a monic ideal basis (rank-one case).
Polynomial poly_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                            const PolyRing& ring);

struct PolyDivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

PolyDivisionResult poly_divide_tracked(const Polynomial& f, const std::vector<Polynomial>& basis,
                                       const PolyRing& ring);

}  // namespace syz
