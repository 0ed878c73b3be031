#pragma once

#include <cstdint>
#include <vector>

#include "syzkit/groebner.hpp"

namespace syz {

// Which base ring a presentation-level computation works over: the quotient
// A = Q/(f) or the ambient polynomial ring Q itself.
enum class Over { A, Q };

// Graded complete intersection A = Q/(f_1,...,f_c); the f_j are homogeneous
// of degree >= 2 and form a regular sequence (verified at construction via
// the Hilbert series of Q/(f)). Residue classes are represented by normal
// forms against the reduced Groebner basis of (f).
struct CIRing {
  RingPtr q;
  std::vector<Polynomial> f;
  std::vector<Polynomial> f_gb;
  // f_gb[i] = sum_j f_gb_expr[i][j] * f[j]; exact, used to rewrite division
  // quotients in terms of the regular sequence itself.
  std::vector<std::vector<Polynomial>> f_gb_expr;
  int dim_a = 0;

  int codim() const { return static_cast<int>(f.size()); }
  int dim() const { return dim_a; }

  Polynomial nf(const Polynomial& g) const { return poly_normal_form(g, f_gb, *q); }
  ModuleElement nf(const ModuleElement& v, const FreeModule& fm, const ModuleOrder& ord) const;
};

// Rejects with a Hilbert-series witness when f is not a regular sequence.
CIRing make_ring(RingPtr q, std::vector<Polynomial> f);

// Finitely presented graded module: cokernel of the relation columns inside
// the ambient graded free module. Over A the entries are kept in normal form
// mod (f). A minimal presentation has no relation entry with a degree-0 term,
// so its rank equals the minimal number of generators of the cokernel.
struct Presentation {
  FreeModule ambient;
  std::vector<ModuleElement> relations;
  bool minimal = false;

  int rank() const { return ambient.rank(); }
};

Presentation present(const CIRing& A, std::vector<int> shifts,
                     const std::vector<std::vector<Polynomial>>& columns);

Presentation zero_module(const CIRing& A);
Presentation free_module_presentation(const CIRing& A, std::vector<int> shifts);

// Splits off unit entries by column operations and generator deletion until
// no relation entry has a degree-0 term. The cokernel is unchanged. When
// kept_rows is given it receives the surviving original generator indices.
Presentation minimalize(const CIRing& A, Presentation P, Over over = Over::A,
                        std::vector<int>* kept_rows = nullptr);

// Maximal Cohen-Macaulay test: dimension match plus a random regular
// sequence of linear forms, each tried `retries` times. Genericity over a
// finite field can fail, so a miss reports NotVerified rather than a
// definite no.
enum class McmStatus { Verified, NotVerified, DimensionMismatch };

struct McmResult {
  McmStatus status;
  int attempts = 0;

  bool verified() const { return status == McmStatus::Verified; }
};

McmResult mcm_check(const CIRing& A, const Presentation& M, int retries = 5, uint64_t seed = 1);

}  // namespace syz
