#pragma once

#include <optional>

#include "syzkit/hilbert.hpp"

namespace syz {

// One step of a free resolution: the minimal presentation of the i-th
// syzygy module plus the differential embedding its generators into the
// previous ambient module (empty at step 0).
struct ResolutionStep {
  Presentation pres;
  std::vector<ModuleElement> differential;
};

struct Resolution {
  Over over = Over::A;
  std::vector<ResolutionStep> steps;
  bool truncated = false;
  // Matrices repeat with period two from this step on, shifted uniformly by
  // periodic_shift degrees; detected by exact comparison.
  std::optional<int> periodic_from;
  int periodic_shift = 0;

  int computed_steps() const { return static_cast<int>(steps.size()) - 1; }
  const Presentation& module_at(int i) const { return steps.at(i).pres; }
  std::vector<long long> betti() const;
  std::vector<std::vector<int>> graded_betti() const;
};

struct SyzygyStep {
  Presentation next;
  std::vector<ModuleElement> embedding;  // generators of the syzygy inside the old ambient
};

// Minimal presentation of the first syzygy of coker(P): Groebner basis of
// the relation submodule (with the f * basis columns adjoined over A),
// Schreyer syzygies plus the f-division columns as its relations, entries
// reduced, then minimalized.
SyzygyStep next_syzygy_step(const CIRing& A, const Presentation& P, Over over = Over::A);
Presentation next_syzygy(const CIRing& A, const Presentation& P, Over over = Over::A);

struct ResolveOptions {
  int steps = 12;
  Over over = Over::A;
  long long budget_ms = -1;  // negative: unlimited
};

Resolution resolve(const CIRing& A, const Presentation& M, const ResolveOptions& opts = {});

// Continues an existing resolution out to target_steps and re-runs the
// periodicity scan; used when extending cached runs.
void extend_resolution(const CIRing& A, Resolution& R, int target_steps);
void refresh_periodicity(Resolution& R);

// Finite minimal resolution over the ambient polynomial ring; length is
// bounded by the variable count.
Resolution q_resolution(const CIRing& A, const Presentation& M);

// max over steps i of (largest generator degree at step i) - i, computed
// from the finite resolution over Q. kNegInfinity for the zero module.
int regularity(const CIRing& A, const Presentation& M);

// Dense degreewise checks, independent of the Groebner path.
bool exactness_oracle(const CIRing& A, const Resolution& R, int i, int d);

// Composition of consecutive differentials is exactly zero (mod f over A).
bool differentials_compose_to_zero(const CIRing& A, const Resolution& R, int i);

// Two consecutive presentations agree after shifting degrees by w.
std::optional<int> presentation_shift_match(const Presentation& a, const Presentation& b);

}  // namespace syz
