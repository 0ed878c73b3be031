#pragma once

#include "syzkit/resolve.hpp"

namespace syz {

// Column matrix between graded free modules, entries over Q.
struct MatrixQ {
  FreeModule domain;
  FreeModule codomain;
  std::vector<ModuleElement> cols;  // one per domain basis element

  Polynomial entry(int row, int col) const {
    return element_component(cols.at(col), row, codomain);
  }
};

// Entrywise lifts of the differentials to Q. Over A the stored normal forms
// already are the canonical lifts, so this is a re-packaging with the degree
// bookkeeping attached. Requires at least three computed steps.
struct LiftedResolution {
  std::vector<MatrixQ> diff;  // diff[i] defined for 1 <= i <= steps

  int steps() const { return static_cast<int>(diff.size()) - 1; }
};

LiftedResolution lift_resolution(const CIRing& A, const Resolution& R);

// Degree-two operators from the lifted squares: at every step i >= 2 the
// composite diff[i-1] * diff[i] has all entries in (f) and divides exactly as
// sum_j f_j * t[i][j]; the quotients are canonical normal-form divisions, so
// the operators are reproducible.
struct EisenbudOperators {
  std::vector<std::vector<MatrixQ>> t;  // t[i][j], valid for 2 <= i <= steps

  int steps() const { return static_cast<int>(t.size()) - 1; }
};

EisenbudOperators eisenbud_operators(const CIRing& A, const LiftedResolution& L);

// The defining identity at step i, checked exactly over Q.
bool operator_identity_holds(const CIRing& A, const LiftedResolution& L,
                             const EisenbudOperators& E, int i);

// diff * t_j == t_j * diff mod (f) at step i; exact commutation makes every
// k-combination of the operators a chain map.
bool operators_commute(const CIRing& A, const LiftedResolution& L, const EisenbudOperators& E,
                       int i, int j);

// Square tail step whose single operator matrix is an isomorphism over A;
// certifies the two-periodic matrix factorization on hypersurfaces.
bool hypersurface_mf_certificate(const CIRing& A, const Resolution& R,
                                 const EisenbudOperators& E, int i);

struct OperatorMap {
  int n = 0;            // alpha maps M_{n+2} onto M_n (degree drop `weight`)
  int weight = 0;       // common degree of the combined f_j
  std::vector<uint32_t> coeffs;
  MatrixQ alpha;        // entries reduced mod (f)
  bool surjective = false;
  std::optional<int> witness_generator;  // ambient basis index missed by the image
  std::optional<Presentation> kernel;    // minimal presentation when surjective
};

// Builds alpha = sum_j coeffs[j] * t[n+2][j]. Nonzero coefficients must sit
// on f_j of one common degree so the map stays graded. Surjectivity is
// decided by membership of every ambient basis element; on success the
// kernel presentation is computed when step n+3 is available.
OperatorMap operator_map(const CIRing& A, const Resolution& R, const EisenbudOperators& E,
                         const std::vector<uint32_t>& coeffs, int n);

struct ScanResult {
  OperatorMap map;
  int trials_used = 0;
  bool found = false;
};

// Tries the unit coefficient vectors first, then seeded random vectors,
// degree class by degree class. Deterministic for a fixed seed.
ScanResult scan_operator(const CIRing& A, const Resolution& R, const EisenbudOperators& E, int n,
                         int trials, uint64_t seed);

}  // namespace syz
