#pragma once

#include <climits>

#include "syzkit/cring.hpp"
#include "syzkit/zpoly.hpp"

namespace syz {

// Dimension / regularity sentinel for the zero module.
inline constexpr int kNegInfinity = INT_MIN / 2;

// Numerator of the Hilbert series of Q/(monomial ideal) over (1-z)^nvars,
// by the pivot recursion: split on a variable occurring in several minimal
// generators, N(I) = N(I + (x)) + z * N(I : x). Memoized per call.
ZPoly monomial_ideal_numerator(std::vector<Monomial> gens, int nvars);

// Hilbert data of a presented module M. Two gradings matter:
//  - internal: the given grading with ambient shifts; graded_dimension reads
//    dim_k M_n off internal_numerator.
//  - filtration: the filtration M >= mM >= m^2 M >= ..., whose associated
//    graded module drives the Hilbert-Samuel function, the h-polynomial and
//    the coefficients e_i. Its lead-term data comes from a Groebner basis
//    under the filtration-compatible order, where a term's weight is the
//    monomial degree alone. The two agree when all generators sit in one
//    degree (up to the shift), but not in general.
struct HilbertData {
  bool zero = true;
  int nvars = 0;
  ZPoly adic_numerator;      // associated graded series over (1-z)^nvars
  ZPoly internal_numerator;  // internally graded series over (1-z)^nvars
  int dim = kNegInfinity;    // pole order of the series at z = 1
  ZPoly h;                   // reduced h-polynomial, h(1) != 0
  std::vector<long long> e;  // e_0 .. e_dim
};

// Groebner basis of the defining submodule (relations, plus f * basis when
// working over A) under the filtration-compatible order.
GroebnerBasis defining_groebner(const CIRing& A, const Presentation& P, Over over = Over::A);

HilbertData hilbert_from_groebner(const GroebnerBasis& gb);
HilbertData hilbert_series(const CIRing& A, const Presentation& P, Over over = Over::A);

// e_i = h^(i)(1) / i!; rejects i outside [0, dim].
long long e_coefficient(const HilbertData& H, int i);

// Length of M / m^{n+1} M.
long long hilbert_samuel(const HilbertData& H, int n);
long long hilbert_samuel(const CIRing& A, const Presentation& P, int n);

// dim_k M_n in the internal grading.
long long graded_dimension(const HilbertData& H, int n);

// Independent dense-rank oracle for dim_k M_n: assembles the degree-n block
// of the relation columns (plus the f * basis columns over A) over Q and
// subtracts its rank from the ambient monomial count. No Groebner bases.
long long oracle_dim(const CIRing& A, const Presentation& P, int n, Over over = Over::A);

// Dense dim_k(M / mM); cross-checks the rank of a minimal presentation.
long long oracle_mu(const CIRing& A, const Presentation& P, Over over = Over::A);

// Monomial basis of degree-d polynomials in nvars variables, deterministic
// order; shared by the dense oracles.
std::vector<Monomial> monomials_of_degree(int d, int nvars);

}  // namespace syz
