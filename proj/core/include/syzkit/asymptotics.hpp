#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>

#include "syzkit/eisenbud.hpp"

namespace syz {

using Rat = boost::rational<long long>;

// Polynomial in one variable with rational coefficients, monomial basis.
struct RatPoly {
  std::vector<Rat> coeffs;

  int degree() const;  // -1 for the zero polynomial
  Rat leading() const;
  Rat coeff_at(int k) const;
  Rat eval(long long m) const;
  std::string text(const std::string& var = "m") const;
};

struct ClassFit {
  bool conclusive = false;
  RatPoly poly;
  long long onset_m = 0;  // fits all sampled arguments >= onset_m
};

// f(period * m + j) = classes[j].poly(m) for all in-window indices past the
// onset. Fitted by finite differences on each residue class: the smallest
// degree whose difference row ends in a constant run of length >= 3 wins,
// then Newton interpolation on the stable tail. Never extrapolates: a class
// without a long enough stable run comes back inconclusive.
struct QuasiPolyFit {
  int period = 2;
  int start_index = 0;
  bool conclusive = false;
  std::vector<ClassFit> classes;
  int onset_index = 0;  // ambient index from which every class fits

  int degree() const;  // max class degree; -1 when identically zero
  Rat leading_at(int j, int deg) const;
};

QuasiPolyFit fit_quasi_polynomial(const std::vector<long long>& seq, int start_index = 0,
                                  int period = 2);

// Complexity read off the Betti growth: one more than the fitted degree.
struct CxEstimate {
  bool conclusive = false;
  int cx = 0;
  bool within_codim = true;
};

CxEstimate complexity_estimate(const QuasiPolyFit& betti_fit, int codim);

enum class Verdict { Holds, Fails, NotApplicable, Inconclusive };
const char* verdict_name(Verdict v);

// Per-step invariants of one resolution, the raw material every check
// consumes. e entries are absent for the zero module (conventionally zero
// in the fitted sequences) and e_1 is absent in dimension zero.
struct StepData {
  int i = 0;
  long long beta = 0;
  int dim = kNegInfinity;
  std::vector<long long> e;
  int reg = kNegInfinity;
  int reg_normalized = kNegInfinity;
  McmStatus mcm = McmStatus::DimensionMismatch;
  int mcm_attempts = 0;

  bool is_zero_module() const { return beta == 0; }
  std::optional<long long> e_at(int t) const {
    if (is_zero_module()) return 0;
    if (t < static_cast<int>(e.size())) return e[t];
    return std::nullopt;
  }
};

struct SequenceData {
  std::vector<StepData> steps;

  std::vector<long long> beta_sequence() const;
  // Longest suffix on which e_t is defined everywhere; first = start index.
  std::pair<int, std::vector<long long>> e_sequence(int t) const;
  std::vector<long long> mu_sequence() const { return beta_sequence(); }
};

SequenceData collect_sequences(const CIRing& A, const Resolution& R, int mcm_retries = 5,
                               uint64_t seed = 1);

// Kernel bookkeeping from the operator scans, consumed by the additivity
// check: invariants of K_n for each step with a surjective map.
struct KernelDatum {
  int n = 0;
  bool surjective = false;
  long long mu = 0;
  std::vector<long long> e;
  int dim = kNegInfinity;
};

KernelDatum kernel_datum(const CIRing& A, const OperatorMap& m);

struct TheoremReport {
  std::string name;
  Verdict verdict = Verdict::Inconclusive;
  // Hypothesis checklist and witness facts, serialized into reports. All
  // verdicts are relative to the computed window.
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> notes;

  void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
};

TheoremReport check_e0_theorem(const CIRing& A, const SequenceData& S, const QuasiPolyFit& e0_fit,
                               const CxEstimate& cx);
TheoremReport check_e1_theorem(const CIRing& A, const SequenceData& S, const QuasiPolyFit& e1_fit,
                               const CxEstimate& cx);

struct InequalityOutcome {
  TheoremReport report;
  bool equality_even = false;
  bool equality_odd = false;
};

InequalityOutcome check_inequality(const CIRing& A, const SequenceData& S,
                                   const QuasiPolyFit& e0_fit, const QuasiPolyFit& e1_fit,
                                   const QuasiPolyFit& mu_fit, const CxEstimate& cx);

TheoremReport check_reg_bounded(const CIRing& A, const SequenceData& S, const CxEstimate& cx,
                                bool equality_both_parities);

TheoremReport check_additivity(const CIRing& A, const SequenceData& S,
                               const std::vector<KernelDatum>& kernels);

}  // namespace syz
