#pragma once

#include <optional>

#include "syzkit/asymptotics.hpp"
#include "syzkit/spec_file.hpp"

namespace syz {

struct AnalysisOptions {
  int steps = 12;
  int degree_bound = 12;
  int period = 2;
  int trials = 20;
  uint64_t seed = 1;
  int mcm_retries = 5;
  long long budget_ms = -1;

  static AnalysisOptions from_spec(const ExampleSpec& spec);
};

// One scanned operator step, reduced to what reports and checks consume.
struct ScanRecord {
  int n = 0;
  bool found = false;
  bool surjective = false;
  int trials_used = 0;
  int weight = 0;
  std::vector<uint32_t> coeffs;
  KernelDatum kernel;
};

struct AnalysisResult {
  AnalysisOptions opts;
  Resolution resolution;
  SequenceData sequences;
  QuasiPolyFit beta_fit, e0_fit, e1_fit;
  CxEstimate cx;
  bool operators_built = false;
  std::vector<int> identity_steps;  // steps where the operator identity was re-verified
  std::vector<ScanRecord> scans;
  InequalityOutcome inequality;
  TheoremReport e0_report, e1_report, reg_report, additivity_report;

  bool truncated() const { return resolution.truncated; }
};

// Full pipeline: resolution, per-step invariants, fits, operator scans and
// the verification verdicts. Deterministic for fixed options.
AnalysisResult analyze_example(const CIRing& A, const Presentation& M,
                               const AnalysisOptions& opts);

// Same but reusing a precomputed resolution (e.g. from the cache).
AnalysisResult analyze_resolution(const CIRing& A, Resolution R, const AnalysisOptions& opts);

// Versioned JSON cache for resolutions, written atomically. Loading checks
// the stored normalized spec and the format/tool versions; any mismatch
// returns nothing and passes a warning back.
void save_cache(const std::string& path, const ExampleSpec& spec, const CIRing& A,
                const Resolution& R);
std::optional<Resolution> load_cache(const std::string& path, const ExampleSpec& spec,
                                     const CIRing& A, std::string* warning);

// Reports. Byte-stable for a fixed tool version, options and seed: no
// timestamps or timings enter the output.
std::string report_json(const ExampleSpec& spec, const CIRing& A, const AnalysisResult& R);
std::string report_csv(const ExampleSpec& spec, const CIRing& A, const AnalysisResult& R);

// Operator matrices in the cache encoding (entry lists of exponent/coeff
// terms), one block per resolution step.
std::string operators_json(const CIRing& A, const Resolution& R, const EisenbudOperators& E);

void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace syz
