// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is pinned to exact values and tolerances; nothing
// here is calibrated at runtime.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "syzkit/eisenbud.hpp"
#include "syzkit/report.hpp"

using namespace syz;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  if (!pass) ++g_failures;
}

struct Example {
  ExampleSpec spec;
  CIRing ring;
  Presentation module;
  AnalysisResult analysis;
  double resolve_seconds = 0;
};

const std::vector<std::string>& bundle_names() {
  static const std::vector<std::string> names{
      "x2y2_ax2", "xy2_ax", "x3_ax", "x2_y2_ax", "x2_y2_k",
      "x2_y2_m",  "x2y2_k", "free_a", "empty-module"};
  return names;
}

Example load_example(const std::string& name) {
  ExampleSpec spec = parse_spec(std::string(SYZKIT_DATA_DIR) + "/" + name + ".toml");
  ModelObjects m = build_model(spec);
  AnalysisOptions opts = AnalysisOptions::from_spec(spec);
  auto t0 = std::chrono::steady_clock::now();
  AnalysisResult analysis = analyze_example(m.ring, m.module, opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return Example{std::move(spec), std::move(m.ring), std::move(m.module), std::move(analysis),
                 secs};
}

std::map<std::string, Example>& bundle() {
  static std::map<std::string, Example> cache;
  if (cache.empty())
    for (const std::string& n : bundle_names()) cache.emplace(n, load_example(n));
  return cache;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. A = GF(101)[x,y]/(x^2 y^2), M = A/(x^2): e_0 = 2 and e_1 = 1 at every
//    step through 10, exactly; under ten seconds.
void criterion_1() {
  const Example& ex = bundle().at("x2y2_ax2");
  bool ok = ex.analysis.resolution.computed_steps() >= 10;
  for (int i = 0; i <= 10 && ok; ++i) {
    const StepData& s = ex.analysis.sequences.steps[i];
    ok = s.e_at(0) == 2 && s.e_at(1) == 1;
  }
  bool fast = ex.resolve_seconds < 10.0;
  std::ostringstream os;
  os << "x2y2_ax2 has e0 = 2, e1 = 1 for all i <= 10 ("
     << ex.resolve_seconds << " s)";
  report(1, ok && fast, os.str());
}

// 2. A = GF(101)[x,y]/(x y^2), M = A/(x): e_1 alternates 0, 1 by parity for
//    i <= 11; under ten seconds.
void criterion_2() {
  const Example& ex = bundle().at("xy2_ax");
  bool ok = ex.analysis.resolution.computed_steps() >= 11;
  for (int i = 0; i <= 11 && ok; ++i) {
    const StepData& s = ex.analysis.sequences.steps[i];
    ok = s.e_at(1) == (i % 2 == 0 ? 0 : 1);
  }
  bool fast = ex.resolve_seconds < 10.0;
  std::ostringstream os;
  os << "xy2_ax has e1 = 0 on even and 1 on odd steps through 11 ("
     << ex.resolve_seconds << " s)";
  report(2, ok && fast, os.str());
}

// 3. A = GF(101)[x,y]/(x^3), M = A/(x): the parity classes of e_0 differ;
//    golden values 1 and 2, cross-checked against the dense oracle.
void criterion_3() {
  const Example& ex = bundle().at("x3_ax");
  bool ok = ex.analysis.resolution.computed_steps() >= 11;
  for (int i = 0; i <= 11 && ok; ++i) {
    const StepData& s = ex.analysis.sequences.steps[i];
    long long want = i % 2 == 0 ? 1 : 2;
    ok = s.e_at(0) == want;
    // Dimension-one modules stabilize at e_0 past their generator degrees;
    // the dense oracle confirms the golden values independently of the
    // series pipeline.
    if (ok) {
      const Presentation& P = ex.analysis.resolution.module_at(i);
      int top = *std::max_element(P.ambient.shifts.begin(), P.ambient.shifts.end());
      ok = oracle_dim(ex.ring, P, top + 6) == want;
    }
  }
  report(3, ok, "x3_ax alternates e0 = 1 / 2 by parity, oracle-confirmed");
}

// 4. Series dimensions equal dense-rank dimensions for every bundled module,
//    every step i <= 10, every degree n <= 12.
void criterion_4() {
  bool ok = true;
  long long checked = 0;
  for (const auto& [name, ex] : bundle()) {
    for (int i = 0; i <= std::min(10, ex.analysis.resolution.computed_steps()) && ok; ++i) {
      const Presentation& P = ex.analysis.resolution.module_at(i);
      if (P.rank() == 0) continue;
      HilbertData H = hilbert_series(ex.ring, P);
      for (int n = 0; n <= 12 && ok; ++n) {
        ++checked;
        if (graded_dimension(H, n) != oracle_dim(ex.ring, P, n)) {
          ok = false;
          g_notes.push_back("mismatch in " + name + " at step " + std::to_string(i) +
                            " degree " + std::to_string(n));
        }
      }
    }
  }
  report(4, ok,
         "series and dense dimensions agree on all bundled modules (" +
             std::to_string(checked) + " cells)");
}

// 5. Differentials compose to zero, every matrix is minimal, and degreewise
//    exactness holds through degree 12 at every interior step.
void criterion_5() {
  bool ok = true;
  for (const auto& [name, ex] : bundle()) {
    const Resolution& R = ex.analysis.resolution;
    for (int i = 1; i + 1 <= R.computed_steps() && ok; ++i) {
      if (!differentials_compose_to_zero(ex.ring, R, i)) {
        ok = false;
        g_notes.push_back(name + ": differential composition nonzero at " + std::to_string(i));
      }
      for (int d = 0; d <= 12 && ok; ++d)
        if (!exactness_oracle(ex.ring, R, i, d)) {
          ok = false;
          g_notes.push_back(name + ": exactness fails at step " + std::to_string(i) +
                            " degree " + std::to_string(d));
        }
    }
    for (int i = 1; i <= R.computed_steps() && ok; ++i)
      for (const ModuleElement& col : R.steps[i].differential)
        for (const MTerm& t : col.terms())
          if (t.mon.is_one()) {
            ok = false;
            g_notes.push_back(name + ": unit entry in differential " + std::to_string(i));
          }
  }
  report(5, ok, "all bundled resolutions are exact, minimal, with zero compositions");
}

// 6. The Betti fit has degree cx - 1 with cx <= codim everywhere; the
//    codimension-two residue field fits a degree-one period-two shape.
void criterion_6() {
  bool ok = true;
  for (const auto& [name, ex] : bundle()) {
    if (name == "empty-module") continue;  // no growth to fit
    const AnalysisResult& a = ex.analysis;
    if (!a.beta_fit.conclusive || !a.cx.conclusive) {
      ok = false;
      g_notes.push_back(name + ": inconclusive Betti fit");
      continue;
    }
    if (a.beta_fit.degree() != a.cx.cx - 1 || !a.cx.within_codim) {
      ok = false;
      g_notes.push_back(name + ": cx / degree mismatch");
    }
  }
  const AnalysisResult& k2 = bundle().at("x2_y2_k").analysis;
  bool shape = k2.cx.conclusive && k2.cx.cx == 2 && k2.beta_fit.degree() == 1 &&
               k2.beta_fit.period == 2;
  if (!shape) g_notes.push_back("x2_y2_k is not a degree-one period-two fit");
  report(6, ok && shape, "Betti fits have degree cx - 1 with cx <= codim; x2_y2_k is linear");
}

// 7. e_1 >= e_0 - mu on every verified maximal Cohen-Macaulay step.
void criterion_7() {
  bool ok = true;
  long long checked = 0;
  for (const auto& [name, ex] : bundle()) {
    for (const StepData& s : ex.analysis.sequences.steps) {
      if (s.mcm != McmStatus::Verified || s.is_zero_module()) continue;
      auto e0 = s.e_at(0), e1 = s.e_at(1);
      if (!e0 || !e1) continue;
      ++checked;
      if (*e1 < *e0 - s.beta) {
        ok = false;
        g_notes.push_back(name + ": inequality violated at step " + std::to_string(s.i));
      }
    }
  }
  report(7, ok,
         "e1 >= e0 - mu on every maximal Cohen-Macaulay step (" + std::to_string(checked) +
             " checked, 0 violations)");
}

// 8. The squared lifted differential equals sum_j f_j t_j exactly at every
//    step; hypersurface tails certify a matrix factorization.
void criterion_8() {
  bool ok = true;
  for (const auto& [name, ex] : bundle()) {
    const Resolution& R = ex.analysis.resolution;
    if (R.computed_steps() < 3 || ex.ring.codim() < 1) continue;
    LiftedResolution L = lift_resolution(ex.ring, R);
    EisenbudOperators E = eisenbud_operators(ex.ring, L);
    for (int i = 2; i <= R.computed_steps() && ok; ++i)
      if (!operator_identity_holds(ex.ring, L, E, i)) {
        ok = false;
        g_notes.push_back(name + ": operator identity fails at step " + std::to_string(i));
      }
    if (ex.ring.codim() == 1 && R.periodic_from) {
      int from = std::max(*R.periodic_from, 2);
      int demanded = 0, certified = 0;
      for (int i = from + 2; i <= R.computed_steps(); ++i) {
        if (R.module_at(i).rank() == 0) continue;  // resolution already ended
        ++demanded;
        if (hypersurface_mf_certificate(ex.ring, R, E, i)) ++certified;
      }
      if (certified < demanded) {
        ok = false;
        g_notes.push_back(name + ": matrix factorization tail not fully certified");
      }
    }
  }
  report(8, ok, "operator identity exact everywhere; hypersurface tails certified");
}

// 9. Wherever the scan finds a surjective map between steps of equal
//    dimension, e_0, e_1 and mu are additive on the kernel, exactly.
void criterion_9() {
  bool ok = true;
  long long checked = 0;
  for (const auto& [name, ex] : bundle()) {
    const AnalysisResult& a = ex.analysis;
    for (const ScanRecord& s : a.scans) {
      if (!s.surjective) continue;
      const StepData& lo = a.sequences.steps[s.n];
      const StepData& hi = a.sequences.steps[s.n + 2];
      if (lo.dim != hi.dim) continue;
      ++checked;
      long long ke0 = s.kernel.mu == 0 ? 0 : s.kernel.e[0];
      long long ke1 = s.kernel.mu == 0 ? 0 : (s.kernel.e.size() > 1 ? s.kernel.e[1] : 0);
      bool here = hi.e_at(0) && lo.e_at(0) && *hi.e_at(0) - *lo.e_at(0) == ke0 &&
                  hi.e_at(1) && lo.e_at(1) && *hi.e_at(1) - *lo.e_at(1) == ke1 &&
                  hi.beta - lo.beta == s.kernel.mu;
      if (!here) {
        ok = false;
        g_notes.push_back(name + ": additivity fails at n = " + std::to_string(s.n));
      }
    }
  }
  // The check must not be vacuous: the periodic and the codimension-two
  // examples both have to produce surjective maps.
  for (const char* must : {"x2y2_ax2", "x2_y2_k", "x2_y2_m"}) {
    bool found = false;
    for (const ScanRecord& s : bundle().at(must).analysis.scans) found = found || s.surjective;
    if (!found) {
      ok = false;
      g_notes.push_back(std::string(must) + ": scan found no surjective map");
    }
  }
  report(9, ok,
         "e0/e1/mu additive over every surjective kernel sequence (" + std::to_string(checked) +
             " checked)");
}

// 10. Regularity windows: the equality-case codimension-two examples keep a
//     non-increasing running max of normalized regularity over the second
//     half; periodic examples have eventually constant reg(i+2) - reg(i).
void criterion_10() {
  bool ok = true;

  for (const char* name : {"x2_y2_k", "x2_y2_m"}) {
    const AnalysisResult& a = bundle().at(name).analysis;
    if (!(a.cx.conclusive && a.cx.cx == 2 && a.inequality.equality_even &&
          a.inequality.equality_odd)) {
      ok = false;
      g_notes.push_back(std::string(name) + ": expected the cx = 2 equality case");
      continue;
    }
    std::vector<int> reg;
    for (const StepData& s : a.sequences.steps)
      if (!s.is_zero_module()) reg.push_back(s.reg_normalized);
    int n = static_cast<int>(reg.size());
    int first_max = reg[0], all_max = reg[0];
    for (int t = 0; t < n; ++t) {
      if (t <= n / 2) first_max = std::max(first_max, reg[t]);
      all_max = std::max(all_max, reg[t]);
    }
    if (all_max > first_max) {
      ok = false;
      g_notes.push_back(std::string(name) + ": normalized regularity grew in the second half");
    }
    if (a.reg_report.verdict != Verdict::Holds) {
      ok = false;
      g_notes.push_back(std::string(name) + ": window verdict is not 'holds'");
    }
  }

  for (const char* name : {"x2y2_ax2", "xy2_ax", "x3_ax", "x2_y2_ax", "x2y2_k"}) {
    const AnalysisResult& a = bundle().at(name).analysis;
    std::vector<int> reg;
    for (const StepData& s : a.sequences.steps)
      if (!s.is_zero_module()) reg.push_back(s.reg);
    bool constant = reg.size() >= 5;
    // Eventually constant second difference of the raw sequence.
    int last = static_cast<int>(reg.size()) - 1;
    for (int t = 2 + static_cast<int>(reg.size()) / 2; t <= last && constant; ++t)
      constant = (reg[t] - reg[t - 2]) == (reg[last] - reg[last - 2]);
    if (!constant) {
      ok = false;
      g_notes.push_back(std::string(name) + ": reg(i+2) - reg(i) does not stabilize");
    }
  }
  report(10, ok, "regularity windows behave as asserted (window-relative)");
}

// 11. Two runs with one seed produce byte-identical JSON reports.
void criterion_11() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "syzkit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;
  for (const char* name : {"x2y2_ax2", "x2_y2_k"}) {
    std::string spec = std::string(SYZKIT_DATA_DIR) + "/" + name + ".toml";
    std::string r1 = (dir / (std::string(name) + ".1.json")).string();
    std::string r2 = (dir / (std::string(name) + ".2.json")).string();
    std::string base = std::string(SYZKIT_CLI_PATH) + " report " + spec +
                       " --steps 10 --seed 5 -o ";
    if (std::system((base + r1 + " > /dev/null").c_str()) != 0 ||
        std::system((base + r2 + " > /dev/null").c_str()) != 0) {
      ok = false;
      g_notes.push_back(std::string(name) + ": report run failed");
      continue;
    }
    std::string b1 = slurp(r1), b2 = slurp(r2);
    if (b1.empty() || b1 != b2) {
      ok = false;
      g_notes.push_back(std::string(name) + ": reports differ between runs");
    }
  }
  report(11, ok, "repeated runs emit byte-identical JSON reports");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  for (const std::string& n : g_notes) std::printf("  note: %s\n", n.c_str());
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 acceptance criteria passed\n");
  return 0;
}
