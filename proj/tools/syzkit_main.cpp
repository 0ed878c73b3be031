// Command line driver: resolve / hilbert / analyze / operators / oracle /
// report over example declaration files.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "syzkit/eisenbud.hpp"
#include "syzkit/report.hpp"
#include "syzkit/version.hpp"

namespace {

using namespace syz;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CliOptions {
  std::string spec_path;
  std::optional<int> steps, degree_bound, period, trials;
  std::optional<uint64_t> seed;
  std::optional<long long> budget_ms;
  std::string cache_dir;
  std::string output = "json";
  std::string out_path;
  std::optional<int> max_degree;
};

void add_common(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("spec", o.spec_path, "example declaration file (.toml)")->required();
  cmd->add_option("--steps", o.steps, "resolution steps to compute");
  cmd->add_option("--degree-bound", o.degree_bound, "degree bound for degreewise checks");
  cmd->add_option("--period", o.period, "quasi-polynomial period");
  cmd->add_option("--seed", o.seed, "random seed for scans and genericity tests");
  cmd->add_option("--trials", o.trials, "operator scan trials");
  cmd->add_option("--cache-dir", o.cache_dir, "directory for resolution caches");
  cmd->add_option("--budget-ms", o.budget_ms, "time budget; exceeding it truncates the run");
  cmd->add_option("--output", o.output, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--out", o.out_path, "write the report to this path");
  cmd->add_option("--max-degree", o.max_degree, "largest degree the oracle cross-checks");
}

struct Loaded {
  ExampleSpec spec;
  CIRing ring;
  Presentation module;
  AnalysisOptions opts;
};

Loaded load(const CliOptions& o) {
  ExampleSpec spec = parse_spec(o.spec_path);
  if (o.steps) spec.steps = *o.steps;
  if (o.degree_bound) spec.degree_bound = *o.degree_bound;
  if (o.period) spec.period = *o.period;
  if (o.trials) spec.trials = *o.trials;
  if (o.seed) spec.seed = *o.seed;
  ModelObjects m = build_model(spec);
  AnalysisOptions opts = AnalysisOptions::from_spec(spec);
  if (o.budget_ms) opts.budget_ms = *o.budget_ms;
  return Loaded{std::move(spec), std::move(m.ring), std::move(m.module), opts};
}

std::string cache_path(const CliOptions& o, const ExampleSpec& spec) {
  return (std::filesystem::path(o.cache_dir) / (spec.name + ".cache.json")).string();
}

Resolution obtain_resolution(const CliOptions& o, Loaded& L) {
  if (!o.cache_dir.empty()) {
    std::filesystem::create_directories(o.cache_dir);
    std::string warn;
    if (auto cached = load_cache(cache_path(o, L.spec), L.spec, L.ring, &warn)) {
      if (cached->computed_steps() > L.opts.steps) {
        cached->steps.resize(L.opts.steps + 1);
        refresh_periodicity(*cached);
      } else if (cached->computed_steps() < L.opts.steps && !cached->truncated) {
        extend_resolution(L.ring, *cached, L.opts.steps);
      }
      save_cache(cache_path(o, L.spec), L.spec, L.ring, *cached);
      return std::move(*cached);
    }
    if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
  }
  ResolveOptions ro;
  ro.steps = L.opts.steps;
  ro.budget_ms = L.opts.budget_ms;
  Resolution R = resolve(L.ring, L.module, ro);
  if (!o.cache_dir.empty()) save_cache(cache_path(o, L.spec), L.spec, L.ring, R);
  return R;
}

std::string degrees_text(const std::vector<int>& d) {
  std::string s = "{";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

int cmd_resolve(const CliOptions& o) {
  Loaded L = load(o);
  Resolution R = obtain_resolution(o, L);
  std::cout << L.spec.name << ": betti numbers over " << (R.over == Over::A ? "A" : "Q") << "\n";
  auto gb = R.graded_betti();
  for (int i = 0; i <= R.computed_steps(); ++i)
    std::cout << "  step " << i << ": beta = " << R.steps[i].pres.rank() << "  degrees "
              << degrees_text(gb[i]) << "\n";
  if (R.periodic_from)
    std::cout << "  periodic from step " << *R.periodic_from << " with degree shift "
              << R.periodic_shift << "\n";
  if (R.truncated) {
    std::cout << "  TRUNCATED: budget exceeded before step " << L.opts.steps << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int cmd_hilbert(const CliOptions& o) {
  Loaded L = load(o);
  Resolution R = obtain_resolution(o, L);
  std::cout << "i,beta,dim,e...\n";
  for (int i = 0; i <= R.computed_steps(); ++i) {
    const Presentation& P = R.module_at(i);
    std::cout << i << "," << P.rank();
    if (P.rank() == 0) {
      std::cout << ",-inf\n";
      continue;
    }
    HilbertData H = hilbert_series(L.ring, P, R.over);
    std::cout << "," << H.dim;
    for (long long e : H.e) std::cout << "," << e;
    std::cout << "\n";
  }
  return R.truncated ? kExitBudget : kExitOk;
}

int write_or_print_report(const CliOptions& o, const Loaded& L, const AnalysisResult& res,
                          bool always_write) {
  std::string body = o.output == "csv" ? report_csv(L.spec, L.ring, res)
                                       : report_json(L.spec, L.ring, res);
  std::string path = o.out_path;
  if (path.empty() && always_write) path = L.spec.name + ".report." + o.output;
  if (!path.empty()) {
    write_file_atomic(path, body);
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

int verdict_exit(const AnalysisResult& res) {
  for (const TheoremReport* t :
       {&res.e0_report, &res.e1_report, &res.inequality.report, &res.reg_report,
        &res.additivity_report})
    if (t->verdict == Verdict::Fails) return kExitVerification;
  return res.truncated() ? kExitBudget : kExitOk;
}

int cmd_analyze(const CliOptions& o, bool always_write) {
  Loaded L = load(o);
  Resolution R = obtain_resolution(o, L);
  AnalysisResult res = analyze_resolution(L.ring, std::move(R), L.opts);
  std::cout << L.spec.name << ": cx = "
            << (res.cx.conclusive ? std::to_string(res.cx.cx) : std::string("inconclusive"))
            << ", betti fit degree = "
            << (res.beta_fit.conclusive ? std::to_string(res.beta_fit.degree())
                                        : std::string("?"))
            << "\n";
  for (const TheoremReport* t :
       {&res.e0_report, &res.e1_report, &res.inequality.report, &res.reg_report,
        &res.additivity_report})
    std::cout << "  " << t->name << ": " << verdict_name(t->verdict) << "\n";
  write_or_print_report(o, L, res, always_write);
  return verdict_exit(res);
}

int cmd_operators(const CliOptions& o) {
  Loaded L = load(o);
  Resolution R = obtain_resolution(o, L);
  if (R.computed_steps() < 3) {
    std::cerr << "resolution window too short for operators (need 3 steps)\n";
    return kExitUsage;
  }
  LiftedResolution lift = lift_resolution(L.ring, R);
  EisenbudOperators E = eisenbud_operators(L.ring, lift);
  bool all_ok = true;
  for (int i = 2; i <= R.computed_steps(); ++i) {
    bool ok = operator_identity_holds(L.ring, lift, E, i);
    all_ok = all_ok && ok;
    std::cout << "step " << i << ": operator identity " << (ok ? "ok" : "FAILED") << "\n";
  }
  for (int n = 0; n + 3 <= R.computed_steps(); ++n) {
    ScanResult s = scan_operator(L.ring, R, E, n, L.opts.trials,
                                 L.opts.seed + 7919u * static_cast<uint64_t>(n));
    std::cout << "scan n = " << n << ": "
              << (s.found ? "surjective map found" : "no surjective map") << " after "
              << s.trials_used << " trial(s)";
    if (s.found && s.map.kernel) std::cout << ", kernel mu = " << s.map.kernel->rank();
    std::cout << "\n";
  }
  if (!o.out_path.empty()) {
    write_file_atomic(o.out_path, operators_json(L.ring, R, E));
    std::cout << "wrote " << o.out_path << "\n";
  }
  return all_ok ? (R.truncated ? kExitBudget : kExitOk) : kExitVerification;
}

int cmd_oracle(const CliOptions& o) {
  Loaded L = load(o);
  Resolution R = obtain_resolution(o, L);
  int max_deg = o.max_degree.value_or(L.opts.degree_bound);
  int mismatches = 0;
  for (int i = 0; i <= R.computed_steps(); ++i) {
    const Presentation& P = R.module_at(i);
    if (P.rank() == 0) continue;
    HilbertData H = hilbert_series(L.ring, P, R.over);
    for (int n = 0; n <= max_deg; ++n) {
      long long lhs = graded_dimension(H, n);
      long long rhs = oracle_dim(L.ring, P, n, R.over);
      if (lhs != rhs) {
        ++mismatches;
        std::cout << "MISMATCH step " << i << " degree " << n << ": series " << lhs
                  << " vs dense " << rhs << "\n";
      }
    }
  }
  std::cout << L.spec.name << ": oracle cross-check "
            << (mismatches == 0 ? "clean" : std::to_string(mismatches) + " mismatches") << " (steps 0.."
            << R.computed_steps() << ", degrees 0.." << max_deg << ")\n";
  if (mismatches) return kExitVerification;
  return R.truncated ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded syzygy and Hilbert coefficient toolkit"};
  app.set_version_flag("--version", syz::kVersion);
  app.require_subcommand(1);

  CliOptions o;
  std::string mode;
  for (const char* name : {"resolve", "hilbert", "analyze", "operators", "oracle", "report"}) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common(sub, o);
    sub->callback([&mode, name] { mode = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mode == "resolve") return cmd_resolve(o);
    if (mode == "hilbert") return cmd_hilbert(o);
    if (mode == "analyze") return cmd_analyze(o, false);
    if (mode == "operators") return cmd_operators(o);
    if (mode == "oracle") return cmd_oracle(o);
    if (mode == "report") return cmd_analyze(o, true);
    return kExitUsage;
  } catch (const syz::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const syz::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
}
