#include "syzkit/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "syzkit/errors.hpp"
#include "syzkit/version.hpp"

namespace syz {

using nlohmann::json;

AnalysisOptions AnalysisOptions::from_spec(const ExampleSpec& spec) {
  AnalysisOptions o;
  o.steps = spec.steps;
  o.degree_bound = spec.degree_bound;
  o.period = spec.period;
  o.trials = spec.trials;
  o.seed = spec.seed;
  return o;
}

AnalysisResult analyze_resolution(const CIRing& A, Resolution R, const AnalysisOptions& opts) {
  AnalysisResult res;
  res.opts = opts;
  res.resolution = std::move(R);
  const Resolution& reso = res.resolution;

  res.sequences = collect_sequences(A, reso, opts.mcm_retries, opts.seed);
  res.beta_fit = fit_quasi_polynomial(res.sequences.beta_sequence(), 0, opts.period);
  auto [s0, e0seq] = res.sequences.e_sequence(0);
  auto [s1, e1seq] = res.sequences.e_sequence(1);
  res.e0_fit = fit_quasi_polynomial(e0seq, s0, opts.period);
  res.e1_fit = fit_quasi_polynomial(e1seq, s1, opts.period);
  res.cx = complexity_estimate(res.beta_fit, A.codim());

  if (reso.computed_steps() >= 3 && A.codim() >= 1) {
    LiftedResolution L = lift_resolution(A, reso);
    EisenbudOperators E = eisenbud_operators(A, L);
    res.operators_built = true;
    for (int i = 2; i <= reso.computed_steps(); ++i)
      if (operator_identity_holds(A, L, E, i)) res.identity_steps.push_back(i);

    for (int n = 0; n + 3 <= reso.computed_steps(); ++n) {
      ScanResult s =
          scan_operator(A, reso, E, n, opts.trials, opts.seed + 7919u * static_cast<uint64_t>(n));
      ScanRecord rec;
      rec.n = n;
      rec.found = s.found;
      rec.trials_used = s.trials_used;
      rec.surjective = s.map.surjective;
      rec.weight = s.map.weight;
      rec.coeffs = s.map.coeffs;
      rec.kernel = kernel_datum(A, s.map);
      res.scans.push_back(std::move(rec));
    }
  }

  res.e0_report = check_e0_theorem(A, res.sequences, res.e0_fit, res.cx);
  res.e1_report = check_e1_theorem(A, res.sequences, res.e1_fit, res.cx);
  QuasiPolyFit mu_fit = res.beta_fit;
  res.inequality = check_inequality(A, res.sequences, res.e0_fit, res.e1_fit, mu_fit, res.cx);
  res.reg_report = check_reg_bounded(A, res.sequences, res.cx,
                                     res.inequality.equality_even && res.inequality.equality_odd);
  std::vector<KernelDatum> kernels;
  for (const ScanRecord& s : res.scans) kernels.push_back(s.kernel);
  res.additivity_report = check_additivity(A, res.sequences, kernels);
  return res;
}

AnalysisResult analyze_example(const CIRing& A, const Presentation& M,
                               const AnalysisOptions& opts) {
  ResolveOptions ro;
  ro.steps = opts.steps;
  ro.budget_ms = opts.budget_ms;
  return analyze_resolution(A, resolve(A, M, ro), opts);
}

// ---------------------------------------------------------------------------
// Serialization helpers

namespace {

json matrix_to_json(const std::vector<ModuleElement>& cols, int nvars) {
  // Flat entry list: [row, col, [[exponents...], coeff] terms], sorted by
  // (col, row) for stable diffs.
  json out = json::array();
  for (size_t c = 0; c < cols.size(); ++c) {
    std::map<int, json> per_row;
    for (const MTerm& t : cols[c].terms()) {
      json term = json::array();
      json exps = json::array();
      for (int v = 0; v < nvars; ++v) exps.push_back(t.mon.exponent(v));
      term.push_back(exps);
      term.push_back(t.coeff);
      per_row[t.comp].push_back(term);
    }
    for (auto& [row, terms] : per_row) {
      json entry = json::array();
      entry.push_back(row);
      entry.push_back(static_cast<int>(c));
      entry.push_back(terms);
      out.push_back(entry);
    }
  }
  return out;
}

std::vector<ModuleElement> matrix_from_json(const json& j, int ncols, const FreeModule& fm) {
  std::vector<std::vector<MTerm>> cols(ncols);
  for (const json& entry : j) {
    int row = entry.at(0).get<int>();
    int col = entry.at(1).get<int>();
    if (col < 0 || col >= ncols) throw UsageError("cache: column index out of range");
    for (const json& term : entry.at(2)) {
      Monomial m;
      const json& exps = term.at(0);
      for (size_t v = 0; v < exps.size(); ++v)
        m.set_exponent(static_cast<int>(v), exps[v].get<uint16_t>());
      cols[col].push_back(MTerm{row, m, term.at(1).get<uint32_t>()});
    }
  }
  std::vector<ModuleElement> out;
  for (auto& terms : cols)
    out.push_back(element_normalize(std::move(terms), fm, ModuleOrder::pot()));
  return out;
}

json spec_echo(const ExampleSpec& spec, const CIRing& A) {
  json j;
  j["p"] = spec.p;
  j["vars"] = spec.vars;
  json f = json::array();
  for (const Polynomial& g : A.f) f.push_back(poly_format(g, *A.q));
  j["f"] = f;
  j["rank"] = spec.rank;
  j["shifts"] = spec.shifts;
  j["relations"] = spec.relation_columns;
  return j;
}

const char* mcm_text(McmStatus s) {
  switch (s) {
    case McmStatus::Verified: return "verified";
    case McmStatus::NotVerified: return "not-verified";
    default: return "dimension-mismatch";
  }
}

json fit_to_json(const QuasiPolyFit& fit) {
  json j;
  j["conclusive"] = fit.conclusive;
  j["period"] = fit.period;
  j["start_index"] = fit.start_index;
  if (!fit.conclusive) return j;
  j["degree"] = fit.degree();
  j["onset"] = fit.onset_index;
  json classes = json::array();
  for (const ClassFit& c : fit.classes) classes.push_back(c.poly.text());
  j["classes"] = classes;
  return j;
}

json theorem_to_json(const TheoremReport& t) {
  json j;
  j["verdict"] = verdict_name(t.verdict);
  j["window_relative"] = true;
  json facts;
  for (const auto& [k, v] : t.facts) facts[k] = v;
  j["facts"] = facts;
  j["notes"] = t.notes;
  return j;
}

std::string reg_text(int reg) {
  return reg == kNegInfinity ? std::string("-inf") : std::to_string(reg);
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw UsageError("cannot move '" + tmp + "' into place");
}

void save_cache(const std::string& path, const ExampleSpec& spec, const CIRing& A,
                const Resolution& R) {
  const int nv = A.q->nvars();
  json j;
  j["format"] = kCacheFormatVersion;
  j["tool"] = kVersion;
  j["spec"] = spec_echo(spec, A);
  json steps = json::array();
  for (const ResolutionStep& s : R.steps) {
    json step;
    step["shifts"] = s.pres.ambient.shifts;
    step["relations"] = matrix_to_json(s.pres.relations, nv);
    step["relation_count"] = s.pres.relations.size();
    step["differential"] = matrix_to_json(s.differential, nv);
    steps.push_back(step);
  }
  json reso;
  reso["over"] = R.over == Over::A ? "A" : "Q";
  reso["truncated"] = R.truncated;
  reso["betti"] = R.betti();
  reso["steps"] = steps;
  j["resolution"] = reso;
  write_file_atomic(path, j.dump(1) + "\n");
}

std::optional<Resolution> load_cache(const std::string& path, const ExampleSpec& spec,
                                     const CIRing& A, std::string* warning) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    if (warning) *warning = std::string("unreadable cache: ") + e.what();
    return std::nullopt;
  }
  try {
    if (j.at("format").get<int>() != kCacheFormatVersion ||
        j.at("tool").get<std::string>() != kVersion) {
      if (warning) *warning = "cache version mismatch; recomputing";
      return std::nullopt;
    }
    if (j.at("spec") != spec_echo(spec, A)) {
      if (warning) *warning = "cache was built from a different declaration; recomputing";
      return std::nullopt;
    }
    Resolution R;
    R.over = j.at("resolution").at("over").get<std::string>() == "Q" ? Over::Q : Over::A;
    R.truncated = j.at("resolution").at("truncated").get<bool>();
    const json& steps = j.at("resolution").at("steps");
    for (size_t i = 0; i < steps.size(); ++i) {
      ResolutionStep s;
      s.pres.ambient.ring = A.q;
      for (const json& v : steps[i].at("shifts")) s.pres.ambient.shifts.push_back(v.get<int>());
      int nrel = steps[i].at("relation_count").get<int>();
      s.pres.relations = matrix_from_json(steps[i].at("relations"), nrel, s.pres.ambient);
      s.pres.minimal = true;
      if (i > 0) {
        const FreeModule& prev = R.steps[i - 1].pres.ambient;
        s.differential =
            matrix_from_json(steps[i].at("differential"), s.pres.ambient.rank(), prev);
      }
      R.steps.push_back(std::move(s));
    }
    refresh_periodicity(R);
    return R;
  } catch (const std::exception& e) {
    if (warning) *warning = std::string("malformed cache: ") + e.what();
    return std::nullopt;
  }
}

std::string report_json(const ExampleSpec& spec, const CIRing& A, const AnalysisResult& R) {
  json j;
  j["provenance"] = {
      {"tool", "syzkit"},          {"version", kVersion},
      {"seed", R.opts.seed},       {"steps", R.opts.steps},
      {"degree_bound", R.opts.degree_bound}, {"period", R.opts.period},
      {"trials", R.opts.trials},
  };
  json ring = spec_echo(spec, A);
  ring["dim"] = A.dim();
  ring["codim"] = A.codim();
  j["ring"] = ring;

  json reso;
  reso["truncated"] = R.resolution.truncated;
  reso["betti"] = R.resolution.betti();
  reso["graded_betti"] = R.resolution.graded_betti();
  if (R.resolution.periodic_from) {
    reso["periodic_from"] = *R.resolution.periodic_from;
    reso["periodic_shift"] = R.resolution.periodic_shift;
  }
  j["resolution"] = reso;

  json table = json::array();
  for (const StepData& s : R.sequences.steps) {
    json row;
    row["i"] = s.i;
    row["beta"] = s.beta;
    row["mu"] = s.beta;
    row["dim"] = s.dim == kNegInfinity ? json() : json(s.dim);
    row["e"] = s.e;
    row["reg"] = s.reg == kNegInfinity ? json() : json(s.reg);
    row["reg_normalized"] = s.reg_normalized == kNegInfinity ? json() : json(s.reg_normalized);
    row["mcm"] = mcm_text(s.mcm);
    row["mcm_attempts"] = s.mcm_attempts;
    table.push_back(row);
  }
  j["table"] = table;

  j["fits"] = {{"beta", fit_to_json(R.beta_fit)},
               {"e0", fit_to_json(R.e0_fit)},
               {"e1", fit_to_json(R.e1_fit)}};
  json cx;
  cx["conclusive"] = R.cx.conclusive;
  if (R.cx.conclusive) {
    cx["value"] = R.cx.cx;
    cx["within_codim"] = R.cx.within_codim;
  }
  j["cx"] = cx;

  json ops;
  ops["built"] = R.operators_built;
  ops["identity_steps"] = R.identity_steps;
  json scans = json::array();
  for (const ScanRecord& s : R.scans) {
    json sj;
    sj["n"] = s.n;
    sj["found"] = s.found;
    sj["surjective"] = s.surjective;
    sj["trials_used"] = s.trials_used;
    sj["weight"] = s.weight;
    sj["coeffs"] = s.coeffs;
    if (s.surjective) {
      json k;
      k["mu"] = s.kernel.mu;
      k["e"] = s.kernel.e;
      k["dim"] = s.kernel.dim == kNegInfinity ? json() : json(s.kernel.dim);
      sj["kernel"] = k;
    }
    scans.push_back(sj);
  }
  ops["scans"] = scans;
  j["operators"] = ops;

  j["theorems"] = {{R.e0_report.name, theorem_to_json(R.e0_report)},
                   {R.e1_report.name, theorem_to_json(R.e1_report)},
                   {R.inequality.report.name, theorem_to_json(R.inequality.report)},
                   {R.reg_report.name, theorem_to_json(R.reg_report)},
                   {R.additivity_report.name, theorem_to_json(R.additivity_report)}};
  return j.dump(1) + "\n";
}

std::string operators_json(const CIRing& A, const Resolution& R, const EisenbudOperators& E) {
  const int nv = A.q->nvars();
  json j;
  j["format"] = kCacheFormatVersion;
  j["tool"] = kVersion;
  json f = json::array();
  for (const Polynomial& g : A.f) f.push_back(poly_format(g, *A.q));
  j["f"] = f;
  json steps = json::array();
  for (int i = 2; i <= E.steps(); ++i) {
    json step;
    step["i"] = i;
    step["domain_shifts"] = R.steps[i].pres.ambient.shifts;
    step["codomain_shifts"] = R.steps[i - 2].pres.ambient.shifts;
    json t = json::array();
    for (const MatrixQ& m : E.t[i]) t.push_back(matrix_to_json(m.cols, nv));
    step["t"] = t;
    steps.push_back(step);
  }
  j["steps"] = steps;
  return j.dump(1) + "\n";
}

std::string report_csv(const ExampleSpec& spec, const CIRing& A, const AnalysisResult& R) {
  (void)spec;
  (void)A;
  std::ostringstream os;
  os << "i,beta,e0,e1,reg,mu\n";
  for (const StepData& s : R.sequences.steps) {
    os << s.i << "," << s.beta << ",";
    if (auto e0 = s.e_at(0)) os << *e0;
    os << ",";
    if (auto e1 = s.e_at(1)) os << *e1;
    os << "," << reg_text(s.reg) << "," << s.beta << "\n";
  }
  auto fit_row = [&](const char* label, const QuasiPolyFit& f) {
    os << "fit," << label << ",";
    if (!f.conclusive) {
      os << "inconclusive\n";
      return;
    }
    os << "even," << f.classes[0].poly.text() << ",odd,"
       << (f.classes.size() > 1 ? f.classes[1].poly.text() : "-") << ",degree," << f.degree()
       << ",onset," << f.onset_index << "\n";
  };
  fit_row("beta", R.beta_fit);
  fit_row("e0", R.e0_fit);
  fit_row("e1", R.e1_fit);
  os << "cx,";
  if (R.cx.conclusive)
    os << R.cx.cx << "\n";
  else
    os << "inconclusive\n";
  for (const TheoremReport* t : {&R.e0_report, &R.e1_report, &R.inequality.report, &R.reg_report,
                                 &R.additivity_report})
    os << "verdict," << t->name << "," << verdict_name(t->verdict) << "\n";
  return os.str();
}

}  // namespace syz
