#include "syzkit/asymptotics.hpp"

#include <algorithm>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

int RatPoly::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != Rat(0)) return k;
  return -1;
}

Rat RatPoly::leading() const {
  int d = degree();
  return d < 0 ? Rat(0) : coeffs[d];
}

Rat RatPoly::coeff_at(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : Rat(0);
}

Rat RatPoly::eval(long long m) const {
  Rat v(0);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) v = v * Rat(m) + coeffs[k];
  return v;
}

std::string RatPoly::text(const std::string& var) const {
  if (degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff_at(k);
    if (c == Rat(0)) continue;
    if (!first) os << (c > Rat(0) ? " + " : " - ");
    else if (c < Rat(0)) os << "-";
    Rat a = c > Rat(0) ? c : -c;
    bool unit = a == Rat(1);
    if (!unit || k == 0) {
      os << a.numerator();
      if (a.denominator() != 1) os << "/" << a.denominator();
    }
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

int QuasiPolyFit::degree() const {
  int d = -1;
  for (const ClassFit& c : classes) d = std::max(d, c.poly.degree());
  return d;
}

Rat QuasiPolyFit::leading_at(int j, int deg) const { return classes.at(j).poly.coeff_at(deg); }

namespace {

// Newton forward interpolation on values g(m0), g(m0+1), ..., degree <= D.
RatPoly newton_interpolate(const std::vector<long long>& values, long long m0, int max_degree) {
  // Forward differences at the base point.
  std::vector<Rat> delta;
  std::vector<long long> row = values;
  for (int k = 0; k <= max_degree && !row.empty(); ++k) {
    delta.push_back(Rat(row.front()));
    std::vector<long long> next;
    for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
    row = std::move(next);
  }
  // P(x) = sum_k delta_k * binom(x - m0, k).
  RatPoly acc;
  RatPoly binom;  // starts as 1
  binom.coeffs = {Rat(1)};
  for (size_t k = 0; k < delta.size(); ++k) {
    if (k > 0) {
      // binom *= (x - m0 - (k-1)) / k
      RatPoly next;
      next.coeffs.assign(binom.coeffs.size() + 1, Rat(0));
      Rat shift(-(m0 + static_cast<long long>(k) - 1));
      for (size_t t = 0; t < binom.coeffs.size(); ++t) {
        next.coeffs[t + 1] += binom.coeffs[t];
        next.coeffs[t] += binom.coeffs[t] * shift;
      }
      for (Rat& c : next.coeffs) c /= Rat(static_cast<long long>(k));
      binom = std::move(next);
    }
    if (delta[k] == Rat(0)) continue;
    if (acc.coeffs.size() < binom.coeffs.size()) acc.coeffs.resize(binom.coeffs.size(), Rat(0));
    for (size_t t = 0; t < binom.coeffs.size(); ++t) acc.coeffs[t] += binom.coeffs[t] * delta[k];
  }
  return acc;
}

ClassFit fit_class(const std::vector<long long>& values, long long m_first) {
  ClassFit out;
  const int n = static_cast<int>(values.size());
  if (n < 3) return out;

  std::vector<long long> row = values;
  for (int d = 0; d <= n - 3; ++d) {
    // Trailing constant run of the d-th difference row.
    const int len = static_cast<int>(row.size());
    int run = 1;
    while (run < len && row[len - 1 - run] == row[len - 1]) ++run;
    if (run >= 3) {
      int a = len - run;  // class-local onset
      std::vector<long long> window(values.begin() + a, values.end());
      out.conclusive = true;
      out.onset_m = m_first + a;
      out.poly = newton_interpolate(window, out.onset_m, d);
      // Soundness: the fit must reproduce the window exactly.
      for (size_t t = 0; t < window.size(); ++t) {
        Rat v = out.poly.eval(out.onset_m + static_cast<long long>(t));
        if (v.denominator() != 1 || v.numerator() != window[t])
          throw InternalError("quasi-polynomial fit fails to reproduce its own window");
      }
      return out;
    }
    std::vector<long long> next;
    for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
    row = std::move(next);
  }
  return out;
}

}  // namespace

QuasiPolyFit fit_quasi_polynomial(const std::vector<long long>& seq, int start_index, int period) {
  if (period < 1) throw UsageError("quasi-polynomial period must be positive");
  QuasiPolyFit out;
  out.period = period;
  out.start_index = start_index;
  out.classes.resize(period);

  bool all = true;
  int onset = start_index;
  for (int j = 0; j < period; ++j) {
    // Ambient indices congruent to j mod period, from start_index on.
    std::vector<long long> values;
    long long m_first = -1;
    for (int i = start_index; i < start_index + static_cast<int>(seq.size()); ++i) {
      if (i % period != j) continue;
      if (m_first < 0) m_first = i / period;
      values.push_back(seq[i - start_index]);
    }
    out.classes[j] = fit_class(values, m_first);
    if (!out.classes[j].conclusive) {
      all = false;
      continue;
    }
    onset = std::max<long long>(onset, out.classes[j].onset_m * period + j);
  }
  out.conclusive = all;
  out.onset_index = onset;
  return out;
}

CxEstimate complexity_estimate(const QuasiPolyFit& betti_fit, int codim) {
  CxEstimate out;
  if (!betti_fit.conclusive) return out;
  out.conclusive = true;
  out.cx = betti_fit.degree() + 1;
  out.within_codim = out.cx <= codim;
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
    default: return "inconclusive";
  }
}

std::vector<long long> SequenceData::beta_sequence() const {
  std::vector<long long> out;
  for (const StepData& s : steps) out.push_back(s.beta);
  return out;
}

std::pair<int, std::vector<long long>> SequenceData::e_sequence(int t) const {
  int start = 0;
  for (int i = static_cast<int>(steps.size()) - 1; i >= 0; --i) {
    if (!steps[i].e_at(t)) {
      start = i + 1;
      break;
    }
  }
  std::vector<long long> vals;
  for (size_t i = start; i < steps.size(); ++i) vals.push_back(*steps[i].e_at(t));
  return {start, std::move(vals)};
}

namespace {

std::string num(long long v) { return std::to_string(v); }

std::string rat_text(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string mcm_name(McmStatus s) {
  switch (s) {
    case McmStatus::Verified: return "verified";
    case McmStatus::NotVerified: return "not-verified";
    default: return "dimension-mismatch";
  }
}

void hypothesis_facts(TheoremReport& r, const CIRing& A, const SequenceData& S,
                      const CxEstimate& cx) {
  r.fact("codim", num(A.codim()));
  r.fact("dim", num(A.dim()));
  r.fact("cx", cx.conclusive ? num(cx.cx) : "inconclusive");
  if (!S.steps.empty()) r.fact("mcm_m0", mcm_name(S.steps[0].mcm));
}

void fit_facts(TheoremReport& r, const std::string& label, const QuasiPolyFit& fit) {
  if (!fit.conclusive) {
    r.fact(label + "_fit", "inconclusive");
    return;
  }
  r.fact(label + "_even", fit.classes[0].poly.text());
  r.fact(label + "_odd", fit.classes.size() > 1 ? fit.classes[1].poly.text() : "-");
  r.fact(label + "_degree", num(fit.degree()));
  r.fact(label + "_onset", num(fit.onset_index));
}

}  // namespace

SequenceData collect_sequences(const CIRing& A, const Resolution& R, int mcm_retries,
                               uint64_t seed) {
  SequenceData S;
  for (int i = 0; i <= R.computed_steps(); ++i) {
    const Presentation& P = R.module_at(i);
    StepData d;
    d.i = i;
    d.beta = P.rank();
    if (P.rank() > 0) {
      HilbertData H = hilbert_series(A, P, R.over);
      d.dim = H.dim;
      d.e = H.e;
      d.reg = regularity(A, P);
      int min_shift = *std::min_element(P.ambient.shifts.begin(), P.ambient.shifts.end());
      d.reg_normalized = d.reg - min_shift;
      McmResult mc = mcm_check(A, P, mcm_retries, seed + static_cast<uint64_t>(i) * 1315423911u);
      d.mcm = mc.status;
      d.mcm_attempts = mc.attempts;
    }
    S.steps.push_back(std::move(d));
  }
  return S;
}

KernelDatum kernel_datum(const CIRing& A, const OperatorMap& m) {
  KernelDatum k;
  k.n = m.n;
  k.surjective = m.surjective;
  if (!m.surjective || !m.kernel) return k;
  const Presentation& K = *m.kernel;
  k.mu = K.rank();
  if (K.rank() > 0) {
    HilbertData H = hilbert_series(A, K);
    k.e = H.e;
    k.dim = H.dim;
  }
  return k;
}

TheoremReport check_e0_theorem(const CIRing& A, const SequenceData& S, const QuasiPolyFit& e0_fit,
                               const CxEstimate& cx) {
  TheoremReport r;
  r.name = "e0_quasi_polynomial";
  hypothesis_facts(r, A, S, cx);
  fit_facts(r, "e0", e0_fit);
  if (!e0_fit.conclusive || !cx.conclusive) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  bool consequence = e0_fit.degree() == cx.cx - 1;
  r.fact("degree_matches_cx_minus_1", consequence ? "true" : "false");
  bool hyp = !S.steps.empty() && S.steps[0].mcm == McmStatus::Verified;
  if (!hyp) {
    r.verdict = Verdict::NotApplicable;
    r.notes.push_back("module is not verified maximal Cohen-Macaulay; fit reported only");
    return r;
  }
  r.verdict = consequence ? Verdict::Holds : Verdict::Fails;
  return r;
}

TheoremReport check_e1_theorem(const CIRing& A, const SequenceData& S, const QuasiPolyFit& e1_fit,
                               const CxEstimate& cx) {
  TheoremReport r;
  r.name = "e1_quasi_polynomial";
  hypothesis_facts(r, A, S, cx);
  fit_facts(r, "e1", e1_fit);
  if (!e1_fit.conclusive || !cx.conclusive) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  bool consequence = e1_fit.degree() == cx.cx - 1;
  r.fact("degree_matches_cx_minus_1", consequence ? "true" : "false");
  bool hyp = !S.steps.empty() && S.steps[0].mcm == McmStatus::Verified && A.codim() >= 2 &&
             A.dim() >= 1;
  if (!hyp) {
    r.verdict = Verdict::NotApplicable;
    r.notes.push_back("needs codim >= 2, dim >= 1 and a maximal Cohen-Macaulay module");
    return r;
  }
  r.verdict = consequence ? Verdict::Holds : Verdict::Fails;
  return r;
}

InequalityOutcome check_inequality(const CIRing& A, const SequenceData& S,
                                   const QuasiPolyFit& e0_fit, const QuasiPolyFit& e1_fit,
                                   const QuasiPolyFit& mu_fit, const CxEstimate& cx) {
  InequalityOutcome out;
  TheoremReport& r = out.report;
  r.name = "leading_coefficient_inequality";
  hypothesis_facts(r, A, S, cx);

  // Pointwise part: e1 >= e0 - mu on every verified maximal Cohen-Macaulay
  // step of positive dimension.
  bool pointwise = true;
  int checked = 0;
  for (const StepData& s : S.steps) {
    if (s.mcm != McmStatus::Verified || s.is_zero_module()) continue;
    auto e0 = s.e_at(0), e1 = s.e_at(1);
    if (!e0 || !e1) continue;
    ++checked;
    if (*e1 < *e0 - s.beta) {
      pointwise = false;
      r.notes.push_back("pointwise failure at step " + num(s.i) + ": e1 = " + num(*e1) +
                        ", e0 - mu = " + num(*e0 - s.beta));
    }
  }
  r.fact("pointwise_steps_checked", num(checked));
  r.fact("pointwise", pointwise ? "true" : "false");

  if (!e0_fit.conclusive || !e1_fit.conclusive || !mu_fit.conclusive || !cx.conclusive) {
    r.verdict = pointwise ? Verdict::Inconclusive : Verdict::Fails;
    return out;
  }
  if (e0_fit.period != 2 || e1_fit.period != 2 || mu_fit.period != 2) {
    r.verdict = pointwise ? Verdict::Inconclusive : Verdict::Fails;
    r.notes.push_back("leading-coefficient comparison is defined for period 2 only");
    return out;
  }

  const int d = cx.cx - 1;
  bool leading = true;
  for (int j = 0; j < 2; ++j) {
    Rat a = e1_fit.leading_at(j, d);
    Rat alpha = e0_fit.leading_at(j, d);
    Rat gamma = mu_fit.leading_at(j, d);
    bool ge = a >= alpha - gamma;
    bool eq = a == alpha - gamma;
    leading = leading && ge;
    const char* cls = j == 0 ? "even" : "odd";
    r.fact(std::string("leading_") + cls,
           rat_text(a) + " >= " + rat_text(alpha) + " - " + rat_text(gamma) +
               (ge ? (eq ? " (equality)" : " (strict)") : " VIOLATED"));
    if (j == 0) out.equality_even = eq;
    else out.equality_odd = eq;
  }
  r.fact("equality_even", out.equality_even ? "true" : "false");
  r.fact("equality_odd", out.equality_odd ? "true" : "false");
  r.verdict = (pointwise && leading) ? Verdict::Holds : Verdict::Fails;
  return out;
}

TheoremReport check_reg_bounded(const CIRing& A, const SequenceData& S, const CxEstimate& cx,
                                bool equality_both_parities) {
  TheoremReport r;
  r.name = "regularity_bounded";
  hypothesis_facts(r, A, S, cx);
  r.fact("equality_case", equality_both_parities ? "true" : "false");

  std::ostringstream raw, norm;
  std::vector<int> reg_raw, reg_norm;
  std::vector<int> idx;
  for (const StepData& s : S.steps) {
    if (s.is_zero_module()) continue;
    idx.push_back(s.i);
    reg_raw.push_back(s.reg);
    reg_norm.push_back(s.reg_normalized);
    raw << (reg_raw.size() > 1 ? "," : "") << s.reg;
    norm << (reg_norm.size() > 1 ? "," : "") << s.reg_normalized;
  }
  r.fact("reg_sequence", raw.str());
  r.fact("reg_normalized_sequence", norm.str());

  if (reg_raw.size() <= 1) {
    r.verdict = Verdict::Holds;
    r.notes.push_back("resolution terminates; regularity window trivially bounded");
    return r;
  }
  if (!cx.conclusive) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }

  if (cx.cx <= 1) {
    // Periodic tails: differences reg(i+2) - reg(i) must become constant.
    std::vector<int> diffs;
    for (size_t t = 0; t + 2 < reg_raw.size(); ++t) diffs.push_back(reg_raw[t + 2] - reg_raw[t]);
    int run = 1;
    const int len = static_cast<int>(diffs.size());
    while (run < len && diffs[len - 1 - run] == diffs[len - 1]) ++run;
    bool ok = len >= 3 && run >= 3;
    r.fact("reg_step_difference", len ? num(diffs.back()) : "-");
    r.fact("reg_difference_run", num(run));
    r.verdict = ok ? Verdict::Holds : Verdict::Inconclusive;
    return r;
  }

  if (cx.cx == 2 && equality_both_parities) {
    // Window rendering of boundedness: the running max of the normalized
    // regularity must not grow over the second half of the window.
    const int n = static_cast<int>(reg_norm.size());
    int first_max = reg_norm[0], all_max = reg_norm[0];
    for (int t = 0; t < n; ++t) {
      if (t <= n / 2) first_max = std::max(first_max, reg_norm[t]);
      all_max = std::max(all_max, reg_norm[t]);
    }
    bool ok = all_max <= first_max;
    r.fact("first_half_max", num(first_max));
    r.fact("window_max", num(all_max));
    // Eventual 2-periodicity of the normalized values, when present.
    bool periodic = n >= 4;
    for (int t = n - 4; periodic && t + 2 < n; ++t)
      periodic = reg_norm[t] == reg_norm[t + 2];
    if (periodic) r.notes.push_back("normalized regularity is 2-periodic at the window tail");
    r.verdict = ok ? Verdict::Holds : Verdict::Fails;
    return r;
  }

  r.verdict = Verdict::NotApplicable;
  r.notes.push_back("bounded-regularity conclusion needs cx = 2 and the equality case");
  return r;
}

TheoremReport check_additivity(const CIRing& A, const SequenceData& S,
                               const std::vector<KernelDatum>& kernels) {
  TheoremReport r;
  r.name = "kernel_additivity";
  r.fact("codim", num(A.codim()));
  int checked = 0;
  bool ok = true;
  for (const KernelDatum& k : kernels) {
    if (!k.surjective) continue;
    if (k.n + 2 >= static_cast<int>(S.steps.size())) continue;
    const StepData& lo = S.steps[k.n];
    const StepData& hi = S.steps[k.n + 2];
    if (lo.dim != hi.dim) {
      // Length additivity on short exact sequences needs equal dimensions;
      // steps below the Cohen-Macaulay range are reported but not asserted.
      r.notes.push_back("step n = " + num(k.n) + " skipped: dimension drop across the sequence");
      continue;
    }
    ++checked;
    auto expect = [&](int t) -> std::optional<long long> {
      auto a = hi.e_at(t), b = lo.e_at(t);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    };
    long long ke0 = k.mu == 0 ? 0 : (k.e.size() > 0 ? k.e[0] : 0);
    long long ke1 = k.mu == 0 ? 0 : (k.e.size() > 1 ? k.e[1] : 0);
    auto d0 = expect(0), d1 = expect(1);
    bool here = d0 && *d0 == ke0 && d1 && *d1 == ke1 && (hi.beta - lo.beta) == k.mu;
    if (!here) {
      ok = false;
      r.notes.push_back("additivity failure at n = " + num(k.n));
    }
    r.fact("n=" + num(k.n),
           "e0: " + num(d0.value_or(-1)) + " = " + num(ke0) + "; e1: " + num(d1.value_or(-1)) +
               " = " + num(ke1) + "; mu: " + num(hi.beta - lo.beta) + " = " + num(k.mu));
  }
  r.fact("steps_checked", num(checked));
  if (checked == 0) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("no surjective operator map found in the window");
    return r;
  }
  r.verdict = ok ? Verdict::Holds : Verdict::Fails;
  return r;
}

}  // namespace syz
