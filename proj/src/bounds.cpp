// Copyright 2026 The drg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "drg/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "drg/catalog.hpp"

namespace drg {

namespace {

std::pair<std::string, std::string> w(const std::string& key, const std::string& value) {
  return {key, value};
}

std::pair<std::string, std::string> w(const std::string& key, int64_t value) {
  return {key, std::to_string(value)};
}

std::pair<std::string, std::string> w(const std::string& key, const Rat& value) {
  return {key, to_string(value)};
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int64_t rat_floor(const Rat& r) {
  int64_t q = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --q;
  return q;
}

bool is_soft_rule(const std::string& rule) { return rule == "SP.mu-exceeds-local"; }

}  // namespace

const RuleVerdict* FeasibilityReport::find(const std::string& rule) const {
  for (const auto& v : rules) {
    if (v.rule == rule) return &v;
  }
  return nullptr;
}

void FeasibilityReport::add(RuleVerdict v) { rules.push_back(std::move(v)); }

void finalize_overall(FeasibilityReport& report) {
  report.overall_pass = true;
  for (const auto& v : report.rules) {
    if (v.failed() && v.assuming.empty() && !is_soft_rule(v.rule)) {
      report.overall_pass = false;
    }
  }
}

Rat theorem2_sum(const Rat& C, int D) {
  if (D < 2) throw PreconditionError("theorem2 sum needs D >= 2");
  Rat s(3);
  Rat p(1);
  for (int j = 1; j <= D - 2; ++j) {
    p *= C;
    s += p;
  }
  return s;
}

RuleVerdict lemma7_dichotomy(const IntersectionArray& arr, int t, const Rat& C) {
  if (t < 1) throw PreconditionError("lemma 7 needs t >= 1");
  const int D = arr.diameter();
  if (D < t + 1) throw PreconditionError("lemma 7 needs D >= t+1");
  if (C < Rat(1, 2)) {
    return make_verdict("L7.dichotomy", RuleStatus::NotApplicable,
                        {w("C", C), w("note", "requires C >= 1/2")});
  }
  const Rat ratio(arr.b_at(t), arr.c_at(t));
  if (ratio > C) {
    return make_verdict("L7.dichotomy", RuleStatus::NotApplicable,
                        {w("b_t/c_t", ratio), w("C", C)});
  }
  const Rat d_cap = Rat(8) * C * C * Rat(t);
  const Rat k_cap = Rat(2) * C;
  const bool pass = Rat(D) <= d_cap || Rat(arr.valency()) <= k_cap;
  return make_verdict("L7.dichotomy", pass ? RuleStatus::Pass : RuleStatus::Fail,
                      {w("t", static_cast<int64_t>(t)), w("C", C), w("b_t/c_t", ratio),
                       w("D", static_cast<int64_t>(D)), w("8C^2t", d_cap),
                       w("k", arr.valency()), w("2C", k_cap)});
}

RuleVerdict claim1_property(const IntersectionArray& arr, int t) {
  if (t < 1) throw PreconditionError("claim 1 needs t >= 1");
  const int D = arr.diameter();
  if (D < 4 * t) {
    return make_verdict("L7.claim1", RuleStatus::NotApplicable,
                        {w("D", static_cast<int64_t>(D)), w("4t", static_cast<int64_t>(4 * t))});
  }
  const Rat C(arr.b_at(t), arr.c_at(t));
  const Rat ratio4(arr.b_at(4 * t), arr.c_at(4 * t));
  const bool pass = Rat(arr.valency()) <= Rat(2) * C || ratio4 <= C / Rat(2);
  return make_verdict("L7.claim1", pass ? RuleStatus::Pass : RuleStatus::Fail,
                      {w("t", static_cast<int64_t>(t)), w("C=b_t/c_t", C),
                       w("b_4t/c_4t", ratio4), w("C/2", C / Rat(2)), w("k", arr.valency()),
                       w("2C", Rat(2) * C)});
}

Lemma9Result lemma9_diameter_cap(const IntersectionArray& arr, int64_t alpha,
                                 bool has_quadrangle) {
  const int D = arr.diameter();
  if (D < 3 || arr.c_at(2) < 2) throw PreconditionError("lemma 9 needs D >= 3 and c_2 >= 2");
  if (alpha < 2) throw PreconditionError("lemma 9 needs alpha >= 2");
  const Rat ratio(arr.b_at(2), arr.c_at(2));
  if (!has_quadrangle || !(ratio < Rat(alpha, 2))) {
    return {make_verdict("L9.diameter", RuleStatus::NotApplicable,
                         {w("b_2/c_2", ratio), w("alpha/2", Rat(alpha, 2)),
                          w("has_quadrangle", has_quadrangle ? "true" : "false")}),
            std::nullopt};
  }
  const int64_t cap = alpha + 1;
  const bool pass = D <= cap;
  return {make_verdict("L9.diameter", pass ? RuleStatus::Pass : RuleStatus::Fail,
                       {w("alpha", alpha), w("D", static_cast<int64_t>(D)), w("cap", cap)}),
          cap};
}

std::vector<RuleVerdict> terwilliger_filter(const IntersectionArray& arr, const Rat& T,
                                            bool asserted, const SpectralOptions& opt) {
  const int D = arr.diameter();
  if (D < 2 || arr.c_at(2) < 2) {
    throw PreconditionError("terwilliger filter needs D >= 2 and c_2 >= 2");
  }
  if (T < Rat(1)) throw PreconditionError("terwilliger filter needs T >= 1");
  const std::string assuming = asserted ? std::string{} : "terwilliger";
  const double theta1 = eigenvalues(quotient_matrix(arr), opt.eig_rel_tol)[1];
  const double k = static_cast<double>(arr.valency());
  const double slack = opt.equality_tol * k;

  std::vector<RuleVerdict> out;
  const Rat threshold = Rat(arr.b_at(1)) / T - Rat(1);
  const bool p5 = theta1 >= threshold.to_double() - slack;
  out.push_back(make_verdict("P5.terwilliger", p5 ? RuleStatus::Pass : RuleStatus::Fail,
                             {w("theta1", fmt_double(theta1)), w("T", T),
                              w("b1/T-1", threshold)},
                             assuming));

  const Rat half_threshold = Rat(arr.b_at(1), 2) - Rat(1);
  if (theta1 > half_threshold.to_double() + slack) {
    const auto& known = prop10_recognition_arrays();
    const bool recognized = std::find(known.begin(), known.end(), arr) != known.end();
    out.push_back(make_verdict("P10.recognition",
                               recognized ? RuleStatus::Pass : RuleStatus::Fail,
                               {w("theta1", fmt_double(theta1)), w("b1/2-1", half_threshold),
                                w("recognized", recognized ? "true" : "false")},
                               assuming));
  } else {
    out.push_back(make_verdict("P10.recognition", RuleStatus::NotApplicable,
                               {w("theta1", fmt_double(theta1)), w("b1/2-1", half_threshold)},
                               assuming));
  }
  return out;
}

HCapResult h_diameter_cap(const IntersectionArray& arr) {
  const int D = arr.diameter();
  int h = 0;
  for (int i = 1; i <= D - 1; ++i) {
    if (arr.c_at(i) == arr.c_at(1) && arr.a_at(i) == arr.a_at(1) && arr.b_at(i) == arr.b_at(1)) {
      ++h;
    }
  }
  if (h != 1) {
    return {make_verdict("H.4^k", RuleStatus::NotApplicable, {w("h", static_cast<int64_t>(h))}),
            std::nullopt};
  }
  const int64_t k = arr.valency();
  std::optional<int64_t> cap;
  bool pass = true;
  if (k <= 31) {
    cap = checked_pow(4, k);
    pass = D <= *cap;
  }
  std::vector<std::pair<std::string, std::string>> witness = {
      w("h", static_cast<int64_t>(1)), w("D", static_cast<int64_t>(D))};
  witness.push_back(cap ? w("4^k", *cap) : w("4^k", "> 2^62"));
  return {make_verdict("H.4^k", pass ? RuleStatus::Pass : RuleStatus::Fail, std::move(witness)),
          cap};
}

namespace {

// Line-graph subcase: the array must be the flag family {2s, s, ..., s;
// 1, ..., 1} (c_D left unconstrained), with either s = 1 (ordinary polygon)
// or 2d in {6, 8} and s <= C.
RuleVerdict flag_recognition(const IntersectionArray& arr, const Rat& C) {
  const int D = arr.diameter();
  const int64_t s = arr.a_at(1) + 1;
  bool shape = arr.b_at(0) == 2 * s;
  for (int i = 1; i <= D - 1 && shape; ++i) shape = arr.b_at(i) == s;
  for (int i = 1; i <= D - 1 && shape; ++i) shape = arr.c_at(i) == 1;
  const bool pass = shape && (s == 1 || ((D == 6 || D == 8) && Rat(s) <= C));
  return make_verdict("T2.flag-recognition", pass ? RuleStatus::Pass : RuleStatus::Fail,
                      {w("s", s), w("D", static_cast<int64_t>(D)),
                       w("shape", shape ? "true" : "false"), w("C", C)});
}

}  // namespace

FeasibilityReport theorem2_pipeline(const IntersectionArray& arr, const Rat& C,
                                    const SpectralOptions& opt) {
  FeasibilityReport rep;
  rep.array = arr;
  const int D = arr.diameter();
  const int64_t k = arr.valency();

  rep.caps.diameter_cap = Rat(16) * C * C;
  rep.caps.valency_cap = Rat(2) * C;

  const DeriveOutcome der = derive_checked(arr);
  const Rat ratio_b2c2 = D >= 2 ? Rat(arr.b_at(2), arr.c_at(2)) : Rat(0);
  Rat S(3);
  if (D >= 2) S = theorem2_sum(C, D);

  // The vertex cap holds whenever b2/c2 <= C and D >= 3.
  if (der.ok() && D >= 3 && ratio_b2c2 <= C) {
    const Rat v_cap = S * Rat(der.params->k_seq[2]);
    rep.caps.v_cap = v_cap;
    rep.add(make_verdict("T2.v-cap", Rat(der.params->v) <= v_cap ? RuleStatus::Pass
                                                                 : RuleStatus::Fail,
                         {w("v", der.params->v), w("cap", v_cap), w("S", S),
                          w("k2", der.params->k_seq[2])}));
  } else {
    rep.add(make_verdict("T2.v-cap", RuleStatus::NotApplicable));
  }

  const bool in_scope = D >= 6 && der.ok() && ratio_b2c2 <= C;
  if (!in_scope) {
    rep.add(make_verdict("T2.pipeline", RuleStatus::NotApplicable,
                         {w("k", k), w("D", static_cast<int64_t>(D)),
                          w("note", "scope is k >= 3, D >= 6, b2/c2 <= C")}));
    finalize_overall(rep);
    return rep;
  }

  // Step 1: the dichotomy at t = 2.
  rep.add(lemma7_dichotomy(arr, 2, C));
  const bool valency_branch = Rat(k) <= Rat(2) * C;
  if (!valency_branch && k < 3) {
    rep.add(make_verdict("T2.pipeline", RuleStatus::NotApplicable,
                         {w("k", k), w("note", "scope is k >= 3")}));
    finalize_overall(rep);
    return rep;
  }

  const SpectrumOutcome so = spectrum_checked(arr, opt);
  const int64_t m1 = so.ok() ? so.spectrum->m[1] : -1;

  bool pipeline_fail = rep.find("L7.dichotomy")->failed();
  bool m1_cap_fired = false;
  Rat m1_cap_value(0);

  if (arr.c_at(2) == 1) {
    const OrderOutcome oo = order_params(arr);
    if (oo.status == OrderOutcome::Status::Inconsistent) {
      rep.add(make_verdict("T2.order", RuleStatus::Fail,
                           {w("a1+1", arr.a_at(1) + 1), w("b1", arr.b_at(1)),
                            w("note", "b1 not divisible by a1+1")}));
      pipeline_fail = true;
    } else if (oo.params->line_graph) {
      RuleVerdict fr = flag_recognition(arr, C);
      pipeline_fail = pipeline_fail || fr.failed();
      rep.add(std::move(fr));
    } else {
      const bool a1_ok = Rat(arr.a_at(1)) <= Rat(k, 3) - Rat(1);
      rep.add(make_verdict("T2.a1-cap", a1_ok ? RuleStatus::Pass : RuleStatus::Fail,
                           {w("a1", arr.a_at(1)), w("k/3-1", Rat(k, 3) - Rat(1))}));
      pipeline_fail = pipeline_fail || !a1_ok;
      // The m1 derivation needs theta1 > k/2, which rests on k > 2C.
      if (k > 12 && !valency_branch) {
        m1_cap_fired = true;
        m1_cap_value = Rat(576) * S;
        if (so.ok()) {
          const bool m1_ok = Rat(m1) <= m1_cap_value;
          rep.add(make_verdict("T2.m1-cap", m1_ok ? RuleStatus::Pass : RuleStatus::Fail,
                               {w("m1", m1), w("cap", m1_cap_value)}));
          pipeline_fail = pipeline_fail || !m1_ok;
        } else {
          rep.add(make_verdict("T2.m1-cap", RuleStatus::NotApplicable,
                               {w("note", "spectrum unavailable")}));
        }
      } else {
        rep.add(make_verdict("T2.m1-cap", RuleStatus::NotApplicable,
                             {w("note", k <= 12 ? "small-valency case k <= 12"
                                                : "valency branch k <= 2C")}));
      }
    }
  } else {
    // c2 >= 2: Terwilliger branch vs quadrangle branch; neither is decidable
    // from the array alone, so verdicts are conditional unless one branch is
    // refuted outright.
    const int64_t a2c2 = arr.a_at(2) + arr.c_at(2);
    int64_t T_sel = 0;
    for (int64_t T = rat_floor(C + Rat(1)); T >= 1; --T) {
      if (Rat(a2c2) >= Rat(arr.b_at(1), T) - Rat(1)) {
        T_sel = T;
        break;
      }
    }
    bool terw_refuted = false;
    if (T_sel >= 1) {
      auto tv = terwilliger_filter(arr, Rat(T_sel), /*asserted=*/false, opt);
      for (auto& v : tv) {
        if (v.rule == "P10.recognition" && v.failed()) terw_refuted = true;
        rep.add(std::move(v));
      }
    }

    const std::string qassume = terw_refuted ? std::string{} : "quadrangle";
    const bool a1_ok = Rat(arr.a_at(1) + 2) <= Rat(k + arr.c_at(D), 6);
    rep.add(make_verdict("T2.a1-cap", a1_ok ? RuleStatus::Pass : RuleStatus::Fail,
                         {w("a1+2", arr.a_at(1) + 2), w("(k+cD)/6", Rat(k + arr.c_at(D), 6))},
                         qassume));
    bool quad_fail = !a1_ok;

    if (Rat(arr.b_at(2)) <= Rat(k, 2)) {
      if (k > 24) {
        const Rat cap = Rat(576) * S;
        if (so.ok()) {
          const bool m1_ok = Rat(m1) <= cap;
          rep.add(make_verdict("T2.m1-cap", m1_ok ? RuleStatus::Pass : RuleStatus::Fail,
                               {w("m1", m1), w("cap", cap), w("subcase", "b2 <= k/2")},
                               qassume));
          quad_fail = quad_fail || !m1_ok;
        } else {
          rep.add(make_verdict("T2.m1-cap", RuleStatus::NotApplicable,
                               {w("note", "spectrum unavailable")}, qassume));
        }
        if (terw_refuted) {
          m1_cap_fired = true;
          m1_cap_value = cap;
        }
      } else {
        rep.add(make_verdict("T2.m1-cap", RuleStatus::NotApplicable,
                             {w("note", "small-valency case k <= 24")}, qassume));
      }
    } else {
      const Rat cap = (C + Rat(1)) * S;
      if (so.ok()) {
        const bool m1_ok = Rat(m1) < cap;
        rep.add(make_verdict("T2.m1-cap", m1_ok ? RuleStatus::Pass : RuleStatus::Fail,
                             {w("m1", m1), w("cap", cap), w("subcase", "b2 > k/2")}, qassume));
        quad_fail = quad_fail || !m1_ok;
      } else {
        rep.add(make_verdict("T2.m1-cap", RuleStatus::NotApplicable,
                             {w("note", "spectrum unavailable")}, qassume));
      }
      const bool k2_ok = der.ok() && Rat(der.params->k_seq[2]) < Rat(2) * C * Rat(k);
      rep.add(make_verdict("T2.k2-cap", k2_ok ? RuleStatus::Pass : RuleStatus::Fail,
                           {w("k2", der.ok() ? der.params->k_seq[2] : -1),
                            w("2Ck", Rat(2) * C * Rat(k))},
                           qassume));
      quad_fail = quad_fail || !k2_ok;
      if (terw_refuted) {
        m1_cap_fired = true;
        m1_cap_value = cap;
      }
    }

    // A graph realizing the array is Terwilliger or contains a quadrangle;
    // if both branches are refuted the array is infeasible in this scope.
    if (terw_refuted && quad_fail) pipeline_fail = true;
  }

  if (m1_cap_fired) {
    rep.caps.m1_cap = m1_cap_value;
    if (so.ok() && m1 >= 2) {
      const Rat abs_cap = Rat((m1 + 2) * (m1 - 1), 2);
      const bool abs_ok = Rat(k) <= abs_cap;
      rep.add(make_verdict("ABS.valency", abs_ok ? RuleStatus::Pass : RuleStatus::Fail,
                           {w("k", k), w("m1", m1), w("(m1+2)(m1-1)/2", abs_cap)}));
      pipeline_fail = pipeline_fail || !abs_ok;
    } else {
      rep.add(make_verdict("ABS.valency", RuleStatus::NotApplicable,
                           {w("note", so.ok() ? "m1 < 2" : "spectrum unavailable")}));
    }
  }

  std::vector<std::pair<std::string, std::string>> pipeline_witness = {
      w("C", C), w("D", static_cast<int64_t>(D)), w("k", k)};
  if (valency_branch) pipeline_witness.push_back(w("branch", "valency"));
  rep.add(make_verdict("T2.pipeline", pipeline_fail ? RuleStatus::Fail : RuleStatus::Pass,
                       std::move(pipeline_witness)));
  finalize_overall(rep);
  return rep;
}

namespace {

Rat rat_ceil_of(const Rat& r) {
  int64_t q = r.num / r.den;
  if (r.num % r.den != 0 && r.num > 0) ++q;
  return Rat(q);
}

}  // namespace

FeasibilityReport analyze(const IntersectionArray& arr, const AnalyzeOptions& opt) {
  FeasibilityReport rep;
  rep.array = arr;
  const int D = arr.diameter();

  for (auto& v : basic_feasibility(arr)) rep.add(std::move(v));

  const DeriveOutcome der = derive_checked(arr);
  if (!der.ok()) {
    const char* rule = der.issue->kind == DeriveIssueKind::NegativeA ? "DERIVE.a-nonnegative"
                       : der.issue->kind == DeriveIssueKind::NonIntegralK
                           ? "DERIVE.k-integral"
                           : "DERIVE.overflow";
    rep.add(make_verdict(rule, RuleStatus::Fail,
                         {w("index", static_cast<int64_t>(der.issue->index)),
                          w("detail", der.issue->message)}));
    finalize_overall(rep);
    return rep;
  }
  rep.add(make_verdict("DERIVE.a-nonnegative", RuleStatus::Pass));
  rep.add(make_verdict("DERIVE.k-integral", RuleStatus::Pass));

  SpectrumOutcome so = opt.run_spectral ? spectrum_checked(arr, opt.spectral)
                                        : SpectrumOutcome{};
  if (opt.run_spectral) {
    auto status = [&](SpectrumIssueKind kind) {
      if (so.ok()) return RuleStatus::Pass;
      return so.issue->kind == kind ? RuleStatus::Fail : RuleStatus::NotApplicable;
    };
    rep.add(make_verdict("SP.multiplicity-integral",
                         status(SpectrumIssueKind::NonIntegralMultiplicity),
                         so.ok() ? std::vector<std::pair<std::string, std::string>>{}
                                 : std::vector<std::pair<std::string, std::string>>{
                                       w("detail", so.issue->message)}));
    rep.add(make_verdict("SP.multiplicity-positive",
                         status(SpectrumIssueKind::NonPositiveMultiplicity)));
    rep.add(make_verdict("SP.multiplicity-sum",
                         status(SpectrumIssueKind::MultiplicitySumMismatch)));
    if (so.spectrum.has_value() && so.spectrum->mu.size() == static_cast<size_t>(D) + 1) {
      RuleVerdict mu = make_verdict("SP.mu-exceeds-local", RuleStatus::Pass);
      for (int i = 1; i <= D - 1; ++i) {
        const double lhs = so.spectrum->mu[static_cast<size_t>(i)];
        const double rhs = static_cast<double>(arr.a_at(i) + arr.c_at(i));
        if (!(lhs > rhs)) {
          mu.status = RuleStatus::Fail;
          mu.witness = {w("i", static_cast<int64_t>(i)), w("mu_i", fmt_double(lhs)),
                        w("a_i+c_i", static_cast<int64_t>(rhs))};
          break;
        }
      }
      rep.add(std::move(mu));
    }
  }

  const Rat C = opt.C.value_or(
      D >= 2 ? std::max(Rat(1), rat_ceil_of(Rat(arr.b_at(2), arr.c_at(2)))) : Rat(1));

  if (D >= opt.lemma7_t + 1) rep.add(lemma7_dichotomy(arr, opt.lemma7_t, C));
  for (int t = 1; 4 * t <= D; ++t) rep.add(claim1_property(arr, t));

  if (D >= 3 && arr.c_at(2) >= 2) {
    if (opt.has_quadrangle.value_or(true)) {
      const Rat r2(arr.b_at(2), arr.c_at(2));
      const int64_t alpha = opt.alpha.value_or(std::max<int64_t>(2, rat_floor(Rat(2) * r2) + 1));
      Lemma9Result l9 = lemma9_diameter_cap(arr, alpha, true);
      if (!opt.has_quadrangle.has_value()) l9.verdict.assuming = "quadrangle";
      if (l9.diameter_cap && opt.has_quadrangle.value_or(false)) {
        const Rat cap(*l9.diameter_cap);
        if (!rep.caps.diameter_cap || cap < *rep.caps.diameter_cap) rep.caps.diameter_cap = cap;
      }
      rep.add(std::move(l9.verdict));
    } else {
      rep.add(make_verdict("L9.diameter", RuleStatus::NotApplicable,
                           {w("has_quadrangle", "false")}));
    }
  }

  {
    HCapResult hc = h_diameter_cap(arr);
    rep.add(std::move(hc.verdict));
  }

  if (opt.is_terwilliger.value_or(false) && D >= 2 && arr.c_at(2) >= 2) {
    for (auto& v : terwilliger_filter(arr, Rat(2), /*asserted=*/true, opt.spectral)) {
      rep.add(std::move(v));
    }
  }

  if (opt.run_theorem2 && D >= 2) {
    FeasibilityReport t2 = theorem2_pipeline(arr, C, opt.spectral);
    for (auto& v : t2.rules) {
      // The standalone dichotomy above already covers t = 2 at the same C.
      if (v.rule == "L7.dichotomy" && opt.lemma7_t == 2) continue;
      rep.add(std::move(v));
    }
    if (t2.caps.diameter_cap &&
        (!rep.caps.diameter_cap || *t2.caps.diameter_cap < *rep.caps.diameter_cap)) {
      rep.caps.diameter_cap = t2.caps.diameter_cap;
    }
    rep.caps.valency_cap = t2.caps.valency_cap;
    rep.caps.m1_cap = t2.caps.m1_cap;
    rep.caps.v_cap = t2.caps.v_cap;
  }

  finalize_overall(rep);
  return rep;
}

}  // namespace drg
