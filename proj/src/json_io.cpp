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

#include "drg/json_io.hpp"

#include <cstdio>

namespace drg {

std::string decimal_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ojson render_derived(const DerivedParameters& dp) {
  ojson j;
  j["a"] = dp.a;
  j["k_seq"] = dp.k_seq;
  j["v"] = dp.v;
  j["h"] = dp.h;
  j["k"] = dp.k;
  return j;
}

ojson render_spectrum(const IntersectionArray& arr, const Spectrum& sp, bool include_sequences) {
  ojson j;
  j["array"] = format_array(arr);
  ojson eigs = ojson::array();
  for (size_t i = 0; i < sp.theta.size(); ++i) {
    eigs.push_back(decimal_string(sp.theta[i]));
  }
  j["eigenvalues"] = std::move(eigs);
  j["multiplicities"] = sp.m;
  ojson mu = ojson::array();
  for (double m : sp.mu) mu.push_back(decimal_string(m));
  j["mu"] = std::move(mu);
  ojson ann = ojson::array();
  for (bool b : sp.integer_theta) ann.push_back(b);
  j["integer_eigenvalue"] = std::move(ann);
  if (include_sequences) {
    ojson seqs = ojson::array();
    for (const auto& s : sp.sequences) {
      ojson u = ojson::array();
      for (double x : s.u) u.push_back(decimal_string(x));
      seqs.push_back(std::move(u));
    }
    j["standard_sequences"] = std::move(seqs);
  }
  return j;
}

ojson render_verdict(const RuleVerdict& v) {
  ojson j;
  j["rule"] = v.rule;
  j["status"] = to_string(v.status);
  if (!v.witness.empty()) {
    ojson wit;
    for (const auto& [key, value] : v.witness) wit[key] = value;
    j["witness"] = std::move(wit);
  }
  if (!v.assuming.empty()) j["assuming"] = v.assuming;
  return j;
}

ojson render_report(const FeasibilityReport& rep) {
  ojson j;
  j["array"] = format_array(rep.array);
  ojson rules = ojson::array();
  for (const auto& v : rep.rules) rules.push_back(render_verdict(v));
  j["rules"] = std::move(rules);
  ojson caps;
  caps["diameter"] = rep.caps.diameter_cap ? ojson(to_string(*rep.caps.diameter_cap)) : ojson();
  caps["valency"] = rep.caps.valency_cap ? ojson(to_string(*rep.caps.valency_cap)) : ojson();
  caps["m1"] = rep.caps.m1_cap ? ojson(to_string(*rep.caps.m1_cap)) : ojson();
  caps["v"] = rep.caps.v_cap ? ojson(to_string(*rep.caps.v_cap)) : ojson();
  j["caps"] = std::move(caps);
  j["overall"] = rep.overall_pass ? "pass" : "fail";
  return j;
}

ojson render_certification(const Certification& cert) {
  ojson j;
  j["is_drg"] = cert.is_drg;
  if (cert.array) j["array"] = format_array(*cert.array);
  if (cert.witness) {
    ojson w;
    w["x"] = cert.witness->x;
    w["y"] = cert.witness->y;
    w["distance"] = cert.witness->dist;
    w["count"] = std::string(1, cert.witness->kind);
    w["expected"] = cert.witness->expected;
    w["got"] = cert.witness->got;
    j["witness"] = std::move(w);
  }
  return j;
}

ojson render_enumeration_record(const IntersectionArray& arr, const FeasibilityReport& rep) {
  ojson j;
  j["array"] = format_array(arr);
  const DeriveOutcome der = derive_checked(arr);
  j["v"] = der.ok() ? ojson(der.params->v) : ojson();
  j["k"] = arr.valency();
  j["D"] = arr.diameter();
  j["ratio"] = arr.diameter() >= 2 ? ojson(to_string(ratio_k2_over_k(arr))) : ojson();
  j["report"] = render_report(rep);
  return j;
}

}  // namespace drg
