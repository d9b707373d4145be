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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drg/bounds.hpp"
#include "drg/catalog.hpp"
#include "drg/enumerate.hpp"
#include "drg/graph.hpp"
#include "drg/json_io.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const drg::ojson& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null: return py::none();
    case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer: return py::int_(j.get<int64_t>());
    case nlohmann::detail::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
    case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

drg::Graph graph_from_arg(const std::string& spec) {
  if (spec.find('(') != std::string::npos) return drg::build_generator(spec);
  return drg::load_graph(spec);
}

drg::AnalyzeOptions options_from(const std::string& C, bool run_theorem2) {
  drg::AnalyzeOptions opt;
  if (!C.empty()) opt.C = drg::parse_rational(C);
  opt.run_theorem2 = run_theorem2;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "distance-regular graph feasibility toolkit";
  m.attr("__version__") = "0.1.0";

  m.def("parse_array", [](const std::string& text) {
    const drg::IntersectionArray arr = drg::parse_array(text);
    py::dict d;
    d["b"] = arr.b;
    d["c"] = arr.c;
    d["D"] = arr.diameter();
    d["k"] = arr.valency();
    return d;
  }, py::arg("literal"), "Parse an intersection-array literal into its halves.");

  m.def("format_array", [](const std::vector<int64_t>& b, const std::vector<int64_t>& c) {
    return drg::format_array(drg::make_array(b, c));
  }, py::arg("b"), py::arg("c"));

  m.def("derive", [](const std::string& literal) {
    return json_to_py(drg::render_derived(drg::derive(drg::parse_array(literal))));
  }, py::arg("literal"), "Derived parameters a_i, k_i, v, h, k.");

  m.def("ratio_k2_over_k", [](const std::string& literal) {
    return to_string(drg::ratio_k2_over_k(drg::parse_array(literal)));
  }, py::arg("literal"));

  m.def("spectrum", [](const std::string& literal, bool sequences) {
    const drg::IntersectionArray arr = drg::parse_array(literal);
    const drg::Spectrum sp = drg::spectrum(arr);
    return json_to_py(drg::render_spectrum(arr, sp, sequences));
  }, py::arg("literal"), py::arg("sequences") = false);

  m.def("standard_sequence", [](const std::string& literal, double theta) {
    return drg::standard_sequence(drg::parse_array(literal), theta).u;
  }, py::arg("literal"), py::arg("theta"));

  m.def("biggs_multiplicity", [](const std::string& literal, double theta) {
    return drg::biggs_multiplicity(drg::parse_array(literal), theta);
  }, py::arg("literal"), py::arg("theta"));

  m.def("theta1_lower_bound_check", [](const std::string& literal, int t) {
    const drg::Theta1BoundResult r =
        drg::theta1_lower_bound_check(drg::parse_array(literal), t);
    py::dict d;
    d["theta1"] = r.theta1;
    d["mu_t"] = r.mu_t;
    d["verdict"] = r.equality ? "equality" : "strict";
    d["antipodal_signature"] = r.antipodal_signature;
    return d;
  }, py::arg("literal"), py::arg("t"));

  m.def("check", [](const std::string& literal, const std::string& C, bool theorem2) {
    const drg::FeasibilityReport rep =
        drg::analyze(drg::parse_array(literal), options_from(C, theorem2));
    return json_to_py(drg::render_report(rep));
  }, py::arg("literal"), py::arg("C") = "", py::arg("theorem2") = true,
     "Full feasibility report (Lemma 1, spectral checks, bounds, Theorem 2).");

  m.def("enumerate_arrays",
        [](int64_t k_min, int64_t k_max, int d_min, int d_max, const std::string& ratio_cap,
           const std::string& ratio_on, bool theorem2_caps, const std::string& C, int workers) {
          drg::EnumerationConstraints cons;
          cons.k_min = k_min;
          cons.k_max = k_max;
          cons.d_min = d_min;
          cons.d_max = d_max;
          if (!ratio_cap.empty()) {
            cons.ratio_cap = drg::parse_rational(ratio_cap);
            cons.ratio_kind = ratio_on == "b2c2"
                                  ? drg::EnumerationConstraints::RatioKind::B2OverC2
                                  : drg::EnumerationConstraints::RatioKind::K2OverK;
          }
          cons.theorem2_caps = theorem2_caps;
          if (!C.empty()) cons.theorem2_C = drg::parse_rational(C);
          cons.workers = workers;
          py::list records;
          drg::enumerate_arrays(cons, [&](const drg::IntersectionArray& arr,
                                          const drg::FeasibilityReport& rep) {
            records.append(json_to_py(drg::render_enumeration_record(arr, rep)));
          });
          return records;
        },
        py::arg("k_min") = 3, py::arg("k_max") = 3, py::arg("d_min") = 1, py::arg("d_max") = 3,
        py::arg("ratio_cap") = "", py::arg("ratio_on") = "k2k", py::arg("theorem2_caps") = false,
        py::arg("C") = "", py::arg("workers") = 1);

  m.def("finiteness_census", [](const std::string& C, int d_fixed, int64_t k_max) {
    const drg::CensusSummary s = drg::finiteness_census(drg::parse_rational(C), d_fixed, k_max);
    py::dict d;
    py::list pv;
    for (auto [k, n] : s.per_valency) pv.append(py::make_tuple(k, n));
    d["per_valency"] = pv;
    d["total"] = s.total;
    d["caps_enabled"] = s.caps_enabled;
    d["visited"] = s.counts.visited;
    d["pruned"] = s.counts.pruned;
    return d;
  }, py::arg("C"), py::arg("d_fixed"), py::arg("k_max"));

  m.def("certify", [](const std::string& graph_spec) {
    const drg::Graph g = graph_from_arg(graph_spec);
    drg::ojson j = drg::render_certification(drg::certify(g));
    j["n"] = g.order();
    return json_to_py(j);
  }, py::arg("graph"), "Certify an edge-list file or generator expression like 'petersen()'.");

  m.def("terwilliger_scan", [](const std::string& graph_spec) {
    const drg::TerwilligerScan s = drg::terwilliger_scan(graph_from_arg(graph_spec));
    py::dict d;
    d["is_terwilliger"] = s.is_terwilliger;
    d["mu"] = s.mu ? py::object(py::int_(*s.mu)) : py::object(py::none());
    d["has_quadrangle"] = s.has_quadrangle;
    return d;
  }, py::arg("graph"));

  m.def("antipodal_check", [](const std::string& graph_spec) {
    const drg::Graph g = graph_from_arg(graph_spec);
    const drg::AntipodalResult r = drg::antipodal_check(g, drg::certify(g));
    py::dict d;
    d["is_antipodal"] = r.is_antipodal;
    d["r"] = r.r ? py::object(py::int_(*r.r)) : py::object(py::none());
    return d;
  }, py::arg("graph"));

  m.def("adjacency_eigenvalues", [](const std::string& graph_spec) {
    return drg::adjacency_eigenvalues(graph_from_arg(graph_spec));
  }, py::arg("graph"), "Brute-force adjacency spectrum, descending.");

  m.def("lemma7_dichotomy", [](const std::string& literal, int t, const std::string& C) {
    return json_to_py(drg::render_verdict(
        drg::lemma7_dichotomy(drg::parse_array(literal), t, drg::parse_rational(C))));
  }, py::arg("literal"), py::arg("t"), py::arg("C"));

  m.def("claim1_property", [](const std::string& literal, int t) {
    return json_to_py(drg::render_verdict(drg::claim1_property(drg::parse_array(literal), t)));
  }, py::arg("literal"), py::arg("t"));

  m.def("lemma9_diameter_cap",
        [](const std::string& literal, int64_t alpha, bool has_quadrangle) {
          const drg::Lemma9Result r =
              drg::lemma9_diameter_cap(drg::parse_array(literal), alpha, has_quadrangle);
          py::dict d;
          d["verdict"] = json_to_py(drg::render_verdict(r.verdict));
          d["diameter_cap"] = r.diameter_cap ? py::object(py::int_(*r.diameter_cap))
                                             : py::object(py::none());
          return d;
        },
        py::arg("literal"), py::arg("alpha"), py::arg("has_quadrangle"));

  m.def("terwilliger_filter", [](const std::string& literal, const std::string& T) {
    py::list out;
    for (const auto& v :
         drg::terwilliger_filter(drg::parse_array(literal), drg::parse_rational(T))) {
      out.append(json_to_py(drg::render_verdict(v)));
    }
    return out;
  }, py::arg("literal"), py::arg("T") = "2");

  m.def("theorem2_pipeline", [](const std::string& literal, const std::string& C) {
    return json_to_py(drg::render_report(
        drg::theorem2_pipeline(drg::parse_array(literal), drg::parse_rational(C))));
  }, py::arg("literal"), py::arg("C"));

  m.def("catalog_list", [] {
    py::list out;
    for (const auto& e : drg::catalog_entries()) {
      py::dict d;
      d["name"] = e.name;
      d["array"] = e.array_literal;
      d["provenance"] = e.provenance;
      d["notes"] = e.notes;
      d["flagged"] = e.flagged;
      out.append(std::move(d));
    }
    return out;
  });

  m.def("catalog_get", [](const std::string& name) {
    const drg::CatalogEntry& e = drg::catalog_lookup(name);
    py::dict d;
    d["name"] = e.name;
    d["array"] = e.array_literal;
    d["provenance"] = e.provenance;
    d["source"] = e.source;
    d["notes"] = e.notes;
    d["flagged"] = e.flagged;
    return d;
  }, py::arg("name"));

  m.def("hadamard_family", [](int64_t mu) {
    return drg::format_array(drg::hadamard_family(mu));
  }, py::arg("mu"));

  m.def("flag_family", [](int64_t s, int d) {
    const drg::FamilyArray fa = drg::flag_family(s, d);
    return py::make_tuple(drg::format_array(fa.array), fa.note);
  }, py::arg("s"), py::arg("d"));

  // Translators run newest-first, so the base class goes in first.
  py::register_exception<drg::Error>(m, "DrgError", PyExc_RuntimeError);
  py::register_exception<drg::ParseError>(m, "DrgParseError", PyExc_ValueError);
}
