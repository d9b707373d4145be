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

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "drg/bounds.hpp"
#include "drg/catalog.hpp"
#include "drg/enumerate.hpp"
#include "drg/graph.hpp"
#include "drg/json_io.hpp"

namespace {

constexpr const char* kVersion = "drg 0.1.0";

// Exit codes: 0 success/pass, 2 domain fail, 1 usage or I/O error.
constexpr int kPass = 0;
constexpr int kDomainFail = 2;
constexpr int kUsage = 1;

struct Config {
  // check
  std::string array_literal;
  bool json = false;
  std::string c_flag, t_flag, alpha_flag;
  std::string quadrangle_flag;  // "", "true", "false"
  bool terwilliger = false;
  // spectrum
  std::string tol_flag;
  bool sequences = false;
  // enumerate
  std::string k_min_flag = "3", k_max_flag = "3";
  std::string diameter_flag = "1..3";
  std::string ratio_cap_flag, ratio_on_flag = "k2k";
  std::string out_path, checkpoint_path;
  bool resume = false;
  int workers = 1;
  bool no_spectral = false, no_absolute = false, theorem2 = false;
  bool summary = false;
  std::string config_path;
  // verify
  std::string graph_path, gen_desc, expect_array;
  bool full = false;
  // catalog
  std::string catalog_name;
};

void print_verdict_line(const drg::RuleVerdict& v) {
  std::cout << "  " << v.rule << ": " << to_string(v.status);
  if (!v.assuming.empty()) std::cout << " [assuming " << v.assuming << "]";
  if (!v.witness.empty()) {
    std::cout << " (";
    bool first = true;
    for (const auto& [key, value] : v.witness) {
      if (!first) std::cout << ", ";
      std::cout << key << "=" << value;
      first = false;
    }
    std::cout << ")";
  }
  std::cout << "\n";
}

int cmd_check(const Config& cfg) {
  const drg::IntersectionArray arr = drg::parse_array(cfg.array_literal);
  drg::AnalyzeOptions opt;
  if (!cfg.c_flag.empty()) opt.C = drg::parse_rational(cfg.c_flag);
  if (!cfg.t_flag.empty()) opt.lemma7_t = static_cast<int>(drg::parse_rational(cfg.t_flag).num);
  if (!cfg.alpha_flag.empty()) opt.alpha = drg::parse_rational(cfg.alpha_flag).num;
  if (cfg.quadrangle_flag == "true") opt.has_quadrangle = true;
  if (cfg.quadrangle_flag == "false") opt.has_quadrangle = false;
  if (cfg.terwilliger) opt.is_terwilliger = true;

  const drg::FeasibilityReport rep = drg::analyze(arr, opt);
  if (cfg.json) {
    drg::ojson j = drg::render_report(rep);
    const drg::DeriveOutcome der = drg::derive_checked(arr);
    if (der.ok()) j["derived"] = drg::render_derived(*der.params);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "array " << drg::format_array(arr) << "\n";
    for (const auto& v : rep.rules) print_verdict_line(v);
    std::cout << "overall: " << (rep.overall_pass ? "pass" : "fail") << "\n";
  }
  return rep.overall_pass ? kPass : kDomainFail;
}

// Tolerances take "p/q" rationals or plain decimal/scientific notation.
double parse_tolerance(const std::string& s) {
  if (s.find('/') != std::string::npos) return drg::parse_rational(s).to_double();
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw drg::ParseError("invalid tolerance: '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw drg::ParseError("invalid tolerance: '" + s + "'");
  }
}

int cmd_spectrum(const Config& cfg) {
  const drg::IntersectionArray arr = drg::parse_array(cfg.array_literal);
  drg::SpectralOptions opt;
  if (!cfg.tol_flag.empty()) opt.eig_rel_tol = parse_tolerance(cfg.tol_flag);
  const drg::SpectrumOutcome out = drg::spectrum_checked(arr, opt);
  if (!out.spectrum.has_value()) {
    std::cerr << "spectrum unavailable\n";
    return kDomainFail;
  }
  if (cfg.json) {
    drg::ojson j = drg::render_spectrum(arr, *out.spectrum, cfg.sequences);
    if (out.issue) j["issue"] = out.issue->message;
    std::cout << j.dump(2) << "\n";
  } else {
    const drg::Spectrum& sp = *out.spectrum;
    std::cout << "array " << drg::format_array(arr) << "\n";
    std::cout << "eigenvalues:";
    for (size_t i = 0; i < sp.theta.size(); ++i) {
      std::cout << " " << drg::decimal_string(sp.theta[i]);
      if (sp.integer_theta[i]) std::cout << "~";
    }
    std::cout << "\nmultiplicities:";
    for (int64_t m : sp.m) std::cout << " " << m;
    std::cout << "\nmu:";
    for (double m : sp.mu) std::cout << " " << drg::decimal_string(m);
    std::cout << "\n";
    if (cfg.sequences) {
      for (const auto& s : sp.sequences) {
        std::cout << "u(" << drg::decimal_string(s.theta) << "):";
        for (double u : s.u) std::cout << " " << drg::decimal_string(u);
        std::cout << "\n";
      }
    }
    if (out.issue) std::cout << "issue: " << out.issue->message << "\n";
  }
  return out.ok() ? kPass : kDomainFail;
}

std::pair<int, int> parse_diameter_range(const std::string& s) {
  const size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const int d = std::stoi(s);
    return {d, d};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int cmd_enumerate(const Config& cfg) {
  drg::EnumerationConstraints cons;
  if (!cfg.config_path.empty()) {
    cons = drg::load_job_config(cfg.config_path);
  } else {
    cons.k_min = drg::parse_rational(cfg.k_min_flag).num;
    cons.k_max = drg::parse_rational(cfg.k_max_flag).num;
    const auto [dlo, dhi] = parse_diameter_range(cfg.diameter_flag);
    cons.d_min = dlo;
    cons.d_max = dhi;
    if (!cfg.ratio_cap_flag.empty()) {
      cons.ratio_cap = drg::parse_rational(cfg.ratio_cap_flag);
      cons.ratio_kind = cfg.ratio_on_flag == "b2c2"
                            ? drg::EnumerationConstraints::RatioKind::B2OverC2
                            : drg::EnumerationConstraints::RatioKind::K2OverK;
    }
    cons.spectral_checks = !cfg.no_spectral;
    cons.absolute_bound = !cfg.no_absolute;
    cons.theorem2_caps = cfg.theorem2;
    if (!cfg.c_flag.empty()) cons.theorem2_C = drg::parse_rational(cfg.c_flag);
    cons.workers = cfg.workers;
  }

  std::string checkpoint = cfg.checkpoint_path;
  if (checkpoint.empty()) {
    if (const char* dir = std::getenv("DRG_CHECKPOINT_DIR")) {
      checkpoint = std::string(dir) + "/enumerate-" + drg::constraints_hash(cons) + ".json";
    }
  }

  if (cfg.out_path.empty()) {
    // Stream to stdout, no checkpointing.
    drg::EnumerationCounts counts = drg::enumerate_arrays(
        cons, [](const drg::IntersectionArray& arr, const drg::FeasibilityReport& rep) {
          std::cout << drg::render_enumeration_record(arr, rep).dump() << "\n";
        });
    if (cfg.summary) {
      std::cerr << "visited " << counts.visited << ", emitted " << counts.emitted << "\n";
      for (const auto& [rule, n] : counts.pruned) std::cerr << "  pruned " << rule << ": " << n << "\n";
    }
    return kPass;
  }
  const drg::JobResult res =
      drg::run_enumeration_job(cons, cfg.out_path, checkpoint, cfg.resume);
  if (cfg.summary) {
    std::cerr << "visited " << res.counts.visited << ", emitted " << res.counts.emitted << "\n";
    for (const auto& [rule, n] : res.counts.pruned) std::cerr << "  pruned " << rule << ": " << n << "\n";
  }
  return kPass;
}

int cmd_verify(const Config& cfg) {
  drg::Graph g;
  if (!cfg.gen_desc.empty()) {
    g = drg::build_generator(cfg.gen_desc);
  } else if (!cfg.graph_path.empty()) {
    g = drg::load_graph(cfg.graph_path);
  } else {
    std::cerr << "verify needs a graph file or --gen\n";
    return kUsage;
  }
  const drg::Certification cert = drg::certify(g);
  drg::ojson j = drg::render_certification(cert);
  j["n"] = g.order();
  j["edges"] = g.edge_count();

  bool ok = cert.is_drg;
  if (ok && !cfg.expect_array.empty()) {
    const drg::IntersectionArray expected = drg::parse_array(cfg.expect_array);
    ok = (*cert.array == expected);
    j["expected"] = drg::format_array(expected);
    j["matches_expected"] = ok;
  }
  if (cfg.full && cert.is_drg) {
    const bool is_complete =
        g.edge_count() == static_cast<int64_t>(g.order()) * (g.order() - 1) / 2;
    if (!is_complete) {
      const drg::TerwilligerScan scan = terwilliger_scan(g);
      drg::ojson ts;
      ts["is_terwilliger"] = scan.is_terwilliger;
      if (scan.mu) ts["mu"] = *scan.mu;
      ts["has_quadrangle"] = scan.has_quadrangle;
      j["terwilliger"] = std::move(ts);
    }
    if (cert.array->diameter() > 1) {
      const drg::AntipodalResult ar = antipodal_check(g, cert);
      drg::ojson aj;
      aj["is_antipodal"] = ar.is_antipodal;
      if (ar.r) aj["r"] = *ar.r;
      j["antipodal"] = std::move(aj);
    }
    const drg::QuotientCheck qc = distance_partition_quotient(g, cert, 0);
    drg::ojson qj;
    qj["equitable"] = qc.equitable;
    qj["eigenvalues_in_spectrum"] = qc.eigenvalues_in_spectrum;
    j["quotient"] = std::move(qj);
  }
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    if (cert.is_drg) {
      std::cout << "distance-regular: yes\narray " << drg::format_array(*cert.array) << "\n";
      if (!cfg.expect_array.empty()) std::cout << "matches expected: " << (ok ? "yes" : "no") << "\n";
      if (cfg.full) std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "distance-regular: no\n";
      if (cert.witness) {
        std::cout << "witness: x=" << cert.witness->x << " y=" << cert.witness->y
                  << " dist=" << cert.witness->dist << " " << cert.witness->kind
                  << "-count expected " << cert.witness->expected << " got "
                  << cert.witness->got << "\n";
      }
    }
  }
  return ok ? kPass : kDomainFail;
}

int cmd_bounds(const Config& cfg) {
  drg::BoundContext ctx;
  ctx.C = drg::parse_rational(cfg.c_flag.empty() ? "1" : cfg.c_flag);
  if (!cfg.t_flag.empty()) ctx.t = static_cast<int>(drg::parse_rational(cfg.t_flag).num);
  if (!cfg.alpha_flag.empty()) ctx.alpha = drg::parse_rational(cfg.alpha_flag).num;
  const drg::Rat C = ctx.C;
  const int t = ctx.t;
  const drg::Rat d_cap = drg::Rat(8) * C * C * drg::Rat(t);
  const drg::Rat k_cap = drg::Rat(2) * C;
  drg::ojson j;
  j["C"] = to_string(C);
  j["t"] = t;
  j["lemma7"] = {{"diameter_cap", to_string(d_cap)}, {"valency_cap", to_string(k_cap)}};
  if (!cfg.alpha_flag.empty()) {
    j["lemma9"] = {{"alpha", ctx.alpha}, {"diameter_cap", ctx.alpha + 1}};
  }
  j["theorem2"] = {{"diameter_cap", to_string(drg::Rat(16) * C * C)},
                   {"valency_cap", to_string(k_cap)}};
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lemma 7 (t=" << t << ", C=" << to_string(C) << "): D <= " << to_string(d_cap)
              << " or k <= " << to_string(k_cap) << "\n";
    if (!cfg.alpha_flag.empty()) {
      std::cout << "lemma 9 (alpha=" << cfg.alpha_flag << "): D <= "
                << to_string(drg::parse_rational(cfg.alpha_flag) + drg::Rat(1)) << "\n";
    }
    std::cout << "theorem 2 (C=" << to_string(C) << "): D <= " << to_string(drg::Rat(16) * C * C)
              << " or k <= " << to_string(k_cap) << "\n";
  }
  return kPass;
}

int cmd_catalog_list(const Config& cfg) {
  if (cfg.json) {
    drg::ojson arr = drg::ojson::array();
    for (const auto& e : drg::catalog_entries()) {
      drg::ojson j;
      j["name"] = e.name;
      j["array"] = e.array_literal;
      j["provenance"] = e.provenance;
      j["notes"] = e.notes;
      j["flagged"] = e.flagged;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& e : drg::catalog_entries()) {
      std::cout << e.name << " " << e.array_literal << " [" << e.provenance << "]"
                << (e.flagged ? " (flagged)" : "") << "\n";
    }
  }
  return kPass;
}

int cmd_catalog_get(const Config& cfg) {
  const drg::CatalogEntry& e = drg::catalog_lookup(cfg.catalog_name);
  drg::ojson j;
  j["name"] = e.name;
  j["array"] = e.array_literal;
  j["provenance"] = e.provenance;
  j["source"] = e.source;
  j["notes"] = e.notes;
  j["flagged"] = e.flagged;
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << e.name << " " << e.array_literal << "\n[" << e.provenance << "] " << e.notes
              << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-regular graph feasibility toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Config cfg;

  CLI::App* check = app.add_subcommand("check", "feasibility checks and bounds for an array");
  check->add_option("array", cfg.array_literal, "intersection array literal")->required();
  check->add_flag("--json", cfg.json);
  check->add_option("--C", cfg.c_flag, "ratio cap (rational p/q)");
  check->add_option("--t", cfg.t_flag, "dichotomy step index");
  check->add_option("--alpha", cfg.alpha_flag, "quadrangle bound parameter");
  check->add_option("--quadrangle", cfg.quadrangle_flag, "graph has a quadrangle (true/false)");
  check->add_flag("--terwilliger", cfg.terwilliger, "assert the graph is Terwilliger");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
  spectrum->add_option("array", cfg.array_literal)->required();
  spectrum->add_option("--tol", cfg.tol_flag, "eigenvalue relative tolerance");
  spectrum->add_flag("--sequences", cfg.sequences, "include standard sequences");
  spectrum->add_flag("--json", cfg.json);

  CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive feasible-array search");
  enumerate->add_option("--k-min", cfg.k_min_flag);
  enumerate->add_option("--k-max", cfg.k_max_flag);
  enumerate->add_option("--diameter,-D", cfg.diameter_flag, "diameter or range a..b");
  enumerate->add_option("--ratio-cap", cfg.ratio_cap_flag, "rational cap");
  enumerate->add_option("--ratio-on", cfg.ratio_on_flag, "k2k (default) or b2c2");
  enumerate->add_option("--out", cfg.out_path, "JSONL output path (default stdout)");
  enumerate->add_option("--checkpoint", cfg.checkpoint_path);
  enumerate->add_flag("--resume", cfg.resume);
  enumerate->add_option("--workers", cfg.workers);
  enumerate->add_flag("--no-spectral", cfg.no_spectral);
  enumerate->add_flag("--no-absolute-bound", cfg.no_absolute);
  enumerate->add_flag("--theorem2-caps", cfg.theorem2);
  enumerate->add_option("--C", cfg.c_flag, "Theorem 2 cap parameter");
  enumerate->add_option("--config", cfg.config_path, "job config JSON (overrides other flags)");
  enumerate->add_flag("--summary", cfg.summary, "print counts to stderr");

  CLI::App* verify = app.add_subcommand("verify", "certify an explicit graph");
  verify->add_option("graph", cfg.graph_path, "edge-list file");
  verify->add_option("--gen", cfg.gen_desc, "generator, e.g. hypercube(4)");
  verify->add_option("--expect-array", cfg.expect_array);
  verify->add_flag("--full", cfg.full, "also run terwilliger/antipodal/quotient checks");
  verify->add_flag("--json", cfg.json);

  CLI::App* bounds = app.add_subcommand("bounds", "print caps for given parameters");
  bounds->add_option("--C", cfg.c_flag)->required();
  bounds->add_option("--t", cfg.t_flag);
  bounds->add_option("--alpha", cfg.alpha_flag);
  bounds->add_flag("--json", cfg.json);

  CLI::App* catalog = app.add_subcommand("catalog", "named fixture arrays");
  CLI::App* cat_list = catalog->add_subcommand("list", "list entries");
  cat_list->add_flag("--json", cfg.json);
  CLI::App* cat_get = catalog->add_subcommand("get", "look up one entry");
  cat_get->add_option("name", cfg.catalog_name)->required();
  cat_get->add_flag("--json", cfg.json);
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(cfg);
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (catalog->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list(cfg);
      if (cat_get->parsed()) return cmd_catalog_get(cfg);
    }
  } catch (const drg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const drg::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const drg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
