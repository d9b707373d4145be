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

#ifndef DRG_BOUNDS_HPP
#define DRG_BOUNDS_HPP

#include <optional>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"
#include "drg/spectral.hpp"
#include "drg/verdict.hpp"

namespace drg {

/// Parameters for the named rules.
struct BoundContext {
  Rat C = Rat(1);       // ratio cap
  int t = 2;            // step index for the dichotomy
  int64_t alpha = 2;    // quadrangle diameter-bound parameter, >= 2
  Rat T = Rat(2);       // Terwilliger filter parameter, >= 1
};

struct DerivedCaps {
  std::optional<Rat> diameter_cap;
  std::optional<Rat> valency_cap;
  std::optional<Rat> m1_cap;
  std::optional<Rat> v_cap;
};

struct FeasibilityReport {
  IntersectionArray array;
  std::vector<RuleVerdict> rules;
  DerivedCaps caps;
  bool overall_pass = true;

  const RuleVerdict* find(const std::string& rule) const;
  void add(RuleVerdict v);
};

/// Recomputes overall_pass: fail iff some applicable unconditional hard rule
/// fails. Conditional verdicts (non-empty `assuming`) and diagnostics never
/// flip the overall verdict on their own.
void finalize_overall(FeasibilityReport& report);

/// "L7.dichotomy": if b_t/c_t <= C then D <= 8C^2 t or k <= 2C.
/// NotApplicable when b_t/c_t > C or C < 1/2; PreconditionError if D < t+1.
RuleVerdict lemma7_dichotomy(const IntersectionArray& arr, int t, const Rat& C);

/// "L7.claim1": with C := b_t/c_t, either k <= 2C or b_{4t}/c_{4t} <= C/2.
/// NotApplicable when D < 4t.
RuleVerdict claim1_property(const IntersectionArray& arr, int t);

struct Lemma9Result {
  RuleVerdict verdict;                 // "L9.diameter"
  std::optional<int64_t> diameter_cap; // alpha + 1 when applicable
};

/// Quadrangle diameter bound; requires D >= 3, c_2 >= 2, alpha >= 2.
Lemma9Result lemma9_diameter_cap(const IntersectionArray& arr, int64_t alpha,
                                 bool has_quadrangle);

/// "P5.terwilliger" and "P10.recognition" for an array asserted Terwilliger
/// with c_2 >= 2. When `asserted` is false the verdicts are conditional.
std::vector<RuleVerdict> terwilliger_filter(const IntersectionArray& arr, const Rat& T,
                                            bool asserted = true,
                                            const SpectralOptions& opt = {});

struct HCapResult {
  RuleVerdict verdict;              // "H.4^k"
  std::optional<int64_t> cap;       // 4^k when it fits in 64 bits
};

/// D <= 4^k, evaluated only when h = 1.
HCapResult h_diameter_cap(const IntersectionArray& arr);

/// The Theorem 2 pipeline: dichotomy, v cap, the c_2 = 1 / Terwilliger /
/// quadrangle case split, and the absolute bound wherever an m_1 cap fired.
/// Out-of-scope arrays (D < 6) get not-applicable marks but caps are still
/// evaluated.
FeasibilityReport theorem2_pipeline(const IntersectionArray& arr, const Rat& C,
                                    const SpectralOptions& opt = {});

/// Options for the full composite report.
struct AnalyzeOptions {
  std::optional<Rat> C;                   // default: max(1, b2/c2 rounded up)
  int lemma7_t = 2;
  std::optional<int64_t> alpha;           // default: smallest alpha >= 2 with b2/c2 < alpha/2
  SpectralOptions spectral;
  std::optional<bool> has_quadrangle;     // graph-level facts, when known
  std::optional<bool> is_terwilliger;
  bool run_spectral = true;
  bool run_theorem2 = true;
};

/// Composite report: Lemma 1 conditions, derivation, spectral feasibility,
/// every applicable bound, and the Theorem 2 pipeline.
FeasibilityReport analyze(const IntersectionArray& arr, const AnalyzeOptions& opt = {});

/// Exact geometric sum 3 + C + C^2 + ... + C^{D-2}.
Rat theorem2_sum(const Rat& C, int D);

}  // namespace drg

#endif  // DRG_BOUNDS_HPP
