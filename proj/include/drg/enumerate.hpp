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

#ifndef DRG_ENUMERATE_HPP
#define DRG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "drg/bounds.hpp"
#include "drg/intersection_array.hpp"
#include "drg/rational.hpp"

namespace drg {

/// Constraint box for the exhaustive search. Arrays are explored in
/// lexicographic order of the extension tuple (k, D, b1, c2, b2, c3, b3,
/// ..., cD); output order is independent of the worker count.
struct EnumerationConstraints {
  int64_t k_min = 3;
  int64_t k_max = 3;
  int d_min = 1;
  int d_max = 3;

  enum class RatioKind { None, K2OverK, B2OverC2 };
  RatioKind ratio_kind = RatioKind::None;
  Rat ratio_cap = Rat(0);

  bool spectral_checks = true;   // multiplicity integrality/positivity, sum = v
  bool absolute_bound = true;    // k <= (m1+2)(m1-1)/2
  bool theorem2_caps = false;    // v cap + pipeline kills (census mode)
  Rat theorem2_C = Rat(1);

  int workers = 1;

  void validate() const;  // k_min >= 3, d_min >= 1, workers >= 1
};

struct EnumerationCounts {
  int64_t visited = 0;
  int64_t emitted = 0;
  std::map<std::string, int64_t> pruned;  // per-rule kill statistics

  void merge(const EnumerationCounts& other);
};

using EmitFn = std::function<void(const IntersectionArray&, const FeasibilityReport&)>;

/// Core search. Emissions arrive in lexicographic order regardless of
/// constraints.workers; the callback runs on the calling thread.
EnumerationCounts enumerate_arrays(const EnumerationConstraints& cons, const EmitFn& emit);

/// File-backed job with JSONL output and resumable checkpointing. The
/// checkpoint (single JSON document, written atomically) stores the
/// constraint hash, completed-task cursor, byte offset and counts. Resuming
/// truncates the output to the checkpointed offset and continues, so the
/// final byte stream equals an uninterrupted run. `stop_after_tasks` ends
/// the run early after that many search tasks (testing/interruption hook).
struct JobResult {
  EnumerationCounts counts;
  bool complete = true;
};

JobResult run_enumeration_job(const EnumerationConstraints& cons, const std::string& out_path,
                              const std::string& checkpoint_path, bool resume,
                              std::optional<int64_t> stop_after_tasks = std::nullopt);

/// FNV-1a hash of the canonical constraints JSON (workers excluded).
std::string constraints_hash(const EnumerationConstraints& cons);

/// Job-config document: round-trips every field of EnumerationConstraints.
std::string constraints_to_json(const EnumerationConstraints& cons);
EnumerationConstraints constraints_from_json(const std::string& text);
EnumerationConstraints load_job_config(const std::string& path);

struct CensusSummary {
  std::vector<std::pair<int64_t, int64_t>> per_valency;  // (k, emitted count)
  EnumerationCounts counts;
  bool caps_enabled = false;  // Theorem 2 caps engage only for D >= 6
  int64_t total = 0;
};

/// Finiteness demonstration: enumerate k in [3, k_max] at fixed diameter
/// with k2/k <= C and the full pruning pipeline; per-valency counts and
/// per-rule kill statistics.
CensusSummary finiteness_census(const Rat& C, int d_fixed, int64_t k_max,
                                const EmitFn& emit = {});

}  // namespace drg

#endif  // DRG_ENUMERATE_HPP
