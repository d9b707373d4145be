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

#ifndef DRG_INTERSECTION_ARRAY_HPP
#define DRG_INTERSECTION_ARRAY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/rational.hpp"
#include "drg/verdict.hpp"

namespace drg {

/// The intersection array {b0,...,b_{D-1}; c1,...,cD} of a distance-regular
/// graph. Immutable value type; all entries are positive and c1 = 1.
struct IntersectionArray {
  std::vector<int64_t> b;  // b[i] = b_i for 0 <= i <= D-1
  std::vector<int64_t> c;  // c[i-1] = c_i for 1 <= i <= D

  int diameter() const { return static_cast<int>(b.size()); }
  int64_t valency() const { return b[0]; }

  /// b_i with the convention b_D = 0.
  int64_t b_at(int i) const { return i < diameter() ? b[static_cast<size_t>(i)] : 0; }
  /// c_i with the convention c_0 = 0.
  int64_t c_at(int i) const { return i >= 1 ? c[static_cast<size_t>(i - 1)] : 0; }
  /// a_i = k - b_i - c_i for 0 <= i <= D.
  int64_t a_at(int i) const { return valency() - b_at(i) - c_at(i); }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Validates lengths, positivity and c1 = 1; throws ParseError.
IntersectionArray make_array(std::vector<int64_t> b, std::vector<int64_t> c);

/// Parses "{b0,...;c1,...}". Whitespace between tokens is tolerated; the
/// canonical formatter below emits none.
IntersectionArray parse_array(std::string_view text);

/// Canonical literal: no whitespace, comma-separated, semicolon divider.
std::string format_array(const IntersectionArray& arr);

struct DerivedParameters {
  std::vector<int64_t> a;      // a_0..a_D
  std::vector<int64_t> k_seq;  // k_0..k_D
  int64_t v = 0;
  int64_t k = 0;
  int h = 0;
};

enum class DeriveIssueKind { NegativeA, NonIntegralK, Overflow };

struct DeriveIssue {
  DeriveIssueKind kind;
  int index;  // the offending i
  std::string message;
};

struct DeriveOutcome {
  std::optional<DerivedParameters> params;
  std::optional<DeriveIssue> issue;
  bool ok() const { return params.has_value(); }
};

/// Non-throwing derivation of a_i, k_i, v, h via exact checked arithmetic.
DeriveOutcome derive_checked(const IntersectionArray& arr);

/// Throwing wrapper around derive_checked.
DerivedParameters derive(const IntersectionArray& arr);

/// The three Lemma 1 conditions as verdicts (rules "L1.monotone-b",
/// "L1.monotone-c", "L1.bi-ge-cj"), each with the first violating index.
std::vector<RuleVerdict> basic_feasibility(const IntersectionArray& arr);

/// Order-(s,t) parameters, defined when c2 = 1.
struct OrderParams {
  int64_t s = 0;
  int64_t t = 0;
  bool line_graph = false;  // set when t = 1
};

struct OrderOutcome {
  enum class Status { Applicable, NotApplicable, Inconsistent } status;
  std::optional<OrderParams> params;  // set iff Applicable
};

OrderOutcome order_params(const IntersectionArray& arr);

/// k2/k = b1/c2 as an exact rational; requires D >= 2.
Rat ratio_k2_over_k(const IntersectionArray& arr);

}  // namespace drg

#endif  // DRG_INTERSECTION_ARRAY_HPP
