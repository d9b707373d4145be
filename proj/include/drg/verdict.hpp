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

#ifndef DRG_VERDICT_HPP
#define DRG_VERDICT_HPP

#include <string>
#include <utility>
#include <vector>

namespace drg {

enum class RuleStatus { Pass, Fail, NotApplicable };

inline const char* to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::Pass: return "pass";
    case RuleStatus::Fail: return "fail";
    default: return "not-applicable";
  }
}

/// One named rule outcome. `witness` carries both sides of the inequality
/// that was tested (as exact or full-precision strings) so every verdict can
/// be re-checked from the report alone. `assuming` is empty for
/// unconditional rules; conditional rules record the graph-level fact they
/// presuppose ("terwilliger", "quadrangle").
struct RuleVerdict {
  std::string rule;
  RuleStatus status = RuleStatus::NotApplicable;
  std::vector<std::pair<std::string, std::string>> witness;
  std::string assuming;

  bool passed() const { return status == RuleStatus::Pass; }
  bool failed() const { return status == RuleStatus::Fail; }
  bool applicable() const { return status != RuleStatus::NotApplicable; }
};

inline RuleVerdict make_verdict(std::string rule, RuleStatus status,
                                std::vector<std::pair<std::string, std::string>> witness = {},
                                std::string assuming = {}) {
  return RuleVerdict{std::move(rule), status, std::move(witness), std::move(assuming)};
}

}  // namespace drg

#endif  // DRG_VERDICT_HPP
