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

#ifndef DRG_JSON_IO_HPP
#define DRG_JSON_IO_HPP

#include <json.hpp>

#include "drg/bounds.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

namespace drg {

// ordered_json keeps insertion order, so all renderings are byte-stable.
using ojson = nlohmann::ordered_json;

/// Full-precision decimal string ("%.17g").
std::string decimal_string(double x);

ojson render_derived(const DerivedParameters& dp);
ojson render_spectrum(const IntersectionArray& arr, const Spectrum& sp,
                      bool include_sequences = false);
ojson render_verdict(const RuleVerdict& v);
ojson render_report(const FeasibilityReport& rep);
ojson render_certification(const Certification& cert);

/// One JSONL record: {array, v, k, D, ratio, report}.
ojson render_enumeration_record(const IntersectionArray& arr, const FeasibilityReport& rep);

}  // namespace drg

#endif  // DRG_JSON_IO_HPP
