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

#ifndef DRG_CATALOG_HPP
#define DRG_CATALOG_HPP

#include <string>
#include <vector>

#include "drg/intersection_array.hpp"

namespace drg {

/// A named fixture array. `source` is the generator expression or fixture
/// file that certifies it; `flagged` marks entries stored as printed but
/// pending an external cross-check.
struct CatalogEntry {
  std::string name;
  std::string array_literal;
  std::string provenance;  // "paper-remark" | "certified-from-graph" | "family(...)"
  std::string source;
  std::string notes;
  bool flagged = false;

  IntersectionArray array() const { return parse_array(array_literal); }
};

/// The registry persisted as data/catalog.json (embedded at build time).
const std::vector<CatalogEntry>& catalog_entries();

/// Throws Error with a NotFound message for unknown names.
const CatalogEntry& catalog_lookup(const std::string& name);

bool catalog_has(const std::string& name);

/// Hadamard graph family {2mu, 2mu-1, mu, 1; 1, mu, 2mu-1, 2mu}.
IntersectionArray hadamard_family(int64_t mu);

struct FamilyArray {
  IntersectionArray array;
  std::string note;  // set when the instantiation is known to be excluded
};

/// Flag graph family {2s, s, ..., s; 1, 1, ..., 1} of length 2d, stored as
/// printed. For s > 1 only 2d in {6, 8} survives; other d are noted.
FamilyArray flag_family(int64_t s, int d);

/// The three arrays used by the Prop. 10 recognition rule: icosahedron,
/// Conway-Smith, Doro.
const std::vector<IntersectionArray>& prop10_recognition_arrays();

}  // namespace drg

#endif  // DRG_CATALOG_HPP
