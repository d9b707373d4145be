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

#include <doctest.h>

#include "drg/catalog.hpp"
#include "drg/graph.hpp"
#include "drg/spectral.hpp"

using namespace drg;

namespace {
std::string data_path(const std::string& rel) { return std::string(DRG_DATA_DIR) + "/" + rel; }

Graph entry_source_graph(const CatalogEntry& e) {
  if (e.source.rfind("file:", 0) == 0) return load_graph(data_path(e.source.substr(5)));
  return build_generator(e.source);
}
}  // namespace

TEST_CASE("lookup") {
  CHECK(catalog_lookup("4-cube").array_literal == "{4,3,2,1;1,2,3,4}");
  CHECK(catalog_lookup("4-cube").provenance == "certified-from-graph");
  CHECK(catalog_lookup("icosahedron").array_literal == "{5,2,1;1,2,5}");
  CHECK_THROWS_AS(catalog_lookup("nonexistent"), Error);
  CHECK(catalog_has("petersen"));
  CHECK_FALSE(catalog_has("nonexistent"));
  CHECK(catalog_entries().size() >= 12);
}

TEST_CASE("provenance firewall: certified-from-graph entries re-certify") {
  for (const auto& e : catalog_entries()) {
    if (e.provenance != "certified-from-graph") continue;
    CAPTURE(e.name);
    const Graph g = entry_source_graph(e);
    const Certification cert = certify(g);
    REQUIRE(cert.is_drg);
    CHECK(format_array(*cert.array) == e.array_literal);
  }
}

TEST_CASE("every entry passes basic feasibility; unflagged entries pass spectrum") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    const IntersectionArray arr = e.array();
    for (const auto& v : basic_feasibility(arr)) CHECK(v.status == RuleStatus::Pass);
    CHECK(derive_checked(arr).ok());
    if (!e.flagged) {
      CHECK(spectrum_checked(arr).ok());
    } else {
      // Stored as printed pending the c_D cross-check; the corrected
      // variant with c_D = 2 is the spectrally consistent one.
      CHECK_FALSE(spectrum_checked(arr).ok());
      CHECK(spectrum_checked(parse_array("{4,2,2,2,2,2;1,1,1,1,1,2}")).ok());
    }
  }
}

TEST_CASE("hadamard family") {
  CHECK(format_array(hadamard_family(2)) == "{4,3,2,1;1,2,3,4}");
  CHECK(format_array(hadamard_family(1)) == "{2,1,1,1;1,1,1,2}");
  CHECK(format_array(hadamard_family(4)) == "{8,7,4,1;1,4,7,8}");
  for (int64_t mu : {1, 2, 4, 8}) {
    const IntersectionArray arr = hadamard_family(mu);
    CHECK(ratio_k2_over_k(arr) == Rat(2 * mu - 1, mu));
    CHECK(ratio_k2_over_k(arr) < Rat(2));
  }
  CHECK_THROWS_AS(hadamard_family(0), PreconditionError);
}

TEST_CASE("flag family") {
  const FamilyArray f23 = flag_family(2, 3);
  CHECK(format_array(f23.array) == "{4,2,2,2,2,2;1,1,1,1,1,1}");
  CHECK(f23.note.empty());
  const FamilyArray f24 = flag_family(2, 4);
  CHECK(f24.array.diameter() == 8);
  CHECK(f24.note.empty());
  const FamilyArray f25 = flag_family(2, 5);
  CHECK(f25.note == "excluded by 2d in {6,8}");
  CHECK_THROWS_AS(flag_family(1, 3), PreconditionError);
  CHECK_THROWS_AS(flag_family(2, 1), PreconditionError);
}

TEST_CASE("taylor entries have k2 = k") {
  for (const char* name : {"3-cube", "icosahedron"}) {
    const DerivedParameters dp = derive(catalog_lookup(name).array());
    CHECK(dp.k_seq[2] == dp.k);
    CHECK(catalog_lookup(name).array().diameter() == 3);
  }
}

TEST_CASE("prop 10 recognition arrays are the three catalog members") {
  const auto& arrays = prop10_recognition_arrays();
  REQUIRE(arrays.size() == 3);
  CHECK(format_array(arrays[0]) == "{5,2,1;1,2,5}");
  CHECK(format_array(arrays[1]) == "{10,6,4,1;1,2,6,10}");
  CHECK(format_array(arrays[2]) == "{10,6,4;1,2,5}");
}

TEST_CASE("hadamard mu=1 literal is the 8-gon") {
  const Graph g = cycle(8);
  const Certification cert = certify(g);
  REQUIRE(cert.is_drg);
  CHECK(*cert.array == hadamard_family(1));
}
