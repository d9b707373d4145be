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

#include "drg/catalog.hpp"

#include <json.hpp>

#include "catalog_data.hpp"

namespace drg {

namespace {

std::vector<CatalogEntry> load_entries() {
  const nlohmann::json doc = nlohmann::json::parse(detail::kCatalogJson);
  std::vector<CatalogEntry> entries;
  for (const auto& e : doc.at("entries")) {
    CatalogEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.array_literal = e.at("array").get<std::string>();
    entry.provenance = e.at("provenance").get<std::string>();
    entry.source = e.value("source", std::string{});
    entry.notes = e.value("notes", std::string{});
    entry.flagged = e.value("flagged", false);
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = load_entries();
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw Error("NotFound: no catalog entry named '" + name + "'");
}

bool catalog_has(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return true;
  }
  return false;
}

IntersectionArray hadamard_family(int64_t mu) {
  if (mu < 1) throw PreconditionError("hadamard family needs mu >= 1");
  return make_array({2 * mu, 2 * mu - 1, mu, 1}, {1, mu, 2 * mu - 1, 2 * mu});
}

FamilyArray flag_family(int64_t s, int d) {
  if (s < 2 || d < 2) throw PreconditionError("flag family needs s >= 2, d >= 2");
  std::vector<int64_t> b(static_cast<size_t>(2 * d), s);
  b[0] = 2 * s;
  std::vector<int64_t> c(static_cast<size_t>(2 * d), 1);
  FamilyArray fa{make_array(std::move(b), std::move(c)), {}};
  if (d != 3 && d != 4) fa.note = "excluded by 2d in {6,8}";
  return fa;
}

const std::vector<IntersectionArray>& prop10_recognition_arrays() {
  static const std::vector<IntersectionArray> arrays = {
      catalog_lookup("icosahedron").array(),
      catalog_lookup("conway-smith").array(),
      catalog_lookup("doro").array(),
  };
  return arrays;
}

}  // namespace drg
