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

#include "drg/rational.hpp"

#include <cctype>
#include <charconv>

namespace drg {

namespace {

int64_t parse_int64(std::string_view text) {
  int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("invalid integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) throw ParseError("empty rational");
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int64(text));
  const int64_t num = parse_int64(text.substr(0, slash));
  const int64_t den = parse_int64(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace drg
