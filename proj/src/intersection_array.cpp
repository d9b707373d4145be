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

#include "drg/intersection_array.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace drg {

namespace {

std::vector<int64_t> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int64_t> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    size_t b = 0, e = tok.size();
    while (b < e && std::isspace(static_cast<unsigned char>(tok[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(tok[e - 1]))) --e;
    tok = tok.substr(b, e - b);
    if (tok.empty()) {
      throw ParseError("empty entry in " + std::string(what) + " half of array literal");
    }
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid integer '" + std::string(tok) + "' in array literal");
    }
    out.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IntersectionArray make_array(std::vector<int64_t> b, std::vector<int64_t> c) {
  if (b.empty() || b.size() != c.size()) {
    throw ParseError("intersection array halves must be non-empty and of equal length");
  }
  for (int64_t x : b) {
    if (x < 1) throw ParseError("all b_i must be positive, got " + std::to_string(x));
  }
  for (int64_t x : c) {
    if (x < 1) throw ParseError("all c_i must be positive, got " + std::to_string(x));
  }
  if (c[0] != 1) throw ParseError("c_1 must equal 1, got " + std::to_string(c[0]));
  return IntersectionArray{std::move(b), std::move(c)};
}

IntersectionArray parse_array(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("array literal must be wrapped in braces: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  const size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("array literal needs a ';' divider");
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("array literal has more than one ';' divider");
  }
  auto b = parse_int_list(text.substr(0, semi), "b");
  auto c = parse_int_list(text.substr(semi + 1), "c");
  if (b.size() != c.size()) {
    throw ParseError("unequal halves: " + std::to_string(b.size()) + " b-entries vs " +
                     std::to_string(c.size()) + " c-entries");
  }
  return make_array(std::move(b), std::move(c));
}

std::string format_array(const IntersectionArray& arr) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < arr.b.size(); ++i) {
    if (i) os << ',';
    os << arr.b[i];
  }
  os << ';';
  for (size_t i = 0; i < arr.c.size(); ++i) {
    if (i) os << ',';
    os << arr.c[i];
  }
  os << '}';
  return os.str();
}

DeriveOutcome derive_checked(const IntersectionArray& arr) {
  const int D = arr.diameter();
  const int64_t k = arr.valency();
  DerivedParameters dp;
  dp.k = k;
  dp.a.resize(static_cast<size_t>(D) + 1);
  dp.k_seq.resize(static_cast<size_t>(D) + 1);
  try {
    for (int i = 0; i <= D; ++i) {
      const int64_t ai = arr.a_at(i);
      if (ai < 0) {
        return {std::nullopt,
                DeriveIssue{DeriveIssueKind::NegativeA, i,
                            "a_" + std::to_string(i) + " = " + std::to_string(ai) + " < 0"}};
      }
      dp.a[static_cast<size_t>(i)] = ai;
    }
    // k_i via the running product k_i = k_{i-1} * b_{i-1} / c_i; each step
    // must divide exactly.
    dp.k_seq[0] = 1;
    int64_t vsum = 1;
    for (int i = 1; i <= D; ++i) {
      const int64_t numer = checked_mul(dp.k_seq[static_cast<size_t>(i - 1)], arr.b_at(i - 1));
      const int64_t ci = arr.c_at(i);
      if (numer % ci != 0) {
        return {std::nullopt,
                DeriveIssue{DeriveIssueKind::NonIntegralK, i,
                            "k_" + std::to_string(i) + " = " + std::to_string(numer) + "/" +
                                std::to_string(ci) + " is not an integer"}};
      }
      dp.k_seq[static_cast<size_t>(i)] = numer / ci;
      vsum = checked_add(vsum, dp.k_seq[static_cast<size_t>(i)]);
    }
    dp.v = vsum;
  } catch (const OverflowError& e) {
    return {std::nullopt, DeriveIssue{DeriveIssueKind::Overflow, -1, e.what()}};
  }
  dp.h = 0;
  for (int i = 1; i <= D - 1; ++i) {
    if (arr.c_at(i) == arr.c_at(1) && arr.a_at(i) == arr.a_at(1) && arr.b_at(i) == arr.b_at(1)) {
      ++dp.h;
    }
  }
  return {std::move(dp), std::nullopt};
}

DerivedParameters derive(const IntersectionArray& arr) {
  DeriveOutcome out = derive_checked(arr);
  if (!out.ok()) throw Error("derive failed for " + format_array(arr) + ": " + out.issue->message);
  return *std::move(out.params);
}

std::vector<RuleVerdict> basic_feasibility(const IntersectionArray& arr) {
  const int D = arr.diameter();
  std::vector<RuleVerdict> verdicts;

  // (i) k = b0 > b1 >= ... >= b_{D-1}
  {
    RuleVerdict v = make_verdict("L1.monotone-b", RuleStatus::Pass);
    for (int i = 1; i <= D - 1; ++i) {
      const bool ok = (i == 1) ? arr.b_at(0) > arr.b_at(1) : arr.b_at(i - 1) >= arr.b_at(i);
      if (!ok) {
        v.status = RuleStatus::Fail;
        v.witness = {{"index", std::to_string(i)},
                     {"b_prev", std::to_string(arr.b_at(i - 1))},
                     {"b_i", std::to_string(arr.b_at(i))}};
        break;
      }
    }
    verdicts.push_back(std::move(v));
  }

  // (ii) 1 = c1 <= c2 <= ... <= cD
  {
    RuleVerdict v = make_verdict("L1.monotone-c", RuleStatus::Pass);
    for (int i = 2; i <= D; ++i) {
      if (arr.c_at(i - 1) > arr.c_at(i)) {
        v.status = RuleStatus::Fail;
        v.witness = {{"index", std::to_string(i)},
                     {"c_prev", std::to_string(arr.c_at(i - 1))},
                     {"c_i", std::to_string(arr.c_at(i))}};
        break;
      }
    }
    verdicts.push_back(std::move(v));
  }

  // (iii) b_i >= c_j whenever i + j <= D
  {
    RuleVerdict v = make_verdict("L1.bi-ge-cj", RuleStatus::Pass);
    for (int i = 0; i <= D - 1 && v.status == RuleStatus::Pass; ++i) {
      for (int j = 1; i + j <= D; ++j) {
        if (arr.b_at(i) < arr.c_at(j)) {
          v.status = RuleStatus::Fail;
          v.witness = {{"i", std::to_string(i)},
                       {"j", std::to_string(j)},
                       {"b_i", std::to_string(arr.b_at(i))},
                       {"c_j", std::to_string(arr.c_at(j))}};
          break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  return verdicts;
}

OrderOutcome order_params(const IntersectionArray& arr) {
  if (arr.diameter() < 2 || arr.c_at(2) != 1) {
    return {OrderOutcome::Status::NotApplicable, std::nullopt};
  }
  const int64_t s = arr.a_at(1) + 1;
  const int64_t b1 = arr.b_at(1);
  if (b1 % s != 0) return {OrderOutcome::Status::Inconsistent, std::nullopt};
  const int64_t t = b1 / s;
  return {OrderOutcome::Status::Applicable, OrderParams{s, t, t == 1}};
}

Rat ratio_k2_over_k(const IntersectionArray& arr) {
  if (arr.diameter() < 2) throw PreconditionError("k2/k requires diameter >= 2");
  return Rat(arr.b_at(1), arr.c_at(2));
}

}  // namespace drg
