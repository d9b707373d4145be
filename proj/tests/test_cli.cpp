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

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DRG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data_path(const std::string& rel) { return std::string(DRG_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("exit codes: 0 pass, 2 domain fail, 1 usage") {
  CHECK(run_cli("check \"{3,2;1,1}\"").exit_code == 0);
  CHECK(run_cli("check \"{3,3;1,1}\"").exit_code == 2);
  CHECK(run_cli("check \"{3;2}\"").exit_code == 1);       // unequal halves
  CHECK(run_cli("check \"{oo\"").exit_code == 1);          // malformed
  CHECK(run_cli("frobnicate").exit_code == 1);             // unknown subcommand
  CHECK(run_cli("verify /no/such/file.edges").exit_code == 1);
  CHECK(run_cli("--version").exit_code == 0);
}

TEST_CASE("check --json is schema-stable") {
  const RunResult r = run_cli("check \"{4,3,2,1;1,2,3,4}\" --json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["array"] == "{4,3,2,1;1,2,3,4}");
  CHECK(j["overall"] == "pass");
  CHECK(j.contains("rules"));
  CHECK(j.contains("caps"));
  bool found_l7 = false;
  for (const auto& rule : j["rules"]) {
    if (rule["rule"] == "L7.dichotomy") {
      found_l7 = true;
      CHECK(rule["status"] == "pass");
    }
  }
  CHECK(found_l7);

  // Byte-deterministic for fixed input.
  const RunResult again = run_cli("check \"{4,3,2,1;1,2,3,4}\" --json");
  CHECK(again.out == r.out);
}

TEST_CASE("spectrum output") {
  const RunResult r = run_cli("spectrum \"{3,2;1,1}\" --json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["eigenvalues"].size() == 3);
  CHECK(std::stod(j["eigenvalues"][0].get<std::string>()) == doctest::Approx(3).epsilon(1e-9));
  CHECK(j["multiplicities"] == nlohmann::json::parse("[1,5,4]"));
  const RunResult seq = run_cli("spectrum \"{3,2;1,1}\" --json --sequences");
  const nlohmann::json js = nlohmann::json::parse(seq.out);
  CHECK(js.contains("standard_sequences"));
}

TEST_CASE("bounds prints the caps") {
  const RunResult r = run_cli("bounds --C 1 --t 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("D <= 16") != std::string::npos);
  CHECK(r.out.find("k <= 2") != std::string::npos);
  const RunResult rj = run_cli("bounds --C 3/2 --t 1 --alpha 3 --json");
  const nlohmann::json j = nlohmann::json::parse(rj.out);
  CHECK(j["lemma7"]["diameter_cap"] == "18");  // 8*(3/2)^2*1
  CHECK(j["lemma9"]["diameter_cap"] == 4);
  CHECK(j["theorem2"]["valency_cap"] == "3");
}

TEST_CASE("catalog subcommands") {
  const RunResult list = run_cli("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("petersen") != std::string::npos);
  CHECK(list.out.find("conway-smith") != std::string::npos);
  const RunResult get = run_cli("catalog get 4-cube");
  CHECK(get.exit_code == 0);
  CHECK(get.out.find("{4,3,2,1;1,2,3,4}") != std::string::npos);
  CHECK(run_cli("catalog get nonexistent").exit_code == 2);
}

TEST_CASE("verify on generators and files") {
  CHECK(run_cli("verify --gen \"petersen()\" --expect-array \"{3,2;1,1}\"").exit_code == 0);
  CHECK(run_cli("verify --gen \"petersen()\" --expect-array \"{3,2;1,2}\"").exit_code == 2);
  const RunResult full =
      run_cli("verify --gen \"hypercube(4)\" --full --json");
  REQUIRE(full.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(full.out);
  CHECK(j["is_drg"] == true);
  CHECK(j["array"] == "{4,3,2,1;1,2,3,4}");
  CHECK(j["terwilliger"]["has_quadrangle"] == true);
  CHECK(j["antipodal"]["r"] == 2);
  CHECK(j["quotient"]["equitable"] == true);

  const RunResult file = run_cli("verify " + data_path("graphs/doro.edges") + " --json");
  REQUIRE(file.exit_code == 0);
  CHECK(nlohmann::json::parse(file.out)["array"] == "{10,6,4;1,2,5}");
}

TEST_CASE("enumerate to stdout and to a file") {
  const RunResult r = run_cli("enumerate --k-min 3 --k-max 3 -D 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("{3,2;1,1}") != std::string::npos);
  // Every line parses as a record.
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("array"));
    CHECK(j.contains("report"));
    ++count;
  }
  CHECK(count >= 2);  // petersen and K_{3,3} at least

  const RunResult r1 = run_cli("enumerate --k-min 3 --k-max 4 -D 1..3 --out cli_enum_w1.jsonl");
  const RunResult r4 =
      run_cli("enumerate --k-min 3 --k-max 4 -D 1..3 --out cli_enum_w4.jsonl --workers 4");
  CHECK(r1.exit_code == 0);
  CHECK(r4.exit_code == 0);
  std::ifstream f1("cli_enum_w1.jsonl"), f4("cli_enum_w4.jsonl");
  std::stringstream s1, s4;
  s1 << f1.rdbuf();
  s4 << f4.rdbuf();
  CHECK(s1.str() == s4.str());
  CHECK_FALSE(s1.str().empty());
  std::remove("cli_enum_w1.jsonl");
  std::remove("cli_enum_w4.jsonl");
}

TEST_CASE("rational flags reject junk") {
  CHECK(run_cli("bounds --C 1/0").exit_code == 1);
  CHECK(run_cli("bounds --C abc").exit_code == 1);
}

TEST_CASE("enumerate accepts a job-config document") {
  {
    std::ofstream cfgf("cli_job.json");
    cfgf << R"({"k_min":3,"k_max":3,"d_min":2,"d_max":2,"ratio_kind":"none",)"
         << R"("ratio_cap":"0","spectral_checks":true,"absolute_bound":true,)"
         << R"("theorem2_caps":false,"theorem2_C":"1","workers":1})";
  }
  const RunResult r = run_cli("enumerate --config cli_job.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("{3,2;1,1}") != std::string::npos);
  std::remove("cli_job.json");
  CHECK(run_cli("enumerate --config /no/such/config.json").exit_code == 1);
}

TEST_CASE("DRG_CHECKPOINT_DIR supplies a default checkpoint location") {
  const std::string cmd =
      std::string("DRG_CHECKPOINT_DIR=. ") + DRG_CLI_PATH +
      " enumerate --k-min 3 --k-max 3 -D 2 --out cli_env_ckpt.jsonl 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  // A checkpoint named after the constraint hash must appear alongside.
  bool found = false;
  FILE* pipe = popen("ls enumerate-*.json 2>/dev/null", "r");
  char buf[256];
  if (pipe) {
    while (fgets(buf, sizeof(buf), pipe)) {
      found = true;
      std::string name(buf);
      while (!name.empty() && (name.back() == '\n' || name.back() == '\r')) name.pop_back();
      std::remove(name.c_str());
    }
    pclose(pipe);
  }
  CHECK(found);
  std::remove("cli_env_ckpt.jsonl");
}
