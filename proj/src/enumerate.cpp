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

#include "drg/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "drg/json_io.hpp"

namespace drg {

void EnumerationConstraints::validate() const {
  if (k_min < 3) throw PreconditionError("enumeration requires k_min >= 3");
  if (d_min < 1) throw PreconditionError("enumeration requires d_min >= 1");
  if (workers < 1) throw PreconditionError("enumeration requires workers >= 1");
}

void EnumerationCounts::merge(const EnumerationCounts& other) {
  visited += other.visited;
  emitted += other.emitted;
  for (const auto& [rule, n] : other.pruned) pruned[rule] += n;
}

namespace {

const char* ratio_kind_name(EnumerationConstraints::RatioKind kind) {
  switch (kind) {
    case EnumerationConstraints::RatioKind::K2OverK: return "k2_over_k";
    case EnumerationConstraints::RatioKind::B2OverC2: return "b2_over_c2";
    default: return "none";
  }
}

ojson constraints_json(const EnumerationConstraints& c) {
  // Canonical form for hashing; worker count deliberately excluded.
  ojson j;
  j["k_min"] = c.k_min;
  j["k_max"] = c.k_max;
  j["d_min"] = c.d_min;
  j["d_max"] = c.d_max;
  j["ratio_kind"] = ratio_kind_name(c.ratio_kind);
  j["ratio_cap"] = to_string(c.ratio_cap);
  j["spectral_checks"] = c.spectral_checks;
  j["absolute_bound"] = c.absolute_bound;
  j["theorem2_caps"] = c.theorem2_caps;
  j["theorem2_C"] = to_string(c.theorem2_C);
  return j;
}

struct Task {
  int64_t k;
  int D;
  int64_t b1;  // unused when D == 1
};

std::vector<Task> make_tasks(const EnumerationConstraints& c) {
  std::vector<Task> tasks;
  for (int64_t k = c.k_min; k <= c.k_max; ++k) {
    for (int D = c.d_min; D <= c.d_max; ++D) {
      if (D == 1) {
        tasks.push_back({k, 1, 0});
      } else {
        for (int64_t b1 = 1; b1 <= k - 1; ++b1) tasks.push_back({k, D, b1});
      }
    }
  }
  return tasks;
}

struct TaskOutput {
  std::vector<std::pair<IntersectionArray, FeasibilityReport>> emitted;
  EnumerationCounts counts;
};

class SubtreeSearch {
 public:
  SubtreeSearch(const EnumerationConstraints& cons, TaskOutput& out)
      : cons_(cons), out_(out) {}

  void run(const Task& task) {
    k_ = task.k;
    D_ = task.D;
    b_.assign(1, k_);
    c_.assign(1, 1);
    kseq_.assign(1, 1);
    kseq_.push_back(k_);  // k_1 = k
    if (D_ == 1) {
      complete();
      return;
    }
    b_.push_back(task.b1);
    extend(2);
  }

 private:
  void prune(const char* rule) { ++out_.counts.pruned[rule]; }

  // Chooses c_i (and b_i when i < D); positions run i = 2..D.
  void extend(int i) {
    const int64_t c_prev = c_.back();
    if (i == D_) {
      // Final column: c_D in [c_{D-1}, k]; b_D = 0.
      for (int64_t cd = c_prev; cd <= k_; ++cd) {
        ++out_.counts.visited;
        const int64_t numer = kseq_.back() * b_.back();
        if (numer % cd != 0) {
          prune("k-integral");
          continue;
        }
        if (ratio_filter(i, cd)) continue;
        c_.push_back(cd);
        kseq_.push_back(numer / cd);
        complete();
        kseq_.pop_back();
        c_.pop_back();
      }
      return;
    }
    // c_i <= b_j for chosen j <= D - i (b descending: binding at the largest
    // available index), and b_i >= 1 with a_i >= 0 forces c_i <= k - 1.
    const int64_t c_hi = std::min<int64_t>(k_ - 1, b_[static_cast<size_t>(std::min(i - 1, D_ - i))]);
    for (int64_t ci = c_prev; ci <= c_hi; ++ci) {
      ++out_.counts.visited;
      const int64_t numer = kseq_.back() * b_.back();
      if (numer % ci != 0) {
        prune("k-integral");
        continue;
      }
      if (ratio_filter(i, ci)) continue;
      c_.push_back(ci);
      kseq_.push_back(numer / ci);
      // b_i >= c_j for chosen j <= D - i (c ascending: binding at the
      // largest chosen index; c_ stores c_1 at slot 0), b_i <= b_{i-1},
      // a_i >= 0.
      const int64_t b_lo = c_[static_cast<size_t>(std::min(i, D_ - i) - 1)];
      const int64_t b_hi = std::min(b_[static_cast<size_t>(i - 1)], k_ - ci);
      for (int64_t bi = b_lo; bi <= b_hi; ++bi) {
        ++out_.counts.visited;
        b_.push_back(bi);
        if (!b2_ratio_filter(i)) extend(i + 1);
        b_.pop_back();
      }
      kseq_.pop_back();
      c_.pop_back();
    }
  }

  // k2/k = b1/c2 is known once c_2 is chosen; returns true when pruned.
  bool ratio_filter(int i, int64_t ci) {
    if (cons_.ratio_kind != EnumerationConstraints::RatioKind::K2OverK || i != 2) return false;
    if (Rat(b_[1], ci) > cons_.ratio_cap) {
      prune("ratio-cap");
      return true;
    }
    return false;
  }

  // b2/c2 is known once b_2 is chosen; returns true when pruned.
  bool b2_ratio_filter(int i) {
    if (cons_.ratio_kind != EnumerationConstraints::RatioKind::B2OverC2 || i != 2) return false;
    if (Rat(b_[2], c_[1]) > cons_.ratio_cap) {
      prune("ratio-cap");
      return true;
    }
    return false;
  }

  void complete() {
    IntersectionArray arr{b_, c_};
    AnalyzeOptions aopt;
    aopt.run_spectral = cons_.spectral_checks;
    aopt.run_theorem2 = cons_.theorem2_caps;
    if (cons_.theorem2_caps) aopt.C = cons_.theorem2_C;

    int64_t m1 = -1;
    if (cons_.spectral_checks) {
      const SpectralGateResult gate = spectral_feasibility_gate(arr, aopt.spectral);
      if (!gate.ok()) {
        switch (gate.issue->kind) {
          case SpectrumIssueKind::NonIntegralMultiplicity: prune("spectral.m-integral"); break;
          case SpectrumIssueKind::NonPositiveMultiplicity: prune("spectral.m-positive"); break;
          default: prune("spectral.m-sum"); break;
        }
        return;
      }
      m1 = gate.m1;
    }
    if (cons_.absolute_bound && m1 >= 2) {
      if (Rat(k_) > Rat((m1 + 2) * (m1 - 1), 2)) {
        prune("absolute-bound");
        return;
      }
    }

    FeasibilityReport rep = analyze(arr, aopt);
    if (cons_.absolute_bound && !rep.find("ABS.valency")) {
      if (m1 >= 2) {
        rep.add(make_verdict("ABS.valency", RuleStatus::Pass,
                             {{"k", std::to_string(k_)},
                              {"m1", std::to_string(m1)},
                              {"(m1+2)(m1-1)/2", to_string(Rat((m1 + 2) * (m1 - 1), 2))}}));
      } else {
        rep.add(make_verdict("ABS.valency", RuleStatus::NotApplicable));
      }
    }
    // With the Theorem 2 caps off, emission depends only on the listed
    // filters; a dichotomy contradiction stays in the report as a witness.
    if (cons_.theorem2_caps && !rep.overall_pass) {
      prune("theorem2");
      return;
    }
    ++out_.counts.emitted;
    out_.emitted.emplace_back(std::move(arr), std::move(rep));
  }

  const EnumerationConstraints& cons_;
  TaskOutput& out_;
  int64_t k_ = 0;
  int D_ = 0;
  std::vector<int64_t> b_;
  std::vector<int64_t> c_;
  std::vector<int64_t> kseq_;
};

void run_task(const EnumerationConstraints& cons, const Task& task, TaskOutput& out) {
  SubtreeSearch search(cons, out);
  search.run(task);
}

}  // namespace

std::string constraints_to_json(const EnumerationConstraints& cons) {
  ojson j = constraints_json(cons);
  j["workers"] = cons.workers;
  return j.dump(2);
}

EnumerationConstraints constraints_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid job config: ") + e.what());
  }
  EnumerationConstraints cons;
  cons.k_min = j.value("k_min", cons.k_min);
  cons.k_max = j.value("k_max", cons.k_max);
  cons.d_min = j.value("d_min", cons.d_min);
  cons.d_max = j.value("d_max", cons.d_max);
  const std::string kind = j.value("ratio_kind", "none");
  cons.ratio_kind = kind == "k2_over_k" ? EnumerationConstraints::RatioKind::K2OverK
                    : kind == "b2_over_c2" ? EnumerationConstraints::RatioKind::B2OverC2
                                           : EnumerationConstraints::RatioKind::None;
  if (j.contains("ratio_cap")) cons.ratio_cap = parse_rational(j["ratio_cap"].get<std::string>());
  cons.spectral_checks = j.value("spectral_checks", cons.spectral_checks);
  cons.absolute_bound = j.value("absolute_bound", cons.absolute_bound);
  cons.theorem2_caps = j.value("theorem2_caps", cons.theorem2_caps);
  if (j.contains("theorem2_C")) cons.theorem2_C = parse_rational(j["theorem2_C"].get<std::string>());
  cons.workers = j.value("workers", cons.workers);
  return cons;
}

EnumerationConstraints load_job_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open job config: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return constraints_from_json(os.str());
}

std::string constraints_hash(const EnumerationConstraints& cons) {
  const std::string s = constraints_json(cons).dump();
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EnumerationCounts enumerate_arrays(const EnumerationConstraints& cons, const EmitFn& emit) {
  cons.validate();
  const std::vector<Task> tasks = make_tasks(cons);
  EnumerationCounts counts;
  const int workers = std::max(1, cons.workers);
  for (size_t block = 0; block < tasks.size(); block += static_cast<size_t>(workers)) {
    const size_t hi = std::min(tasks.size(), block + static_cast<size_t>(workers));
    std::vector<TaskOutput> outputs(hi - block);
    if (workers == 1 || hi - block == 1) {
      run_task(cons, tasks[block], outputs[0]);
    } else {
      std::vector<std::thread> pool;
      for (size_t i = block; i < hi; ++i) {
        pool.emplace_back([&, i] { run_task(cons, tasks[i], outputs[i - block]); });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& out : outputs) {
      counts.merge(out.counts);
      if (emit) {
        for (auto& [arr, rep] : out.emitted) emit(arr, rep);
      }
    }
  }
  return counts;
}

namespace {

struct CheckpointState {
  std::string hash;
  int64_t tasks_done = 0;
  int64_t bytes = 0;
  EnumerationCounts counts;
};

void write_checkpoint(const std::string& path, const CheckpointState& st) {
  ojson j;
  j["version"] = 1;
  j["constraints_hash"] = st.hash;
  j["tasks_done"] = st.tasks_done;
  j["bytes"] = st.bytes;
  ojson cj;
  cj["visited"] = st.counts.visited;
  cj["emitted"] = st.counts.emitted;
  ojson pr;
  for (const auto& [rule, n] : st.counts.pruned) pr[rule] = n;
  cj["pruned"] = std::move(pr);
  j["counts"] = std::move(cj);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint: " + tmp);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

CheckpointState read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open checkpoint: " + path);
  ojson j;
  in >> j;
  CheckpointState st;
  st.hash = j.at("constraints_hash").get<std::string>();
  st.tasks_done = j.at("tasks_done").get<int64_t>();
  st.bytes = j.at("bytes").get<int64_t>();
  st.counts.visited = j.at("counts").at("visited").get<int64_t>();
  st.counts.emitted = j.at("counts").at("emitted").get<int64_t>();
  for (const auto& [rule, n] : j.at("counts").at("pruned").items()) {
    st.counts.pruned[rule] = n.get<int64_t>();
  }
  return st;
}

}  // namespace

JobResult run_enumeration_job(const EnumerationConstraints& cons, const std::string& out_path,
                              const std::string& checkpoint_path, bool resume,
                              std::optional<int64_t> stop_after_tasks) {
  cons.validate();
  const std::vector<Task> tasks = make_tasks(cons);
  CheckpointState st;
  st.hash = constraints_hash(cons);

  if (resume) {
    const CheckpointState prev = read_checkpoint(checkpoint_path);
    if (prev.hash != st.hash) {
      throw IoError("HashMismatch: checkpoint was written for different constraints");
    }
    if (!std::filesystem::exists(out_path) ||
        std::filesystem::file_size(out_path) < static_cast<uintmax_t>(prev.bytes)) {
      throw IoError("output file shorter than checkpointed offset: " + out_path);
    }
    std::filesystem::resize_file(out_path, static_cast<uintmax_t>(prev.bytes));
    st = prev;
  } else {
    std::ofstream trunc(out_path, std::ios::trunc);
    if (!trunc) throw IoError("cannot write output: " + out_path);
  }

  std::ofstream out(out_path, std::ios::app);
  if (!out) throw IoError("cannot append to output: " + out_path);

  const int workers = std::max(1, cons.workers);
  auto last_ckpt = std::chrono::steady_clock::now();
  int64_t visited_since_ckpt = 0;
  const auto maybe_checkpoint = [&](bool force) {
    if (checkpoint_path.empty()) return;
    const auto now = std::chrono::steady_clock::now();
    if (force || visited_since_ckpt >= 1000000 ||
        std::chrono::duration_cast<std::chrono::seconds>(now - last_ckpt).count() >= 30) {
      out.flush();
      write_checkpoint(checkpoint_path, st);
      last_ckpt = now;
      visited_since_ckpt = 0;
    }
  };

  bool complete = true;
  for (size_t block = static_cast<size_t>(st.tasks_done); block < tasks.size();
       block += static_cast<size_t>(workers)) {
    if (stop_after_tasks && st.tasks_done >= *stop_after_tasks) {
      complete = false;
      break;
    }
    const size_t hi = std::min(tasks.size(), block + static_cast<size_t>(workers));
    std::vector<TaskOutput> outputs(hi - block);
    if (hi - block == 1) {
      run_task(cons, tasks[block], outputs[0]);
    } else {
      std::vector<std::thread> pool;
      for (size_t i = block; i < hi; ++i) {
        pool.emplace_back([&, i] { run_task(cons, tasks[i], outputs[i - block]); });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& output : outputs) {
      st.counts.merge(output.counts);
      visited_since_ckpt += output.counts.visited;
      for (auto& [arr, rep] : output.emitted) {
        const std::string line = render_enumeration_record(arr, rep).dump() + "\n";
        out << line;
        st.bytes += static_cast<int64_t>(line.size());
      }
      ++st.tasks_done;
      if (stop_after_tasks && st.tasks_done >= *stop_after_tasks) break;
    }
    maybe_checkpoint(false);
  }
  out.flush();
  if (!out) throw IoError("write failure: " + out_path);
  maybe_checkpoint(true);
  return JobResult{st.counts, complete};
}

CensusSummary finiteness_census(const Rat& C, int d_fixed, int64_t k_max, const EmitFn& emit) {
  CensusSummary summary;
  if (k_max < 3 || d_fixed < 1) return summary;

  EnumerationConstraints cons;
  cons.k_min = 3;
  cons.k_max = k_max;
  cons.d_min = d_fixed;
  cons.d_max = d_fixed;
  cons.ratio_kind = EnumerationConstraints::RatioKind::K2OverK;
  cons.ratio_cap = C;
  cons.spectral_checks = true;
  cons.absolute_bound = true;
  // Theorem 2 caps only apply in their stated scope.
  cons.theorem2_caps = d_fixed >= 6;
  cons.theorem2_C = C;
  summary.caps_enabled = cons.theorem2_caps;

  std::map<int64_t, int64_t> per_k;
  summary.counts = enumerate_arrays(cons, [&](const IntersectionArray& arr,
                                              const FeasibilityReport& rep) {
    ++per_k[arr.valency()];
    if (emit) emit(arr, rep);
  });
  for (int64_t k = 3; k <= k_max; ++k) summary.per_valency.emplace_back(k, per_k[k]);
  for (const auto& [k, n] : per_k) summary.total += n;
  return summary;
}

}  // namespace drg
