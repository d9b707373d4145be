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

#include "drg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <queue>
#include <sstream>
#include <thread>

namespace drg {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw PreconditionError("graph needs at least one vertex");
  adj_.resize(static_cast<size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw ParseError("duplicate edge in input");
    }
    edges_ += static_cast<int64_t>(nb.size());
  }
  edges_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::distances_from(int src) const {
  std::vector<int> dist(adj_.size(), -1);
  std::queue<int> q;
  dist[static_cast<size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj_[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (adj_.empty()) return false;
  const std::vector<int> dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw ParseError("edge line with a single endpoint: '" + line + "'");
    int extra;
    if (ls >> extra) throw ParseError("edge line with more than two fields: '" + line + "'");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (max_vertex < 0) throw ParseError("no edges in input");
  return Graph(max_vertex + 1, edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return parse_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
  if (!out) throw IoError("write failure: " + path);
}

// ---- generators ----

Graph hypercube(int n) {
  if (n < 1 || n > 20) throw PreconditionError("hypercube dimension must be in [1, 20]");
  const int size = 1 << n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < size; ++u) {
    for (int bit = 0; bit < n; ++bit) {
      const int v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(size, edges);
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < n; ++x) {
      cur[static_cast<size_t>(depth)] = x;
      rec(x + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) { ++count; ++i; ++j; }
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return count;
}

}  // namespace

Graph johnson(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw PreconditionError("johnson requires 1 <= k <= n");
  const auto verts = k_subsets(n, k);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (intersection_size(verts[i], verts[j]) == k - 1) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(verts.size()), edges);
}

Graph petersen() {
  // Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
  const auto verts = k_subsets(5, 2);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (intersection_size(verts[i], verts[j]) == 0) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(verts.size()), edges);
}

Graph icosahedron() {
  // Top apex 0, upper ring 1..5, lower ring 6..10, bottom apex 11.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i;
    const int un = 1 + (i + 1) % 5;
    const int l = 6 + i;
    const int ln = 6 + (i + 1) % 5;
    edges.emplace_back(0, u);
    edges.emplace_back(11, l);
    edges.emplace_back(u, un);
    edges.emplace_back(l, ln);
    edges.emplace_back(u, l);
    edges.emplace_back(u, ln);
  }
  return Graph(12, edges);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_multipartite(int parts, int part_size) {
  if (parts < 2 || part_size < 1) {
    throw PreconditionError("complete multipartite needs parts >= 2, part_size >= 1");
  }
  const int n = parts * part_size;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i / part_size != j / part_size) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  const int n = ng * nh;
  std::vector<std::pair<int, int>> edges;
  auto id = [nh](int a, int b) { return a * nh + b; };
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) {
      for (int a2 = a; a2 < ng; ++a2) {
        for (int b2 = 0; b2 < nh; ++b2) {
          if (a2 == a && b2 <= b) continue;
          const bool ga = (a == a2) || g.adjacent(a, a2);
          const bool hb = (b == b2) || h.adjacent(b, b2);
          if (ga && hb) edges.emplace_back(id(a, b), id(a2, b2));
        }
      }
    }
  }
  return Graph(n, edges);
}

Graph clique_extension(const Graph& g, int s) {
  if (s < 1) throw PreconditionError("clique extension needs s >= 1");
  return strong_product(g, complete(s));
}

Graph build_generator(const std::string& desc) {
  const size_t open = desc.find('(');
  if (open == std::string::npos || desc.back() != ')') {
    throw ParseError("generator must look like name(args): '" + desc + "'");
  }
  const std::string name = desc.substr(0, open);
  std::vector<int> args;
  std::string inner = desc.substr(open + 1, desc.size() - open - 2);
  if (!inner.empty()) {
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) args.push_back(std::stoi(tok));
  }
  auto want = [&](size_t n) {
    if (args.size() != n) {
      throw ParseError("generator " + name + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "hypercube") { want(1); return hypercube(args[0]); }
  if (name == "johnson") { want(2); return johnson(args[0], args[1]); }
  if (name == "petersen") { want(0); return petersen(); }
  if (name == "icosahedron") { want(0); return icosahedron(); }
  if (name == "cycle") { want(1); return cycle(args[0]); }
  if (name == "complete") { want(1); return complete(args[0]); }
  if (name == "complete_multipartite") { want(2); return complete_multipartite(args[0], args[1]); }
  throw ParseError("unknown generator: '" + name + "'");
}

DistancePartition distance_partition(const Graph& g, int x) {
  DistancePartition p;
  p.source = x;
  p.dist = g.distances_from(x);
  int ecc = 0;
  for (int d : p.dist) {
    if (d < 0) throw PreconditionError("distance partition requires a connected graph");
    ecc = std::max(ecc, d);
  }
  p.layers.assign(static_cast<size_t>(ecc) + 1, {});
  for (int v = 0; v < g.order(); ++v) {
    p.layers[static_cast<size_t>(p.dist[static_cast<size_t>(v)])].push_back(v);
  }
  return p;
}

namespace {

struct SourceCheck {
  bool ok = true;
  CertificationWitness witness;
};

// Counts neighbors of every y one layer closer / farther from x and compares
// against the candidate arrays.
SourceCheck check_source(const Graph& g, int x, const std::vector<int64_t>& bs,
                         const std::vector<int64_t>& cs, int D) {
  const std::vector<int> dist = g.distances_from(x);
  for (int y = 0; y < g.order(); ++y) {
    const int i = dist[static_cast<size_t>(y)];
    if (i > D) {
      return {false, CertificationWitness{x, y, i, 'b', 0, 1}};
    }
    int64_t toward = 0, away = 0;
    for (int w : g.neighbors(y)) {
      const int dw = dist[static_cast<size_t>(w)];
      if (dw == i - 1) ++toward;
      else if (dw == i + 1) ++away;
    }
    if (i >= 1 && toward != cs[static_cast<size_t>(i)]) {
      return {false, CertificationWitness{x, y, i, 'c', cs[static_cast<size_t>(i)], toward}};
    }
    if (away != bs[static_cast<size_t>(i)]) {
      return {false, CertificationWitness{x, y, i, 'b', bs[static_cast<size_t>(i)], away}};
    }
  }
  return {};
}

}  // namespace

Certification certify(const Graph& g, int workers) {
  if (!g.connected()) throw PreconditionError("Disconnected: certify requires a connected graph");
  const int n = g.order();

  // Candidate arrays from vertex 0, then every source must reproduce them.
  const DistancePartition base = distance_partition(g, 0);
  const int D = base.eccentricity();
  std::vector<int64_t> bs(static_cast<size_t>(D) + 1, 0), cs(static_cast<size_t>(D) + 1, 0);
  for (int i = 0; i <= D; ++i) {
    const int y = base.layers[static_cast<size_t>(i)][0];
    for (int w : g.neighbors(y)) {
      const int dw = base.dist[static_cast<size_t>(w)];
      if (dw == i - 1) ++cs[static_cast<size_t>(i)];
      else if (dw == i + 1) ++bs[static_cast<size_t>(i)];
    }
  }

  if (workers <= 0) {
    workers = n >= 512 ? static_cast<int>(std::thread::hardware_concurrency()) : 1;
    if (workers < 1) workers = 1;
  }
  std::vector<SourceCheck> results(static_cast<size_t>(n));
  if (workers == 1) {
    for (int x = 0; x < n; ++x) {
      results[static_cast<size_t>(x)] = check_source(g, x, bs, cs, D);
      if (!results[static_cast<size_t>(x)].ok) break;
    }
  } else {
    std::vector<std::future<void>> futs;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int lo = w * chunk, hi = std::min(n, lo + chunk);
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (int x = lo; x < hi; ++x) results[static_cast<size_t>(x)] = check_source(g, x, bs, cs, D);
      }));
    }
    for (auto& f : futs) f.get();
  }
  for (int x = 0; x < n; ++x) {
    if (!results[static_cast<size_t>(x)].ok) {
      return Certification{false, std::nullopt, results[static_cast<size_t>(x)].witness};
    }
  }

  std::vector<int64_t> b(bs.begin(), bs.end() - 1);
  std::vector<int64_t> c(cs.begin() + 1, cs.end());
  return Certification{true, make_array(std::move(b), std::move(c)), std::nullopt};
}

TerwilligerScan terwilliger_scan(const Graph& g) {
  const int n = g.order();
  int64_t full = 0;
  for (int v = 0; v < n; ++v) full += (g.degree(v) == n - 1) ? 1 : 0;
  if (full == n) throw PreconditionError("CompleteGraph: terwilliger scan requires a non-complete graph");
  if (!g.connected()) throw PreconditionError("terwilliger scan requires a connected graph");

  TerwilligerScan scan;
  scan.is_terwilliger = true;
  std::optional<int64_t> mu;
  for (int u = 0; u < n; ++u) {
    const std::vector<int> dist = g.distances_from(u);
    for (int v = u + 1; v < n; ++v) {
      if (dist[static_cast<size_t>(v)] != 2) continue;
      std::vector<int> common;
      for (int w : g.neighbors(v)) {
        if (g.adjacent(u, w)) common.push_back(w);
      }
      bool clique = true;
      for (size_t i = 0; i < common.size() && clique; ++i) {
        for (size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            clique = false;
            scan.has_quadrangle = true;  // u, common[i], v, common[j] induce C4
            break;
          }
        }
      }
      if (!clique) scan.is_terwilliger = false;
      if (!mu) mu = static_cast<int64_t>(common.size());
      else if (*mu != static_cast<int64_t>(common.size())) scan.is_terwilliger = false;
    }
  }
  if (scan.is_terwilliger) scan.mu = mu;
  return scan;
}

AntipodalResult antipodal_check(const Graph& g, const Certification& cert) {
  if (!cert.is_drg) throw PreconditionError("antipodal check needs a certified DRG");
  const int D = cert.array->diameter();
  if (D <= 1) throw PreconditionError("antipodal check needs diameter > 1");
  const int n = g.order();
  std::vector<std::vector<int>> cls(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    const std::vector<int> dist = g.distances_from(x);
    cls[static_cast<size_t>(x)].push_back(x);
    for (int y = 0; y < n; ++y) {
      if (y != x && dist[static_cast<size_t>(y)] == D) cls[static_cast<size_t>(x)].push_back(y);
    }
    std::sort(cls[static_cast<size_t>(x)].begin(), cls[static_cast<size_t>(x)].end());
  }
  AntipodalResult res;
  res.is_antipodal = true;
  for (int x = 0; x < n && res.is_antipodal; ++x) {
    for (int y : cls[static_cast<size_t>(x)]) {
      if (cls[static_cast<size_t>(y)] != cls[static_cast<size_t>(x)]) {
        res.is_antipodal = false;
        break;
      }
    }
  }
  if (res.is_antipodal) {
    const size_t r = cls[0].size();
    bool same = true;
    for (int x = 0; x < n; ++x) same = same && cls[static_cast<size_t>(x)].size() == r;
    if (same) res.r = static_cast<int64_t>(r);
  }
  return res;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::map<int, int> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (int w : g.neighbors(verts[i])) {
      auto it = index.find(w);
      if (it != index.end() && it->second > static_cast<int>(i)) {
        edges.emplace_back(static_cast<int>(i), it->second);
      }
    }
  }
  return InducedSubgraph{Graph(static_cast<int>(verts.size()), edges), std::move(verts)};
}

InducedSubgraph local_graph(const Graph& g, int x) {
  return induced_subgraph(g, g.neighbors(x));
}

Graph reduced_graph(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> closed(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    closed[static_cast<size_t>(v)] = g.neighbors(v);
    closed[static_cast<size_t>(v)].push_back(v);
    std::sort(closed[static_cast<size_t>(v)].begin(), closed[static_cast<size_t>(v)].end());
  }
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < static_cast<int>(reps.size()); ++r) {
      if (closed[static_cast<size_t>(v)] == closed[static_cast<size_t>(reps[static_cast<size_t>(r)])]) {
        cls[static_cast<size_t>(v)] = r;
        break;
      }
    }
    if (cls[static_cast<size_t>(v)] < 0) {
      cls[static_cast<size_t>(v)] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) {
    const int cu = cls[static_cast<size_t>(u)], cv = cls[static_cast<size_t>(v)];
    if (cu != cv) edges.emplace_back(std::min(cu, cv), std::max(cu, cv));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(static_cast<int>(reps.size()), edges);
}

std::vector<int> geodesic(const Graph& g, const Certification& cert, int x, int y) {
  if (!cert.is_drg) throw PreconditionError("geodesic needs a certified DRG");
  const std::vector<int> dist = g.distances_from(x);
  const int t = dist[static_cast<size_t>(y)];
  if (t >= 1 && cert.array->c_at(t) > 1) {
    throw PreconditionError("NonUniqueGeodesic: c_" + std::to_string(t) + " = " +
                            std::to_string(cert.array->c_at(t)) + " > 1");
  }
  std::vector<int> path(static_cast<size_t>(t) + 1);
  path[static_cast<size_t>(t)] = y;
  int cur = y;
  for (int i = t - 1; i >= 0; --i) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (dist[static_cast<size_t>(w)] == i) {
        next = w;
        break;  // c_i = 1, so the step down is unique
      }
    }
    path[static_cast<size_t>(i)] = next;
    cur = next;
  }
  return path;
}

InducedSubgraph delta_subgraph(const Graph& g, const Certification& cert, int u, int v) {
  if (!cert.is_drg) throw PreconditionError("delta subgraph needs a certified DRG");
  const std::vector<int> dist = g.distances_from(u);
  const int s = dist[static_cast<size_t>(v)];
  if (s < 1) throw PreconditionError("delta subgraph needs distinct vertices");
  if (cert.array->c_at(s) > 1) {
    throw PreconditionError("NonUniqueGeodesic: c_" + std::to_string(s) + " > 1");
  }
  // Component of v in the subgraph induced on Gamma_s(u).
  std::vector<int> sphere;
  for (int w = 0; w < g.order(); ++w) {
    if (dist[static_cast<size_t>(w)] == s) sphere.push_back(w);
  }
  const InducedSubgraph psi = induced_subgraph(g, sphere);
  int v_local = -1;
  for (size_t i = 0; i < psi.vertices.size(); ++i) {
    if (psi.vertices[i] == v) v_local = static_cast<int>(i);
  }
  const std::vector<int> comp_dist = psi.graph.distances_from(v_local);
  std::vector<int> members;
  for (size_t i = 0; i < psi.vertices.size(); ++i) {
    if (comp_dist[i] >= 0) members.push_back(psi.vertices[i]);
  }
  std::vector<int> verts;
  for (int x : members) {
    const std::vector<int> p = geodesic(g, cert, u, x);
    verts.insert(verts.end(), p.begin(), p.end());
  }
  return induced_subgraph(g, verts);
}

QuotientCheck distance_partition_quotient(const Graph& g, const Certification& cert, int x) {
  if (!cert.is_drg) throw PreconditionError("quotient check needs a certified DRG");
  const IntersectionArray& arr = *cert.array;
  const int D = arr.diameter();
  const DistancePartition part = distance_partition(g, x);
  if (part.eccentricity() != D) {
    throw Error("NotEquitable: eccentricity mismatch at vertex " + std::to_string(x));
  }
  QuotientCheck qc;
  qc.q.assign(static_cast<size_t>(D) + 1, std::vector<int64_t>(static_cast<size_t>(D) + 1, 0));
  qc.equitable = true;
  for (int i = 0; i <= D && qc.equitable; ++i) {
    for (int y : part.layers[static_cast<size_t>(i)]) {
      int64_t toward = 0, same = 0, away = 0;
      for (int w : g.neighbors(y)) {
        const int dw = part.dist[static_cast<size_t>(w)];
        if (dw == i - 1) ++toward;
        else if (dw == i) ++same;
        else ++away;
      }
      if (toward != arr.c_at(i) || same != arr.a_at(i) || away != arr.b_at(i)) {
        qc.equitable = false;
        break;
      }
    }
    if (i >= 1) qc.q[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = arr.c_at(i);
    qc.q[static_cast<size_t>(i)][static_cast<size_t>(i)] = arr.a_at(i);
    if (i < D) qc.q[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = arr.b_at(i);
  }
  if (!qc.equitable) throw Error("NotEquitable: distance partition from " + std::to_string(x));
  qc.q_eigenvalues = eigenvalues(quotient_matrix(arr));
  const std::vector<double> adj = adjacency_eigenvalues(g);
  qc.eigenvalues_in_spectrum = true;
  for (double l : qc.q_eigenvalues) {
    bool found = false;
    for (double a : adj) {
      if (std::abs(a - l) < 1e-7 * std::max(1.0, std::abs(l))) {
        found = true;
        break;
      }
    }
    qc.eigenvalues_in_spectrum = qc.eigenvalues_in_spectrum && found;
  }
  return qc;
}

DelsarteBound delsarte_clique_size(const IntersectionArray& arr, const Spectrum& sp) {
  const double theta_min = sp.theta.back();
  DelsarteBound b;
  b.size = 1.0 - static_cast<double>(arr.valency()) / theta_min;
  b.near_integer = std::abs(b.size - std::nearbyint(b.size)) < 1e-8;
  return b;
}

namespace {

// Branch and bound on a degeneracy order; fine for fixture-sized graphs.
void clique_extend(const Graph& g, std::vector<int>& candidates, int depth, int& best) {
  if (depth + static_cast<int>(candidates.size()) <= best) return;
  if (candidates.empty()) {
    best = std::max(best, depth);
    return;
  }
  while (!candidates.empty()) {
    if (depth + static_cast<int>(candidates.size()) <= best) return;
    const int v = candidates.back();
    candidates.pop_back();
    std::vector<int> next;
    for (int w : candidates) {
      if (g.adjacent(v, w)) next.push_back(w);
    }
    clique_extend(g, next, depth + 1, best);
  }
}

}  // namespace

int clique_scan(const Graph& g) {
  const int n = g.order();
  // Degeneracy-style order: repeatedly remove a minimum-degree vertex.
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<bool> removed(static_cast<size_t>(n), false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[static_cast<size_t>(v)] && (best < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)])) {
        best = v;
      }
    }
    removed[static_cast<size_t>(best)] = true;
    order.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
  }
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  int best = 0;
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<size_t>(i)];
    std::vector<int> candidates;
    for (int w : g.neighbors(v)) {
      if (pos[static_cast<size_t>(w)] > i) candidates.push_back(w);
    }
    clique_extend(g, candidates, 1, best);
  }
  return best;
}

std::vector<double> adjacency_eigenvalues(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw PreconditionError("adjacency eigendecomposition capped at order " +
                            std::to_string(max_order));
  }
  std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) at(u, v) = 1.0;
  }
  // Cyclic Jacobi sweeps to off-diagonal norm below 1e-12 * n.
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-24 * n * n) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double tau = (aqq - app) / (2 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double cph = 1.0 / std::sqrt(1 + t * t);
        const double sph = t * cph;
        for (int i = 0; i < n; ++i) {
          const double aip = at(i, p), aiq = at(i, q);
          at(i, p) = cph * aip - sph * aiq;
          at(i, q) = sph * aip + cph * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = at(p, i), aqi = at(q, i);
          at(p, i) = cph * api - sph * aqi;
          at(q, i) = sph * api + cph * aqi;
        }
      }
    }
  }
  std::vector<double> eigs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) eigs[static_cast<size_t>(i)] = at(i, i);
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& eigs,
                                                      double tol) {
  std::vector<std::pair<double, int>> groups;
  for (double e : eigs) {
    if (!groups.empty() && std::abs(groups.back().first - e) <= tol) {
      // Keep the running mean so grouping is order-stable.
      auto& [val, count] = groups.back();
      val = (val * count + e) / (count + 1);
      ++count;
    } else {
      groups.emplace_back(e, 1);
    }
  }
  return groups;
}

}  // namespace drg
