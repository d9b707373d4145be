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
//
// Generates the two edge-list fixtures that are not reachable through the
// simple generators:
//
//   conway_smith.edges  - the 63-vertex graph with array {10,6,4,1;1,2,6,10},
//                         built as a connected Z3 voltage cover of the Kneser
//                         graph K(7,2). Triangles downstairs must lift, which
//                         pins the voltage assignment to a small GF(3)
//                         solution space; every non-gauge class is certified
//                         and the one matching the target array is kept.
//
//   doro.edges          - the 65-vertex graph with array {10,6,4;1,2,5},
//                         built from the PSL(2,25)-orbit of the F5 subline of
//                         PG(1,25): self-paired suborbits of the subline
//                         stabilizer give orbital graphs, and the valency-10
//                         one certifies to the target array.
//
// Both outputs are accepted only after drg::certify reproduces the expected
// array, so no adjacency data enters the repository untested.

#include <algorithm>
#include <array>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "drg/graph.hpp"

namespace {

using drg::Graph;

// ---------------------------------------------------------------------------
// GF(3) linear algebra, dense, small.
// ---------------------------------------------------------------------------

using Row = std::vector<uint8_t>;

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<int> echelon(std::vector<Row>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const int inv = rows[r][c] == 1 ? 1 : 2;  // inverse in GF(3)
    for (size_t j = c; j < cols; ++j) rows[r][j] = static_cast<uint8_t>(mod3(rows[r][j] * inv));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c] != 0) {
        const int f = rows[i][c];
        for (size_t j = c; j < cols; ++j) {
          rows[i][j] = static_cast<uint8_t>(mod3(rows[i][j] - f * rows[r][j]));
        }
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

// Nullspace basis of the matrix (rows x cols).
std::vector<Row> nullspace(std::vector<Row> rows, size_t cols) {
  const std::vector<int> pivots = echelon(rows);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Row> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Row v(cols, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      const int p = pivots[r];
      // row: x_p + sum_{j>p} a_j x_j = 0  =>  x_p = -a_freecol
      v[static_cast<size_t>(p)] = static_cast<uint8_t>(mod3(-rows[r][free_col]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduces v against an echelon basis; returns the remainder.
Row reduce_against(const std::vector<Row>& basis, const std::vector<int>& pivots, Row v) {
  for (size_t r = 0; r < basis.size(); ++r) {
    const int p = pivots[r];
    if (v[static_cast<size_t>(p)] != 0) {
      const int f = v[static_cast<size_t>(p)];
      for (size_t j = 0; j < v.size(); ++j) {
        v[j] = static_cast<uint8_t>(mod3(v[j] - f * basis[r][j]));
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Conway-Smith: Z3 voltage cover of Kneser(7,2).
// ---------------------------------------------------------------------------

Graph build_cover(const std::vector<std::pair<int, int>>& edges, const Row& voltage, int n_base) {
  std::vector<std::pair<int, int>> cover_edges;
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    for (int i = 0; i < 3; ++i) {
      const int j = mod3(i + voltage[e]);
      cover_edges.emplace_back(u * 3 + i, v * 3 + j);
    }
  }
  return Graph(n_base * 3, cover_edges);
}

Graph make_conway_smith() {
  // Kneser(7,2): vertices are 2-subsets of {0..6}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) pairs.emplace_back(a, b);
  const int n = static_cast<int>(pairs.size());  // 21
  auto disjoint = [&](int i, int j) {
    return pairs[static_cast<size_t>(i)].first != pairs[static_cast<size_t>(j)].first &&
           pairs[static_cast<size_t>(i)].first != pairs[static_cast<size_t>(j)].second &&
           pairs[static_cast<size_t>(i)].second != pairs[static_cast<size_t>(j)].first &&
           pairs[static_cast<size_t>(i)].second != pairs[static_cast<size_t>(j)].second;
  };
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (disjoint(i, j)) {
        edge_index[{i, j}] = static_cast<int>(edges.size());
        edges.emplace_back(i, j);
      }
    }
  }
  const size_t m = edges.size();  // 105

  // Oriented voltage of edge (u < v): x_e = f(u -> v). Every downstairs
  // triangle must have net voltage zero for the cover to keep a_1 = 3.
  std::vector<Row> triangle_rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!disjoint(i, j)) continue;
      for (int l = j + 1; l < n; ++l) {
        if (disjoint(i, l) && disjoint(j, l)) {
          Row row(m, 0);
          row[static_cast<size_t>(edge_index[{i, j}])] = 1;
          row[static_cast<size_t>(edge_index[{j, l}])] = 1;
          row[static_cast<size_t>(edge_index[{i, l}])] = 2;  // -f(i->l)
          triangle_rows.push_back(std::move(row));
        }
      }
    }
  }
  std::cout << "conway-smith: " << m << " edges, " << triangle_rows.size() << " triangles\n";

  std::vector<Row> solutions = nullspace(std::move(triangle_rows), m);
  std::cout << "conway-smith: solution space dimension " << solutions.size() << "\n";

  // Gauge subspace: potentials f(u->v) = g(u) - g(v).
  std::vector<Row> gauge;
  for (int vtx = 1; vtx < n; ++vtx) {
    Row g(m, 0);
    for (size_t e = 0; e < m; ++e) {
      if (edges[e].first == vtx) g[e] = 1;
      if (edges[e].second == vtx) g[e] = 2;
    }
    gauge.push_back(std::move(g));
  }
  std::vector<int> gauge_pivots = echelon(gauge);

  // Complement basis of gauge inside the solution space.
  std::vector<Row> complement;
  std::vector<int> comp_pivots;
  for (const Row& s : solutions) {
    Row r = reduce_against(gauge, gauge_pivots, s);
    r = reduce_against(complement, comp_pivots, std::move(r));
    const auto nz = std::find_if(r.begin(), r.end(), [](uint8_t x) { return x != 0; });
    if (nz != r.end()) {
      const int p = static_cast<int>(nz - r.begin());
      const int inv = *nz == 1 ? 1 : 2;
      for (auto& x : r) x = static_cast<uint8_t>(mod3(x * inv));
      complement.push_back(std::move(r));
      comp_pivots.push_back(p);
    }
  }
  const size_t d = complement.size();
  std::cout << "conway-smith: " << d << " non-gauge dimensions\n";
  if (d == 0 || d > 8) throw drg::Error("unexpected voltage solution space");

  const drg::IntersectionArray target =
      drg::parse_array("{10,6,4,1;1,2,6,10}");
  size_t combos = 1;
  for (size_t i = 0; i < d; ++i) combos *= 3;
  for (size_t code = 1; code < combos; ++code) {
    Row voltage(m, 0);
    size_t rem = code;
    for (size_t i = 0; i < d; ++i) {
      const int coeff = static_cast<int>(rem % 3);
      rem /= 3;
      if (coeff == 0) continue;
      for (size_t e = 0; e < m; ++e) {
        voltage[e] = static_cast<uint8_t>(mod3(voltage[e] + coeff * complement[i][e]));
      }
    }
    const Graph cover = build_cover(edges, voltage, n);
    if (!cover.connected()) continue;
    const drg::Certification cert = drg::certify(cover);
    if (cert.is_drg && *cert.array == target) {
      std::cout << "conway-smith: certified " << drg::format_array(*cert.array) << "\n";
      return cover;
    }
  }
  throw drg::Error("no voltage class produced the Conway-Smith array");
}

// ---------------------------------------------------------------------------
// Doro: PSL(2,25) acting on the orbit of the F5 subline of PG(1,25).
// ---------------------------------------------------------------------------

// F25 = F5[x]/(x^2 - 2); elements encoded as a + 5b for a + b*sqrt(2).
struct F25 {
  std::array<std::array<int, 25>, 25> add{};
  std::array<std::array<int, 25>, 25> mul{};
  std::array<int, 25> inv{};

  F25() {
    auto enc = [](int a, int b) { return (a % 5 + 5) % 5 + 5 * ((b % 5 + 5) % 5); };
    for (int a1 = 0; a1 < 5; ++a1)
      for (int b1 = 0; b1 < 5; ++b1)
        for (int a2 = 0; a2 < 5; ++a2)
          for (int b2 = 0; b2 < 5; ++b2) {
            const int x = enc(a1, b1), y = enc(a2, b2);
            add[static_cast<size_t>(x)][static_cast<size_t>(y)] = enc(a1 + a2, b1 + b2);
            // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) r
            mul[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                enc(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1);
          }
    for (int x = 1; x < 25; ++x) {
      for (int y = 1; y < 25; ++y) {
        if (mul[static_cast<size_t>(x)][static_cast<size_t>(y)] == 1) {
          inv[static_cast<size_t>(x)] = y;
        }
      }
    }
  }
};

using Perm = std::vector<int>;  // on 26 points: 0..24 = t, 25 = infinity

Perm compose(const Perm& f, const Perm& g) {  // (f*g)(x) = f(g(x))
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<size_t>(g[i])];
  return h;
}

Perm inverse(const Perm& f) {
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[static_cast<size_t>(f[i])] = static_cast<int>(i);
  return h;
}

Graph make_doro() {
  const F25 f;
  const int INF = 25;

  // Moebius action of [[a,b],[c,d]]: t -> (a t + b) / (c t + d).
  auto moebius = [&](int a, int b, int c, int d) {
    Perm p(26);
    for (int t = 0; t < 25; ++t) {
      const int num = f.add[static_cast<size_t>(f.mul[static_cast<size_t>(a)][static_cast<size_t>(t)])][static_cast<size_t>(b)];
      const int den = f.add[static_cast<size_t>(f.mul[static_cast<size_t>(c)][static_cast<size_t>(t)])][static_cast<size_t>(d)];
      p[static_cast<size_t>(t)] = den == 0 ? INF : f.mul[static_cast<size_t>(num)][static_cast<size_t>(f.inv[static_cast<size_t>(den)])];
    }
    // t = infinity: (a : c)
    p[static_cast<size_t>(INF)] = c == 0 ? INF : f.mul[static_cast<size_t>(a)][static_cast<size_t>(f.inv[static_cast<size_t>(c)])];
    return p;
  };

  const int sqrt2 = 5;  // encoding of 0 + 1*sqrt(2)
  const std::vector<Perm> gens = {
      moebius(1, 1, 0, 1),      // t + 1
      moebius(1, sqrt2, 0, 1),  // t + sqrt(2)
      moebius(1, 0, 1, 1),      // t / (t + 1)
  };

  // BFS closure: the three unipotents generate PSL(2,25).
  std::set<Perm> seen(gens.begin(), gens.end());
  std::vector<Perm> frontier(gens.begin(), gens.end());
  Perm identity(26);
  for (int i = 0; i < 26; ++i) identity[static_cast<size_t>(i)] = i;
  seen.insert(identity);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::cout << "doro: group order " << seen.size() << "\n";
  if (seen.size() != 7800) throw drg::Error("PSL(2,25) closure has wrong order");

  // Orbit of the F5 subline {inf, 0, 1, 2, 3, 4}.
  using Line = std::vector<int>;
  const Line base = {0, 1, 2, 3, 4, INF};
  auto apply = [](const Perm& p, const Line& l) {
    Line out;
    out.reserve(l.size());
    for (int x : l) out.push_back(p[static_cast<size_t>(x)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::map<Line, Perm> transporter;  // line -> group element mapping base to it
  transporter[base] = identity;
  std::vector<Line> orbit = {base};
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& g : gens) {
      Line img = apply(g, orbit[head]);
      if (!transporter.count(img)) {
        transporter[img] = compose(g, transporter[orbit[head]]);
        orbit.push_back(std::move(img));
      }
    }
  }
  std::cout << "doro: subline orbit size " << orbit.size() << "\n";
  if (orbit.size() != 65) throw drg::Error("subline orbit has unexpected size");

  std::sort(orbit.begin(), orbit.end());
  std::map<Line, int> index;
  for (size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = static_cast<int>(i);

  // Stabilizer of the base subline and its orbits on the 65 lines.
  std::vector<Perm> stab;
  for (const Perm& p : seen) {
    if (apply(p, base) == base) stab.push_back(p);
  }
  std::cout << "doro: stabilizer order " << stab.size() << "\n";

  std::vector<int> suborbit(65, -1);
  int n_orbits = 0;
  for (int v = 0; v < 65; ++v) {
    if (suborbit[static_cast<size_t>(v)] >= 0) continue;
    const int id = n_orbits++;
    std::vector<int> stack = {v};
    suborbit[static_cast<size_t>(v)] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Perm& p : stab) {
        const int y = index.at(apply(p, orbit[static_cast<size_t>(x)]));
        if (suborbit[static_cast<size_t>(y)] < 0) {
          suborbit[static_cast<size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
  }
  std::map<int, int> orbit_sizes;
  for (int v = 0; v < 65; ++v) ++orbit_sizes[suborbit[static_cast<size_t>(v)]];
  std::cout << "doro: suborbit sizes";
  for (auto [id, size] : orbit_sizes) std::cout << " " << size;
  std::cout << "\n";

  const drg::IntersectionArray target = drg::parse_array("{10,6,4;1,2,5}");
  // Inverse transporters: g with g(X) = base, applied to Y to read the
  // orbital of the pair (X, Y).
  std::vector<Perm> to_base(65);
  for (const auto& [line, g] : transporter) to_base[static_cast<size_t>(index.at(line))] = inverse(g);

  for (const auto& [orb_id, orb_size] : orbit_sizes) {
    if (orbit_sizes.at(orb_id) == 1) continue;  // the base point itself
    std::vector<std::pair<int, int>> es;
    bool symmetric = true;
    for (int x = 0; x < 65 && symmetric; ++x) {
      for (int y = 0; y < 65; ++y) {
        if (x == y) continue;
        const int rel = suborbit[static_cast<size_t>(index.at(
            apply(to_base[static_cast<size_t>(x)], orbit[static_cast<size_t>(y)])))];
        if (rel == orb_id) {
          const int rel_back = suborbit[static_cast<size_t>(index.at(
              apply(to_base[static_cast<size_t>(y)], orbit[static_cast<size_t>(x)])))];
          if (rel_back != orb_id) {
            symmetric = false;
            break;
          }
          if (x < y) es.emplace_back(x, y);
        }
      }
    }
    if (!symmetric) continue;
    const Graph candidate(65, es);
    if (!candidate.connected()) continue;
    const drg::Certification cert = drg::certify(candidate);
    if (cert.is_drg && *cert.array == target) {
      std::cout << "doro: certified " << drg::format_array(*cert.array)
                << " from suborbit of size " << orb_size << "\n";
      return candidate;
    }
  }
  throw drg::Error("no suborbit produced the Doro array");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const std::string out_dir = argc > 1 ? argv[1] : "data/graphs";
    std::filesystem::create_directories(out_dir);

    const Graph cs = make_conway_smith();
    drg::save_graph(cs, out_dir + "/conway_smith.edges",
                    "conway-smith graph: 63 vertices, intersection array {10,6,4,1;1,2,6,10}");

    const Graph doro = make_doro();
    drg::save_graph(doro, out_dir + "/doro.edges",
                    "doro graph: 65 vertices, intersection array {10,6,4;1,2,5}");

    std::cout << "fixtures written to " << out_dir << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
