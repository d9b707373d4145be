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

#ifndef DRG_GRAPH_HPP
#define DRG_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

namespace drg {

/// Simple undirected graph stored as sorted neighbor lists. Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list; validates simplicity and symmetrizes.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int64_t edge_count() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  bool connected() const;

  /// BFS distances from src; unreachable vertices get -1.
  std::vector<int> distances_from(int src) const;

  std::vector<std::pair<int, int>> edge_list() const;

 private:
  std::vector<std::vector<int>> adj_;
  int64_t edges_ = 0;
};

/// Edge-list file: one "u v" pair per line, 0-indexed, '#' comments.
Graph load_graph(const std::string& path);
Graph parse_edge_list(std::istream& in);
void save_graph(const Graph& g, const std::string& path, const std::string& comment = {});

// ---- generators ----
Graph hypercube(int n);
Graph johnson(int n, int k);
Graph petersen();
Graph icosahedron();
Graph cycle(int n);
Graph complete(int n);
Graph complete_multipartite(int parts, int part_size);
Graph strong_product(const Graph& g, const Graph& h);
Graph clique_extension(const Graph& g, int s);

/// Parses "name(arg1,arg2)" (e.g. "hypercube(4)", "petersen()") and builds
/// the generator; throws ParseError for unknown names or bad parameters.
Graph build_generator(const std::string& desc);

/// Vertices at distance exactly i from x, grouped by layer.
struct DistancePartition {
  int source = 0;
  std::vector<std::vector<int>> layers;  // layers[i] = Gamma_i(x)
  std::vector<int> dist;                 // per-vertex labels
  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

DistancePartition distance_partition(const Graph& g, int x);

struct CertificationWitness {
  int x = -1, y = -1;
  int dist = 0;
  char kind = 'c';  // 'c' or 'b' count that disagreed
  int64_t expected = 0, got = 0;
};

struct Certification {
  bool is_drg = false;
  std::optional<IntersectionArray> array;
  std::optional<CertificationWitness> witness;
};

/// Exact distance-regularity check by exhaustive pair counting; extracts the
/// intersection array on success. Throws PreconditionError on disconnected
/// input. Parallelizes over source vertices for larger graphs.
Certification certify(const Graph& g, int workers = 0);

struct TerwilligerScan {
  bool is_terwilliger = false;
  std::optional<int64_t> mu;  // common-neighbor count, when constant
  bool has_quadrangle = false;
};

/// Checks every distance-2 pair: common-neighbor sets must be cliques of a
/// fixed size mu. has_quadrangle is searched independently (two nonadjacent
/// common neighbors of a distance-2 pair form an induced quadrangle).
TerwilligerScan terwilliger_scan(const Graph& g);

struct AntipodalResult {
  bool is_antipodal = false;
  std::optional<int64_t> r;  // fiber size when all classes agree
};

/// Verifies that "distance 0 or D" is an equivalence relation.
AntipodalResult antipodal_check(const Graph& g, const Certification& cert);

/// Induced subgraph on an explicit vertex set, with the original labels kept
/// alongside.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // subgraph vertex i = original vertices[i]
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Induced subgraph on Gamma(x).
InducedSubgraph local_graph(const Graph& g, int x);

/// Quotient by equal closed neighborhoods.
Graph reduced_graph(const Graph& g);

/// The unique shortest path from x to y; requires c_t = 1 at t = d(x,y).
std::vector<int> geodesic(const Graph& g, const Certification& cert, int x, int y);

/// Delta(u,v): union of the unique geodesics from u to the component of v in
/// the subgraph induced on Gamma_s(u), returned as an induced subgraph.
InducedSubgraph delta_subgraph(const Graph& g, const Certification& cert, int u, int v);

struct QuotientCheck {
  bool equitable = false;
  std::vector<std::vector<int64_t>> q;  // quotient matrix of the partition
  std::vector<double> q_eigenvalues;
  bool eigenvalues_in_spectrum = false;
};

/// Verifies the distance partition from x is equitable with the certified
/// (c_i, a_i, b_i) coefficients, and that Q(Pi) eigenvalues appear in the
/// brute-force adjacency spectrum.
QuotientCheck distance_partition_quotient(const Graph& g, const Certification& cert, int x);

struct DelsarteBound {
  double size = 0;          // 1 - k/theta_D
  bool near_integer = false;
};

DelsarteBound delsarte_clique_size(const IntersectionArray& arr, const Spectrum& sp);

/// Exact maximum clique size (branch and bound; desk-scale graphs only).
int clique_scan(const Graph& g);

/// Brute-force symmetric adjacency eigendecomposition (cyclic Jacobi).
/// Restricted to order <= max_order. Returns all eigenvalues descending.
std::vector<double> adjacency_eigenvalues(const Graph& g, int max_order = 4096);

/// Groups eigenvalues within tol into (value, multiplicity) pairs.
std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& eigs,
                                                      double tol = 1e-6);

}  // namespace drg

#endif  // DRG_GRAPH_HPP
