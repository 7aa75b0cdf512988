#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace abcover {

/// Undirected edge with u < v. Ordering is lexicographic on (u, v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Subset of {0, ..., n-1} stored as a bitset. Not tied to a particular graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(const std::vector<int>& members);

  static VertexSet from_mask(std::uint64_t mask);
  /// All vertices in [first, last).
  static VertexSet range(int first, int last);

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;
  int size() const;
  bool empty() const { return size() == 0; }
  /// Largest member + 1, or 0 for the empty set.
  int bound() const;

  bool intersects(const VertexSet& other) const;
  std::vector<int> members() const;
  /// Requires every member < 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet& x, const VertexSet& y);

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

std::string to_string(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1 as symmetric bit rows.
///
/// Rows are ceil(n/64) words wide, so graphs with n <= 64 have one word per
/// row and the enumeration kernels can read `row64` directly.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  /// Number of edges.
  long size() const;

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  /// Neighbourhood as a mask. Requires order() <= 64.
  std::uint64_t row64(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& x, const Graph& y) = default;

 private:
  void check_vertex(int v) const;
  void set_bit(int u, int v, bool value);

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Families. Labelings are documented because witnesses and graph6 output depend on them.

Graph complete(int k);
Graph empty_graph(int k);
Graph path(int k);
Graph cycle(int k);
/// K_{1,k}; the centre is vertex 0.
Graph star(int k);
/// K_{p,q}; the p side is 0..p-1.
Graph complete_bipartite(int p, int q);
Graph petersen();

/// K_{gamma-1} ∨ (K_{n-gamma} ∪ K_1): an (n-1)-clique plus a vertex joined to
/// gamma-1 of its members. Labels: the gamma-1 attachment vertices first, then
/// the K_{n-gamma} block, the low-degree vertex last (n-1).
Graph h_graph(int n, int gamma);

/// Vertices of `g1` keep their labels; vertices of `g2` are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
/// Vertex v of `g` becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Cut edges in lexicographic order.
std::vector<Edge> bridges(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
/// e(V1, V2). Throws InvalidParameter when the sets overlap.
long cross_edges(const Graph& g, const VertexSet& v1, const VertexSet& v2);
/// 0 for graphs with no vertices.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// G - S together with the original label of every surviving vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};
InducedSubgraph induced_delete(const Graph& g, const VertexSet& s);

long binomial2(long n);

}  // namespace abcover
