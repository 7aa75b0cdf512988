#include "abcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "abcover/errors.hpp"

namespace abcover {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(const std::vector<int>& members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  if (mask != 0) s.words_.push_back(mask);
  return s;
}

VertexSet VertexSet::range(int first, int last) {
  VertexSet s;
  for (int v = first; v < last; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0) throw InvalidParameter("negative vertex " + std::to_string(v));
  const auto w = static_cast<std::size_t>(v / 64);
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  const auto w = static_cast<std::size_t>(v / 64);
  if (v < 0 || w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v % 64));
  trim();
}

bool VertexSet::contains(int v) const {
  const auto w = static_cast<std::size_t>(v / 64);
  return v >= 0 && w < words_.size() && ((words_[w] >> (v % 64)) & 1U);
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

int VertexSet::bound() const {
  if (words_.empty()) return 0;
  const auto top = words_.back();
  return static_cast<int>(words_.size() - 1) * 64 + (64 - std::countl_zero(top));
}

bool VertexSet::intersects(const VertexSet& other) const {
  const auto common = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(i) * 64 + std::countr_zero(w));
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (words_.size() > 1) throw InvalidParameter("vertex set does not fit in 64 bits");
  return words_.empty() ? 0 : words_[0];
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool operator==(const VertexSet& x, const VertexSet& y) { return x.words_ == y.words_; }

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0 || n > kMaxOrder) {
    throw InvalidParameter("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxOrder) + "]");
  }
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

long Graph::size() const {
  long total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (auto w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<int>(i) * 64 + std::countr_zero(w));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
  set_bit(u, v, true);
  set_bit(v, u, true);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  set_bit(u, v, false);
  set_bit(v, u, false);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidParameter("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(n_));
  }
}

void Graph::set_bit(int u, int v, bool value) {
  auto& w = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
  const auto bit = std::uint64_t{1} << (v % 64);
  w = value ? (w | bit) : (w & ~bit);
}

// ----------------------------------------------------------------- families

Graph complete(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int k) { return Graph(k); }

Graph path(int k) {
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int k) {
  if (k < 3) throw InvalidParameter("cycle needs at least 3 vertices");
  Graph g = path(k);
  g.add_edge(0, k - 1);
  return g;
}

Graph star(int k) {
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int p, int q) { return join(empty_graph(p), empty_graph(q)); }

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph h_graph(int n, int gamma) {
  if (gamma < 1 || gamma > n) {
    throw InvalidParameter("h_graph requires 1 <= gamma <= n, got n=" + std::to_string(n) +
                           " gamma=" + std::to_string(gamma));
  }
  return join(complete(gamma - 1), disjoint_union(complete(n - gamma), empty_graph(1)));
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int offset = g1.order();
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, offset + v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.order() + g2.order());
  for (const auto& e : g1.edges()) g.add_edge(e.u, e.v);
  const int offset = g1.order();
  for (const auto& e : g2.edges()) g.add_edge(offset + e.u, offset + e.v);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InvalidParameter("permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw InvalidParameter("relabel: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph out(n);
  for (const auto& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

// ---------------------------------------------------------------- structure

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(root)] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.back().insert(u);
      for (int w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  // Iterative Tarjan low-link.
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> out;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto& nbrs = adj[static_cast<std::size_t>(f.v)];
      if (f.next < nbrs.size()) {
        const int w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int v = f.v;
      const int parent = f.parent;
      stack.pop_back();
      if (parent >= 0) {
        auto& lp = low[static_cast<std::size_t>(parent)];
        lp = std::min(lp, low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(parent)]) {
          out.emplace_back(parent, v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) return false;
  return true;
}

long cross_edges(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  if (v1.intersects(v2)) throw InvalidParameter("cross_edges: vertex sets overlap");
  long total = 0;
  for (int u : v1.members())
    for (int v : v2.members())
      if (g.adjacent(u, v)) ++total;
  return total;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) {
      index[static_cast<std::size_t>(v)] = static_cast<int>(out.original.size());
      out.original.push_back(v);
    }
  }
  out.graph = Graph(static_cast<int>(out.original.size()));
  for (const auto& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
  }
  return out;
}

long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace abcover
