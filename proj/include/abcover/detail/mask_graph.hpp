#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "abcover/errors.hpp"
#include "abcover/graph.hpp"

namespace abcover::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Adjacency of a graph with at most 64 vertices as one mask per vertex.
struct MaskGraph {
  int n = 0;
  std::array<Mask, 64> adj{};

  MaskGraph() = default;
  explicit MaskGraph(const Graph& g) : n(g.order()) {
    if (n > 64) throw ResourceLimit("mask kernels support at most 64 vertices");
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.row64(v);
  }

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
  Mask nbrs(int v) const { return adj[static_cast<std::size_t>(v)]; }
};

/// Vertices reachable from `start` inside `within`.
inline Mask reach(const MaskGraph& g, int start, Mask within) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.nbrs(lowest(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Calls fn(component_mask) for every component of G[within], in order of lowest vertex.
template <class Fn>
void for_each_component(const MaskGraph& g, Mask within, Fn&& fn) {
  while (within) {
    const Mask c = reach(g, lowest(within), within);
    within &= ~c;
    fn(c);
  }
}

/// Number of edges with one end in `a` and the other in `b` (a, b disjoint).
inline int edges_between(const MaskGraph& g, Mask a, Mask b) {
  int total = 0;
  for (; a; a &= a - 1) total += popcount(g.nbrs(lowest(a)) & b);
  return total;
}

/// Calls fn(part_containing_lower_endpoint, rest) for every cut edge of the
/// connected induced subgraph G[c]; stops early and returns true if fn does.
template <class Fn>
bool any_bridge_split(const MaskGraph& g, Mask c, Fn&& fn) {
  for (Mask us = c; us; us &= us - 1) {
    const int u = lowest(us);
    for (Mask vs = g.nbrs(u) & c & ~(bit(u + 1) - 1); vs; vs &= vs - 1) {
      const int v = lowest(vs);
      // BFS from u inside c, never crossing the edge uv.
      Mask seen = bit(u);
      Mask frontier = seen;
      while (frontier && !(seen & bit(v))) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) {
          const int w = lowest(f);
          next |= g.nbrs(w) & ~(w == u ? bit(v) : 0);
        }
        next &= c & ~seen;
        seen |= next;
        frontier = next;
      }
      if (!(seen & bit(v)) && fn(seen, c & ~seen)) return true;
    }
  }
  return false;
}

}  // namespace abcover::detail
