#pragma once

// Per-pair evaluators shared by the decision procedures and the property suites.

#include <array>

#include "abcover/detail/mask_graph.hpp"
#include "abcover/factor.hpp"
#include "abcover/scan.hpp"

namespace abcover::detail {

/// Evaluates the deficiency condition on masks; true when (S, T) violates it.
struct LovaszKernel {
  const MaskGraph* graph;
  std::array<int, 64> lower{};
  std::array<int, 64> upper{};
  Mask tight = 0;      // lower == upper
  Mask upper_odd = 0;  // upper is odd

  LovaszKernel(const MaskGraph& g, const DegreeSpec& spec) : graph(&g) {
    for (int v = 0; v < g.n; ++v) {
      lower[static_cast<std::size_t>(v)] = spec.lower[static_cast<std::size_t>(v)];
      upper[static_cast<std::size_t>(v)] = spec.upper[static_cast<std::size_t>(v)];
      if (spec.lower[static_cast<std::size_t>(v)] == spec.upper[static_cast<std::size_t>(v)]) {
        tight |= bit(v);
      }
      if (spec.upper[static_cast<std::size_t>(v)] & 1) upper_odd |= bit(v);
    }
  }

  long base(const PairMasks& p) const {
    long value = 0;
    for (Mask s = p.s; s; s &= s - 1) value += upper[static_cast<std::size_t>(lowest(s))];
    for (Mask t = p.t; t; t &= t - 1) {
      const int x = lowest(t);
      value -= lower[static_cast<std::size_t>(x)];
      value += popcount(graph->nbrs(x) & ~p.s);
    }
    return value;
  }

  int q_hat(const PairMasks& p) const {
    int count = 0;
    for_each_component(*graph, graph->all() & ~p.s & ~p.t, [&](Mask c) {
      if (c & ~tight) return;
      const int parity =
          popcount(c & upper_odd) + edges_between(*graph, c, p.t);
      if (parity & 1) ++count;
    });
    return count;
  }

  bool operator()(const PairMasks& p) const {
    const long b = base(p);
    // q_hat is at most the number of remaining vertices.
    if (b >= popcount(graph->all() & ~p.s & ~p.t)) return false;
    return b - q_hat(p) < 0;
  }
};

/// The covered criterion theta >= epsilon evaluated on masks.
struct CoverKernel {
  const MaskGraph* graph;
  int a;
  int b;

  bool even_part(Mask part, Mask t) const {
    return ((edges_between(*graph, t, part) + b * popcount(part)) & 1) == 0;
  }

  long theta_without_odd(const PairMasks& p) const {
    long value = static_cast<long>(b) * popcount(p.s) -
                 static_cast<long>(a) * popcount(p.t);
    for (Mask t = p.t; t; t &= t - 1) value += popcount(graph->nbrs(lowest(t)) & ~p.s);
    return value;
  }

  int odd_count(const PairMasks& p) const {
    if (a != b) return 0;
    int odd = 0;
    for_each_component(*graph, graph->all() & ~p.s & ~p.t, [&](Mask c) {
      if (!even_part(c, p.t)) ++odd;
    });
    return odd;
  }

  long theta(const PairMasks& p) const { return theta_without_odd(p) - odd_count(p); }

  int epsilon(const PairMasks& p) const {
    for (Mask s = p.s; s; s &= s - 1) {
      if (graph->nbrs(lowest(s)) & p.s) return 2;  // (i)(1)
    }
    const Mask rest = graph->all() & ~p.s & ~p.t;
    if (a == b) {
      bool two = false;
      for_each_component(*graph, rest, [&](Mask c) {
        if (two || !even_part(c, p.t)) return;
        if (edges_between(*graph, c, p.s) > 0) {
          two = true;
          return;
        }
        two = any_bridge_split(*graph, c, [&](Mask c1, Mask c2) {
          return even_part(c1, p.t) && even_part(c2, p.t);
        });
      });
      return two ? 2 : 0;
    }
    bool one = false;
    for_each_component(*graph, rest, [&](Mask c) {
      if (!one && edges_between(*graph, c, p.s) > 0) one = true;
    });
    return one ? 1 : 0;
  }

  /// True when theta < epsilon.
  bool operator()(const PairMasks& p) const {
    const long partial = theta_without_odd(p);
    const int rest = popcount(graph->all() & ~p.s & ~p.t);
    // epsilon <= 2 and the odd count is at most the number of remaining vertices.
    if (partial - (a == b ? rest : 0) >= 2) return false;
    const long th = partial - odd_count(p);
    if (th >= 2) return false;
    return th < epsilon(p);
  }
};

}  // namespace abcover::detail
