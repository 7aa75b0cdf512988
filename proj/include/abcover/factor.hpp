#pragma once

#include <optional>
#include <vector>

#include "abcover/graph.hpp"
#include "abcover/scan.hpp"

namespace abcover {

/// Per-vertex degree bounds lower[v] <= d_F(v) <= upper[v].
struct DegreeSpec {
  std::vector<int> lower;
  std::vector<int> upper;

  static DegreeSpec uniform(int n, int a, int b);

  int order() const { return static_cast<int>(lower.size()); }
  /// Throws InvalidParameter unless 0 <= lower <= upper and both have length n.
  void validate(int n) const;
};

/// A disjoint pair (S, T) and the value of the Lovász expression at it.
struct DeficiencyCertificate {
  VertexSet s;
  VertexSet t;
  long value = 0;
};

/// Spanning subgraph given by its edge list.
struct FactorWitness {
  std::vector<Edge> edges;
};

struct GfFactorResult {
  bool exists = false;
  /// First violating pair in base-3 order when `exists` is false.
  std::optional<DeficiencyCertificate> certificate;
};

struct SearchOptions {
  /// Hard cap on the number of free (non-forbidden) edges.
  int max_edges = 64;
};

/// Components C of G-S-T with lower == upper on C and upper(V(C)) + e(V(C), T) odd.
int q_hat(const Graph& g, const DegreeSpec& spec, const VertexSet& s, const VertexSet& t);

/// upper(S) - lower(T) + sum_{x in T} d_{G-S}(x) - q_hat(S, T).
long lovasz_deficiency(const Graph& g, const DegreeSpec& spec, const VertexSet& s,
                       const VertexSet& t);

/// Exact (g, f)-factor decision by scanning all 3^n disjoint pairs.
GfFactorResult has_gf_factor(const Graph& g, const DegreeSpec& spec,
                             const ScanOptions& options = {});

/// Branch-and-prune search for a factor containing every `forced` edge and no
/// `forbidden` one. Every returned witness has been re-validated.
std::optional<FactorWitness> find_factor(const Graph& g, const DegreeSpec& spec,
                                         const std::vector<Edge>& forced = {},
                                         const std::vector<Edge>& forbidden = {},
                                         const SearchOptions& options = {});

/// True iff `w` is a subgraph of `g` whose degrees respect `spec`.
bool is_factor(const Graph& g, const DegreeSpec& spec, const FactorWitness& w);

bool has_ab_factor(const Graph& g, int a, int b, const ScanOptions& options = {});

/// Edge-forced [a,b]-factor existence by direct search with `e` forced.
bool has_factor_containing_edge(const Graph& g, int a, int b, const Edge& e,
                                const SearchOptions& options = {});

/// Same question answered through the deficiency criterion: G - e with the
/// bounds at both endpoints lowered by one (lower floored at 0).
bool has_factor_containing_edge_by_deficiency(const Graph& g, int a, int b, const Edge& e,
                                              const ScanOptions& options = {});

}  // namespace abcover
