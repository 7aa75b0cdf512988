#pragma once

#include <optional>

#include "abcover/factor.hpp"
#include "abcover/graph.hpp"
#include "abcover/scan.hpp"

namespace abcover {

/// Parity class of a component C of G-S-T. For a = b the class is the parity
/// of e_G(T, V(C)) + b|V(C)|; every component is Neutral when a != b.
enum class ComponentClass { Odd, Even, Neutral };

const char* to_string(ComponentClass c);

/// A pair (S, T) at which theta < epsilon.
struct StructuralWitness {
  VertexSet s;
  VertexSet t;
  long theta = 0;
  int epsilon = 0;
};

std::string to_string(const StructuralWitness& w);

struct CoverageVerdict {
  bool covered = true;
  std::optional<StructuralWitness> structural_witness;
  /// An edge contained in no [a,b]-factor.
  std::optional<Edge> edge_witness;
};

ComponentClass classify_component(const Graph& g, const VertexSet& c, const VertexSet& t, int a,
                                  int b);

/// o_G(S, T): number of Odd components of G-S-T (always 0 when a != b).
int count_odd(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b);

/// The threshold in {0, 1, 2}:
///   2 if S is not independent, or (a = b) some Even component either has an
///     edge to S or has a cut edge whose two sides C_i both have
///     e_G(T, V(C_i)) + b|V(C_i)| even;
///   1 otherwise, if some Neutral component has an edge to S;
///   0 otherwise.
int epsilon(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b);

/// b|S| - a|T| + sum_{x in T} d_{G-S}(x) - o_G(S, T).
long theta(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b);

/// [a,b]-coverage by the structural criterion theta >= epsilon over all 3^n pairs.
/// A not-covered verdict carries the first violating pair in base-3 order.
/// Edgeless graphs are covered vacuously, as in the definitional route.
CoverageVerdict is_ab_covered_structural(const Graph& g, int a, int b,
                                         const ScanOptions& options = {});

/// [a,b]-coverage straight from the definition: every edge lies in some
/// [a,b]-factor. Reports the lexicographically first failing edge.
CoverageVerdict is_ab_covered_definitional(const Graph& g, int a, int b,
                                           const SearchOptions& options = {});

/// [1,1]-coverage via the structural path.
CoverageVerdict is_matching_covered(const Graph& g, const ScanOptions& options = {});

}  // namespace abcover
