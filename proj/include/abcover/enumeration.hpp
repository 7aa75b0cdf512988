#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "abcover/graph.hpp"

namespace abcover {

/// graph6 of the canonically relabelled graph. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalOptions {
  int max_order = 12;
};

/// Colour refinement followed by individualisation over the first non-trivial
/// cell, keeping the lexicographically smallest upper-triangle bit string.
/// Interchangeable twin vertices are branched on once.
CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options = {});
bool are_isomorphic(const Graph& g1, const Graph& g2, const CanonicalOptions& options = {});

struct EnumerationTask {
  enum class Mode { All, ComplementBudget };

  int n = 0;
  Mode mode = Mode::All;
  /// Maximum number of complement edges (ComplementBudget only).
  int budget = 0;
  /// Optional predicate applied to the output: "connected", "bipartite" or "min-degree:K".
  std::optional<std::string> filter;

  void validate() const;
};

struct EnumerationLimits {
  /// Cap on the number of isomorphism classes held at once.
  std::size_t max_classes = 2'000'000;
};

/// One representative per isomorphism class on n <= 8 vertices, sorted by canonical form.
std::vector<Graph> enumerate_all(int n, const EnumerationLimits& limits = {});

/// One representative per class of n-vertex graphs with at most k non-edges,
/// sorted by canonical form. Complements are grown one edge at a time from the
/// empty graph with canonical deduplication at every level.
std::vector<Graph> enumerate_dense_candidates(int n, int k, const EnumerationLimits& limits = {});

std::vector<Graph> run_enumeration(const EnumerationTask& task,
                                   const EnumerationLimits& limits = {});

/// Streaming graph6 reader. Blank lines are skipped; errors carry the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  std::optional<Graph> next();
  std::size_t line_number() const { return line_; }

 private:
  std::istream* in_;
  std::size_t line_ = 0;
};

std::vector<Graph> ingest_graph6(std::istream& in);
/// Throws InvalidParameter if the file cannot be opened.
std::vector<Graph> ingest_graph6_file(const std::string& path);

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace abcover
