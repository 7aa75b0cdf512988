#include "abcover/covered.hpp"

#include "abcover/detail/kernels.hpp"
#include "abcover/detail/ternary_scan.hpp"
#include "abcover/errors.hpp"

namespace abcover {

using detail::Mask;
using detail::MaskGraph;

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Odd:
      return "odd";
    case ComponentClass::Even:
      return "even";
    case ComponentClass::Neutral:
      return "neutral";
  }
  return "?";
}

std::string to_string(const StructuralWitness& w) {
  return "S=" + to_string(w.s) + " T=" + to_string(w.t) + " theta=" + std::to_string(w.theta) +
         " epsilon=" + std::to_string(w.epsilon);
}

namespace {

void check_params(int a, int b) {
  if (a < 1 || a > b) {
    throw InvalidParameter("need 1 <= a <= b, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  }
}

void check_pair(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t)) throw InvalidParameter("S and T must be disjoint");
  if (s.bound() > g.order() || t.bound() > g.order()) {
    throw InvalidParameter("vertex set exceeds graph order");
  }
}

MaskGraph mask_graph_for(const Graph& g) {
  if (g.order() > 64) throw ResourceLimit("structural criterion supports at most 64 vertices");
  return MaskGraph(g);
}

PairMasks to_masks(const VertexSet& s, const VertexSet& t) { return {s.mask(), t.mask()}; }

}  // namespace

ComponentClass classify_component(const Graph& g, const VertexSet& c, const VertexSet& t, int a,
                                  int b) {
  check_params(a, b);
  if (a != b) return ComponentClass::Neutral;
  const long parity = cross_edges(g, t, c) + static_cast<long>(b) * c.size();
  return parity % 2 == 1 ? ComponentClass::Odd : ComponentClass::Even;
}

int count_odd(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b) {
  check_params(a, b);
  check_pair(g, s, t);
  const MaskGraph mg = mask_graph_for(g);
  return detail::CoverKernel{&mg, a, b}.odd_count(to_masks(s, t));
}

int epsilon(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b) {
  check_params(a, b);
  check_pair(g, s, t);
  const MaskGraph mg = mask_graph_for(g);
  return detail::CoverKernel{&mg, a, b}.epsilon(to_masks(s, t));
}

long theta(const Graph& g, const VertexSet& s, const VertexSet& t, int a, int b) {
  check_params(a, b);
  check_pair(g, s, t);
  const MaskGraph mg = mask_graph_for(g);
  return detail::CoverKernel{&mg, a, b}.theta(to_masks(s, t));
}

CoverageVerdict is_ab_covered_structural(const Graph& g, int a, int b,
                                         const ScanOptions& options) {
  check_params(a, b);
  if (g.order() > options.max_order) {
    throw ResourceLimit("structural scan limited to order " + std::to_string(options.max_order) +
                        ", got " + std::to_string(g.order()));
  }
  // No edges to cover. The criterion itself rejects these graphs (T = V gives theta = -a|V|).
  if (g.size() == 0) return {};
  const MaskGraph mg = mask_graph_for(g);
  const detail::CoverKernel kernel{&mg, a, b};
  const auto hit = detail::first_pair(mg.n, options.execution, kernel);
  if (!hit) return {};
  CoverageVerdict verdict;
  verdict.covered = false;
  verdict.structural_witness = StructuralWitness{VertexSet::from_mask(hit->s),
                                                 VertexSet::from_mask(hit->t),
                                                 kernel.theta(*hit), kernel.epsilon(*hit)};
  return verdict;
}

CoverageVerdict is_ab_covered_definitional(const Graph& g, int a, int b,
                                           const SearchOptions& options) {
  check_params(a, b);
  for (const auto& e : g.edges()) {
    if (!has_factor_containing_edge(g, a, b, e, options)) {
      CoverageVerdict verdict;
      verdict.covered = false;
      verdict.edge_witness = e;
      return verdict;
    }
  }
  return {};
}

CoverageVerdict is_matching_covered(const Graph& g, const ScanOptions& options) {
  return is_ab_covered_structural(g, 1, 1, options);
}

}  // namespace abcover
