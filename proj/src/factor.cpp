#include "abcover/factor.hpp"

#include <algorithm>
#include <set>

#include "abcover/detail/kernels.hpp"
#include "abcover/detail/ternary_scan.hpp"
#include "abcover/errors.hpp"

namespace abcover {

using detail::Mask;
using detail::MaskGraph;

DegreeSpec DegreeSpec::uniform(int n, int a, int b) {
  if (n < 0) throw InvalidParameter("negative order");
  DegreeSpec spec{std::vector<int>(static_cast<std::size_t>(n), a),
                  std::vector<int>(static_cast<std::size_t>(n), b)};
  spec.validate(n);
  return spec;
}

void DegreeSpec::validate(int n) const {
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n) {
    throw InvalidParameter("degree spec length " + std::to_string(lower.size()) + "/" +
                           std::to_string(upper.size()) + " does not match order " +
                           std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    const int g = lower[static_cast<std::size_t>(v)];
    const int f = upper[static_cast<std::size_t>(v)];
    if (g < 0 || g > f) {
      throw InvalidParameter("degree bounds at vertex " + std::to_string(v) +
                             " violate 0 <= g <= f (g=" + std::to_string(g) +
                             ", f=" + std::to_string(f) + ")");
    }
  }
}

namespace {

void check_disjoint(const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t)) throw InvalidParameter("S and T must be disjoint");
}

void check_in_range(const Graph& g, const VertexSet& s) {
  if (s.bound() > g.order()) {
    throw InvalidParameter("vertex set " + to_string(s) + " exceeds graph order " +
                           std::to_string(g.order()));
  }
}

// ------------------------------------------------------------ factor search

constexpr std::int8_t kUndecided = 0;
constexpr std::int8_t kIn = 1;
constexpr std::int8_t kOut = 2;

struct SearchState {
  std::vector<std::int8_t> status;
  std::vector<int> current;    // chosen edges at v
  std::vector<int> remaining;  // undecided edges at v
};

class FactorSearch {
 public:
  FactorSearch(int n, std::vector<Edge> free_edges, const DegreeSpec& spec)
      : n_(n), edges_(std::move(free_edges)), spec_(spec), incident_(static_cast<std::size_t>(n)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[static_cast<std::size_t>(edges_[i].u)].push_back(static_cast<int>(i));
      incident_[static_cast<std::size_t>(edges_[i].v)].push_back(static_cast<int>(i));
    }
  }

  std::optional<std::vector<Edge>> run(const std::vector<int>& initial_degree) {
    SearchState st;
    st.status.assign(edges_.size(), kUndecided);
    st.current = initial_degree;
    st.remaining.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      st.remaining[static_cast<std::size_t>(v)] =
          static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }
    std::vector<int> dirty(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) dirty[static_cast<std::size_t>(v)] = v;
    if (!propagate(st, dirty)) return std::nullopt;
    if (!solve(st)) return std::nullopt;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (solution_[i] == kIn) chosen.push_back(edges_[i]);
    }
    return chosen;
  }

 private:
  int lower(int v) const { return spec_.lower[static_cast<std::size_t>(v)]; }
  int upper(int v) const { return spec_.upper[static_cast<std::size_t>(v)]; }

  int slack(const SearchState& st, int v) const {
    const auto i = static_cast<std::size_t>(v);
    return std::min(upper(v) - st.current[i], st.current[i] + st.remaining[i] - lower(v));
  }

  void decide(SearchState& st, int e, std::int8_t value, std::vector<int>& dirty) {
    st.status[static_cast<std::size_t>(e)] = value;
    for (int v : {edges_[static_cast<std::size_t>(e)].u, edges_[static_cast<std::size_t>(e)].v}) {
      st.remaining[static_cast<std::size_t>(v)]--;
      if (value == kIn) st.current[static_cast<std::size_t>(v)]++;
      dirty.push_back(v);
    }
  }

  // Forces edges at saturated or starving vertices until a fixpoint; false on contradiction.
  bool propagate(SearchState& st, std::vector<int>& dirty) {
    while (!dirty.empty()) {
      const int v = dirty.back();
      dirty.pop_back();
      const auto i = static_cast<std::size_t>(v);
      if (st.current[i] > upper(v) || st.current[i] + st.remaining[i] < lower(v)) return false;
      if (st.remaining[i] == 0) continue;
      std::int8_t forced = kUndecided;
      if (st.current[i] == upper(v)) forced = kOut;
      else if (st.current[i] + st.remaining[i] == lower(v)) forced = kIn;
      if (forced == kUndecided) continue;
      for (int e : incident_[i]) {
        if (st.status[static_cast<std::size_t>(e)] == kUndecided) decide(st, e, forced, dirty);
      }
    }
    return true;
  }

  bool solve(SearchState& st) {
    int pick = -1;
    int best = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (st.status[e] != kUndecided) continue;
      const int s = std::min(slack(st, edges_[e].u), slack(st, edges_[e].v));
      if (pick < 0 || s < best) {
        pick = static_cast<int>(e);
        best = s;
      }
    }
    if (pick < 0) {
      solution_ = st.status;
      return true;
    }
    for (std::int8_t value : {kIn, kOut}) {
      SearchState next = st;
      std::vector<int> dirty;
      decide(next, pick, value, dirty);
      if (propagate(next, dirty) && solve(next)) return true;
    }
    return false;
  }

  int n_;
  std::vector<Edge> edges_;  // lexicographic, so ties in solve() go to the smaller edge
  const DegreeSpec& spec_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::int8_t> solution_;
};

}  // namespace

int q_hat(const Graph& g, const DegreeSpec& spec, const VertexSet& s, const VertexSet& t) {
  spec.validate(g.order());
  check_disjoint(s, t);
  check_in_range(g, s);
  check_in_range(g, t);
  VertexSet removed = s;
  for (int v : t.members()) removed.insert(v);
  const auto rest = induced_delete(g, removed);
  int count = 0;
  for (const auto& local : components(rest.graph)) {
    VertexSet c;
    bool all_tight = true;
    long upper_sum = 0;
    for (int lv : local.members()) {
      const int v = rest.original[static_cast<std::size_t>(lv)];
      c.insert(v);
      all_tight &= spec.lower[static_cast<std::size_t>(v)] == spec.upper[static_cast<std::size_t>(v)];
      upper_sum += spec.upper[static_cast<std::size_t>(v)];
    }
    if (all_tight && ((upper_sum + cross_edges(g, c, t)) % 2 == 1)) ++count;
  }
  return count;
}

long lovasz_deficiency(const Graph& g, const DegreeSpec& spec, const VertexSet& s,
                       const VertexSet& t) {
  const int hat = q_hat(g, spec, s, t);
  long value = 0;
  for (int v : s.members()) value += spec.upper[static_cast<std::size_t>(v)];
  for (int x : t.members()) {
    value -= spec.lower[static_cast<std::size_t>(x)];
    for (int y : g.neighbors(x)) {
      if (!s.contains(y)) ++value;
    }
  }
  return value - hat;
}

GfFactorResult has_gf_factor(const Graph& g, const DegreeSpec& spec, const ScanOptions& options) {
  spec.validate(g.order());
  if (g.order() > options.max_order || g.order() > 64) {
    throw ResourceLimit("deficiency scan limited to order " + std::to_string(options.max_order) +
                        ", got " + std::to_string(g.order()));
  }
  const MaskGraph mg(g);
  const detail::LovaszKernel kernel(mg, spec);
  const auto hit = detail::first_pair(mg.n, options.execution, kernel);
  if (!hit) return {true, std::nullopt};
  DeficiencyCertificate cert{VertexSet::from_mask(hit->s), VertexSet::from_mask(hit->t), 0};
  cert.value = kernel.base(*hit) - kernel.q_hat(*hit);
  return {false, cert};
}

std::optional<FactorWitness> find_factor(const Graph& g, const DegreeSpec& spec,
                                         const std::vector<Edge>& forced,
                                         const std::vector<Edge>& forbidden,
                                         const SearchOptions& options) {
  spec.validate(g.order());
  const std::set<Edge> forced_set(forced.begin(), forced.end());
  const std::set<Edge> forbidden_set(forbidden.begin(), forbidden.end());
  for (const auto& e : forced_set) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw InvalidParameter("forced edge " + to_string(e) + " is not an edge of the graph");
    }
    if (forbidden_set.contains(e)) {
      throw InvalidParameter("edge " + to_string(e) + " is both forced and forbidden");
    }
  }
  for (const auto& e : forbidden_set) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw InvalidParameter("forbidden edge " + to_string(e) + " is not an edge of the graph");
    }
  }

  std::vector<Edge> free_edges;
  for (const auto& e : g.edges()) {
    if (!forced_set.contains(e) && !forbidden_set.contains(e)) free_edges.push_back(e);
  }
  if (static_cast<int>(free_edges.size()) > options.max_edges) {
    throw ResourceLimit("factor search limited to " + std::to_string(options.max_edges) +
                        " free edges, got " + std::to_string(free_edges.size()));
  }

  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : forced_set) {
    degree[static_cast<std::size_t>(e.u)]++;
    degree[static_cast<std::size_t>(e.v)]++;
  }

  FactorSearch search(g.order(), std::move(free_edges), spec);
  auto chosen = search.run(degree);
  if (!chosen) return std::nullopt;
  FactorWitness w{std::vector<Edge>(forced_set.begin(), forced_set.end())};
  w.edges.insert(w.edges.end(), chosen->begin(), chosen->end());
  std::sort(w.edges.begin(), w.edges.end());
  if (!is_factor(g, spec, w)) throw InvariantViolation("factor search returned an invalid witness");
  return w;
}

bool is_factor(const Graph& g, const DegreeSpec& spec, const FactorWitness& w) {
  if (spec.order() != g.order()) return false;
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  std::set<Edge> seen;
  for (const auto& e : w.edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (!seen.insert(e).second) return false;
    degree[static_cast<std::size_t>(e.u)]++;
    degree[static_cast<std::size_t>(e.v)]++;
  }
  for (int v = 0; v < g.order(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (degree[i] < spec.lower[i] || degree[i] > spec.upper[i]) return false;
  }
  return true;
}

bool has_ab_factor(const Graph& g, int a, int b, const ScanOptions& options) {
  return has_gf_factor(g, DegreeSpec::uniform(g.order(), a, b), options).exists;
}

namespace {

void check_edge(const Graph& g, const Edge& e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
    throw InvalidParameter(to_string(e) + " is not an edge of the graph");
  }
}

}  // namespace

bool has_factor_containing_edge(const Graph& g, int a, int b, const Edge& e,
                                const SearchOptions& options) {
  check_edge(g, e);
  return find_factor(g, DegreeSpec::uniform(g.order(), a, b), {e}, {}, options).has_value();
}

bool has_factor_containing_edge_by_deficiency(const Graph& g, int a, int b, const Edge& e,
                                              const ScanOptions& options) {
  check_edge(g, e);
  auto spec = DegreeSpec::uniform(g.order(), a, b);
  for (int x : {e.u, e.v}) {
    const auto i = static_cast<std::size_t>(x);
    if (spec.upper[i] == 0) return false;
    spec.lower[i] = std::max(spec.lower[i] - 1, 0);
    spec.upper[i] -= 1;
  }
  Graph reduced = g;
  reduced.remove_edge(e.u, e.v);
  return has_gf_factor(reduced, spec, options).exists;
}

}  // namespace abcover
