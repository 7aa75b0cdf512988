#include "abcover/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "abcover/detail/mask_graph.hpp"
#include "abcover/detail/parallel.hpp"
#include "abcover/errors.hpp"
#include "abcover/graph6.hpp"

namespace abcover {

using detail::Mask;
using detail::MaskGraph;

namespace {

// graph6 of the graph whose vertex i is `order[i]` of `g`.
std::string encode_relabelled(const MaskGraph& g, const std::vector<int>& order) {
  const int n = g.n;
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const Mask row = g.nbrs(order[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row >> order[static_cast<std::size_t>(i)]) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const MaskGraph& g) : g_(g) {}

  std::string run() {
    std::vector<Mask> cells;
    if (g_.n > 0) cells.push_back(g_.all());
    search(cells);
    return best_.empty() ? std::string(1, static_cast<char>(63)) : best_;
  }

 private:
  // Splits cells by neighbour counts into earlier cells until stable. Only cell
  // order and counts are consulted, so the result is labelling-invariant.
  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        const Mask splitter = cells[si];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          const Mask cell = cells[ci];
          if (detail::popcount(cell) == 1) continue;
          std::array<Mask, 65> by_count{};
          int lo = 65;
          int hi = -1;
          for (Mask c = cell; c; c &= c - 1) {
            const int v = detail::lowest(c);
            const int k = detail::popcount(g_.nbrs(v) & splitter);
            by_count[static_cast<std::size_t>(k)] |= detail::bit(v);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::vector<Mask> pieces;
          for (int k = lo; k <= hi; ++k) {
            if (by_count[static_cast<std::size_t>(k)]) pieces.push_back(by_count[static_cast<std::size_t>(k)]);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(int u, int w) const {
    return (g_.nbrs(u) & ~detail::bit(w)) == (g_.nbrs(w) & ~detail::bit(u));
  }

  void search(std::vector<Mask> cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (detail::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (Mask c : cells) order.push_back(detail::lowest(c));
      auto key = encode_relabelled(g_, order);
      if (best_.empty() || key < best_) best_ = std::move(key);
      return;
    }
    std::vector<int> tried;
    for (Mask c = cells[target]; c; c &= c - 1) {
      const int v = detail::lowest(c);
      // Swapping twins is an automorphism fixing everything individualised so far.
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); })) continue;
      tried.push_back(v);
      std::vector<Mask> next = cells;
      next[target] = cells[target] & ~detail::bit(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), detail::bit(v));
      search(std::move(next));
    }
  }

  const MaskGraph& g_;
  std::string best_;
};

std::string canonical_key(const MaskGraph& g) { return Canonicalizer(g).run(); }

std::vector<Graph> to_graphs(const std::set<std::string>& keys) {
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(parse_graph6(k));
  return out;
}

void check_class_cap(std::size_t count, const EnumerationLimits& limits) {
  if (count > limits.max_classes) {
    throw ResourceLimit("enumeration exceeded the cap of " + std::to_string(limits.max_classes) +
                        " isomorphism classes");
  }
}

std::set<std::string> merge(std::vector<std::set<std::string>>& parts) {
  std::set<std::string> out;
  for (auto& p : parts) out.merge(p);
  return out;
}

// Extends every representative in `base` by all edges it lacks.
std::set<std::string> add_one_edge(const std::vector<std::string>& base,
                                   const EnumerationLimits& limits) {
  std::vector<std::set<std::string>> found(static_cast<std::size_t>(detail::thread_slots()));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto& local = found[static_cast<std::size_t>(detail::current_thread())];
    const Graph g = parse_graph6(base[i]);
    MaskGraph mg(g);
    for (int u = 0; u < mg.n; ++u) {
      for (int v = u + 1; v < mg.n; ++v) {
        if (mg.nbrs(u) & detail::bit(v)) continue;
        mg.adj[static_cast<std::size_t>(u)] |= detail::bit(v);
        mg.adj[static_cast<std::size_t>(v)] |= detail::bit(u);
        local.insert(canonical_key(mg));
        mg.adj[static_cast<std::size_t>(u)] &= ~detail::bit(v);
        mg.adj[static_cast<std::size_t>(v)] &= ~detail::bit(u);
      }
    }
  }
  auto out = merge(found);
  check_class_cap(out.size(), limits);
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options) {
  if (g.order() > options.max_order || g.order() > 62) {
    throw ResourceLimit("canonical form limited to order " + std::to_string(options.max_order) +
                        ", got " + std::to_string(g.order()));
  }
  return {canonical_key(MaskGraph(g))};
}

bool are_isomorphic(const Graph& g1, const Graph& g2, const CanonicalOptions& options) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  return canonical_form(g1, options) == canonical_form(g2, options);
}

void EnumerationTask::validate() const {
  if (n < 0) throw InvalidParameter("negative order");
  if (mode == Mode::All && n > 8) {
    throw ResourceLimit("exhaustive enumeration is limited to n <= 8, got " + std::to_string(n));
  }
  if (mode == Mode::ComplementBudget && (budget < 0 || budget > binomial2(n))) {
    throw InvalidParameter("complement budget must lie in [0, C(n,2)], got " +
                           std::to_string(budget));
  }
}

namespace {

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        auto& s = side[static_cast<std::size_t>(w)];
        if (s < 0) {
          s = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (s == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool passes_filter(const Graph& g, const std::string& filter) {
  if (filter == "connected") return components(g).size() <= 1;
  if (filter == "bipartite") return is_bipartite(g);
  if (filter.starts_with("min-degree:")) return min_degree(g) >= std::stoi(filter.substr(11));
  throw InvalidParameter("unknown enumeration filter '" + filter + "'");
}

}  // namespace

std::vector<Graph> enumerate_all(int n, const EnumerationLimits& limits) {
  EnumerationTask{n, EnumerationTask::Mode::All, 0, std::nullopt}.validate();
  if (n <= 6) {
    // Every labelled graph, deduplicated.
    const long pairs = binomial2(n);
    const long total = 1L << pairs;
    std::vector<std::set<std::string>> found(static_cast<std::size_t>(detail::thread_slots()));
#pragma omp parallel for schedule(dynamic, 256)
    for (long code = 0; code < total; ++code) {
      MaskGraph mg;
      mg.n = n;
      long k = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
          if ((code >> k) & 1) {
            mg.adj[static_cast<std::size_t>(i)] |= detail::bit(j);
            mg.adj[static_cast<std::size_t>(j)] |= detail::bit(i);
          }
        }
      }
      found[static_cast<std::size_t>(detail::current_thread())].insert(canonical_key(mg));
    }
    auto keys = merge(found);
    check_class_cap(keys.size(), limits);
    return to_graphs(keys);
  }

  // One more vertex on top of every class of order n-1.
  const auto smaller = enumerate_all(n - 1, limits);
  std::vector<std::set<std::string>> found(static_cast<std::size_t>(detail::thread_slots()));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < smaller.size(); ++i) {
    auto& local = found[static_cast<std::size_t>(detail::current_thread())];
    MaskGraph mg(smaller[i]);
    mg.n = n;
    const int last = n - 1;
    for (Mask nb = 0; nb < detail::bit(last); ++nb) {
      for (int v = 0; v < last; ++v) {
        auto& row = mg.adj[static_cast<std::size_t>(v)];
        row = (nb >> v) & 1U ? (row | detail::bit(last)) : (row & ~detail::bit(last));
      }
      mg.adj[static_cast<std::size_t>(last)] = nb;
      local.insert(canonical_key(mg));
    }
  }
  auto keys = merge(found);
  check_class_cap(keys.size(), limits);
  return to_graphs(keys);
}

std::vector<Graph> enumerate_dense_candidates(int n, int k, const EnumerationLimits& limits) {
  EnumerationTask{n, EnumerationTask::Mode::ComplementBudget, k, std::nullopt}.validate();
  if (n > CanonicalOptions{}.max_order) {
    throw ResourceLimit("dense candidate enumeration limited to order " +
                        std::to_string(CanonicalOptions{}.max_order));
  }
  std::set<std::string> all_complements;
  std::vector<std::string> level{canonical_form(empty_graph(n)).bytes};
  all_complements.insert(level.front());
  for (int edges = 1; edges <= k; ++edges) {
    auto next = add_one_edge(level, limits);
    level.assign(next.begin(), next.end());
    all_complements.insert(level.begin(), level.end());
    check_class_cap(all_complements.size(), limits);
  }
  std::set<std::string> dense;
  for (const auto& key : all_complements) {
    dense.insert(canonical_form(complement(parse_graph6(key))).bytes);
  }
  return to_graphs(dense);
}

std::vector<Graph> run_enumeration(const EnumerationTask& task, const EnumerationLimits& limits) {
  task.validate();
  auto graphs = task.mode == EnumerationTask::Mode::All
                    ? enumerate_all(task.n, limits)
                    : enumerate_dense_candidates(task.n, task.budget, limits);
  if (task.filter) {
    std::erase_if(graphs, [&](const Graph& g) { return !passes_filter(g, *task.filter); });
  }
  return graphs;
}

// ------------------------------------------------------------------ graph6 IO

std::optional<Graph> Graph6Reader::next() {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      return parse_graph6(text);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_) + ": " + e.what(), e.offset(), line_);
    }
  }
  return std::nullopt;
}

std::vector<Graph> ingest_graph6(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> ingest_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open graph6 file '" + path + "'");
  return ingest_graph6(in);
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace abcover
