#include "abcover/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abcover/errors.hpp"

namespace abcover {

namespace {

constexpr double kSafetyFactor = 10.0;

struct ComponentResult {
  double rho = 0.0;
  double residual_inf = 0.0;
  double residual_l2 = 0.0;
  long iterations = 0;
};

ComponentResult power_iterate(const std::vector<std::vector<int>>& adj,
                              const PowerIterationOptions& options) {
  const std::size_t k = adj.size();
  ComponentResult out;
  if (k <= 1) return out;

  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> y(k);
  for (long it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double sum = 0.0;
      for (int j : adj[i]) sum += x[static_cast<std::size_t>(j)];
      y[i] = sum;
    }
    double rho = 0.0;
    for (std::size_t i = 0; i < k; ++i) rho += x[i] * y[i];
    double r_inf = 0.0;
    double r_sq = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double r = y[i] - rho * x[i];
      r_inf = std::max(r_inf, std::abs(r));
      r_sq += r * r;
    }
    out = {rho, r_inf, std::sqrt(r_sq), it};
    if (out.residual_l2 <= options.tol) return out;

    // Shift by the identity so the Perron value dominates on bipartite components.
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  throw NumericFailure("power iteration did not reach residual " + std::to_string(options.tol) +
                       " within " + std::to_string(options.max_iterations) +
                       " iterations (last residual " + std::to_string(out.residual_l2) + ")");
}

using Poly = std::vector<long double>;  // highest degree first

long double evaluate(const Poly& p, long double x) {
  long double acc = 0.0L;
  for (auto c : p) acc = acc * x + c;
  return acc;
}

Poly monic_derivative(const Poly& p) {
  const std::size_t deg = p.size() - 1;
  Poly d;
  for (std::size_t i = 0; i < deg; ++i) {
    d.push_back(p[i] * static_cast<long double>(deg - i) / static_cast<long double>(deg));
  }
  return d;
}

// Largest root of a monic polynomial with only real roots, all below `hi`.
long double largest_root(const Poly& p, long double hi, long double tol) {
  const std::size_t deg = p.size() - 1;
  if (deg == 0) return -std::numeric_limits<long double>::infinity();
  if (deg == 1) return -p[1];
  long double lo = largest_root(monic_derivative(p), hi, tol);
  if (evaluate(p, lo) >= 0.0L) return lo;  // repeated root at the derivative's root
  while (hi - lo > tol) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (evaluate(p, mid) < 0.0L) lo = mid;
    else hi = mid;
  }
  return lo + (hi - lo) / 2;
}

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t x, std::int64_t y) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
    throw NumericFailure("characteristic polynomial coefficients overflow 64-bit integers");
  }
  return acc;
}

}  // namespace

double SpectralResult::enclosure_radius() const {
  // Floor for rounding in the Rayleigh quotient when the residual underflows to ~0.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(rho) + 1.0);
  return kSafetyFactor * std::max(residual_l2, floor);
}

SpectralResult spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, PowerIterationOptions{tol, PowerIterationOptions{}.max_iterations});
}

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options) {
  if (!(options.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  SpectralResult best;
  bool first = true;
  for (const auto& comp : components(g)) {
    const auto members = comp.members();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> adj(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) adj[i].push_back(local[static_cast<std::size_t>(w)]);
    }
    const auto r = power_iterate(adj, options);
    best.iterations += r.iterations;
    if (first || r.rho > best.rho) {
      best.rho = r.rho;
      best.residual = r.residual_inf;
      best.residual_l2 = r.residual_l2;
      first = false;
    }
  }
  return best;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& parts) {
  const int n = g.order();
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InvalidParameter("partition has an empty part");
    for (int v : parts[i].members()) {
      if (v >= n) throw InvalidParameter("part contains vertex outside the graph");
      if (part_of[static_cast<std::size_t>(v)] >= 0) {
        throw InvalidParameter("vertex " + std::to_string(v) + " appears in two parts");
      }
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of[static_cast<std::size_t>(v)] < 0) {
      throw InvalidParameter("vertex " + std::to_string(v) + " is in no part");
    }
  }

  const std::size_t k = parts.size();
  QuotientMatrix q{parts, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k))};
  for (std::size_t i = 0; i < k; ++i) {
    bool first = true;
    for (int v : parts[i].members()) {
      std::vector<std::int64_t> counts(k, 0);
      for (int w : g.neighbors(v)) counts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(w)])]++;
      if (first) {
        q.entries[i] = counts;
        first = false;
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] != q.entries[i][j]) {
          throw InvalidParameter("partition is not equitable: vertex " + std::to_string(v) +
                                 " has " + std::to_string(counts[j]) + " neighbours in part " +
                                 std::to_string(j) + ", expected " +
                                 std::to_string(q.entries[i][j]));
        }
      }
    }
  }
  return q;
}

std::vector<std::int64_t> characteristic_polynomial(
    const std::vector<std::vector<std::int64_t>>& matrix) {
  // Faddeev-LeVerrier; every division below is exact for integer matrices.
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw InvalidParameter("matrix is not square");
  }
  std::vector<std::int64_t> coeffs(n + 1, 0);
  coeffs[0] = 1;
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc = checked_mul_add(acc, matrix[i][l], m[l][j]);
        next[i][j] = acc;
      }
      next[i][i] = checked_mul_add(next[i][i], coeffs[k - 1], 1);
    }
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace = checked_mul_add(trace, matrix[i][l], next[l][i]);
    }
    coeffs[k] = -trace / static_cast<std::int64_t>(k);
    m = std::move(next);
  }
  return coeffs;
}

double quotient_spectral_radius(const QuotientMatrix& q, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  if (q.size() == 0) return 0.0;
  const auto coeffs = characteristic_polynomial(q.entries);
  Poly p(coeffs.begin(), coeffs.end());
  // The spectral radius is at most the largest row sum.
  long double hi = 0.0L;
  for (const auto& row : q.entries) {
    long double sum = 0.0L;
    for (auto x : row) sum += static_cast<long double>(std::llabs(x));
    hi = std::max(hi, sum);
  }
  hi += 1.0L;
  return static_cast<double>(largest_root(p, hi, static_cast<long double>(tol)));
}

double hong_nikiforov_bound(const Graph& g) {
  const double n = g.order();
  const double delta = min_degree(g);
  const double e = static_cast<double>(g.size());
  const double radicand = 2.0 * e - delta * n + (delta + 1.0) * (delta + 1.0) / 4.0;
  if (radicand < 0.0) {
    throw InvariantViolation("negative radicand in spectral bound; graph data is corrupt");
  }
  return (delta - 1.0) / 2.0 + std::sqrt(radicand);
}

bool lemma22_check(const Graph& g, int a, double tol) {
  const int n = g.order();
  if (min_degree(g) < a) return true;
  const auto r = spectral_radius(g, tol);
  if (r.rho + r.enclosure_radius() < n - 2.0) return true;
  const long missing = binomial2(n) - g.size();
  return missing <= n - (a + 1) / 2 - 1;
}

const char* to_string(RhoOrder order) {
  switch (order) {
    case RhoOrder::Less:
      return "less";
    case RhoOrder::Greater:
      return "greater";
    case RhoOrder::Indistinguishable:
      return "indistinguishable";
  }
  return "?";
}

RhoOrder compare_rho(const SpectralResult& x, const SpectralResult& y) {
  const double rx = x.enclosure_radius();
  const double ry = y.enclosure_radius();
  if (x.rho - rx > y.rho + ry) return RhoOrder::Greater;
  if (x.rho + rx < y.rho - ry) return RhoOrder::Less;
  return RhoOrder::Indistinguishable;
}

RhoOrder compare_rho(const Graph& g1, const Graph& g2, double tol) {
  return compare_rho(spectral_radius(g1, tol), spectral_radius(g2, tol));
}

}  // namespace abcover
