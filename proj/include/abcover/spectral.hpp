#pragma once

#include <cstdint>
#include <vector>

#include "abcover/graph.hpp"

namespace abcover {

/// Largest adjacency eigenvalue with its a-posteriori error data.
struct SpectralResult {
  double rho = 0.0;
  /// ||A x - rho x||_inf for the final unit iterate of the component attaining rho.
  double residual = 0.0;
  /// Same residual in the 2-norm; bounds |rho - lambda| for some eigenvalue lambda.
  double residual_l2 = 0.0;
  long iterations = 0;

  /// Half-width of the interval assumed to contain the true value.
  double enclosure_radius() const;
};

struct PowerIterationOptions {
  double tol = 1e-10;
  long max_iterations = 1'000'000;
};

/// Perron value of A(G) by shifted power iteration (A + I) on every component,
/// started from the all-ones vector. Throws NumericFailure on non-convergence.
SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& options = {});
SpectralResult spectral_radius(const Graph& g, double tol);

/// B[i][j] = neighbours in part j of any vertex of part i.
struct QuotientMatrix {
  std::vector<VertexSet> parts;
  std::vector<std::vector<std::int64_t>> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// Builds the quotient of an equitable partition. Throws InvalidParameter when
/// `parts` is not a partition or is not equitable (naming a violating vertex).
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& parts);

/// Coefficients of det(lambda I - B), highest degree first (leading 1).
std::vector<std::int64_t> characteristic_polynomial(
    const std::vector<std::vector<std::int64_t>>& matrix);

/// Largest real root of det(lambda I - B), isolated through the roots of its
/// derivatives and refined by bisection to `tol`. Quotients of symmetric
/// matrices have real spectra, which this relies on.
double quotient_spectral_radius(const QuotientMatrix& q, double tol = 1e-12);

/// (delta-1)/2 + sqrt(2e - delta n + (delta+1)^2/4). Upper bound on rho(G).
double hong_nikiforov_bound(const Graph& g);

/// Whether the implication "delta >= a and rho >= n-2 => e(complement) <=
/// n - ceil(a/2) - 1" holds for `g`. A rho too close to n-2 to call either way
/// is treated as satisfying the hypothesis.
bool lemma22_check(const Graph& g, int a, double tol = 1e-10);

enum class RhoOrder { Less, Greater, Indistinguishable };

const char* to_string(RhoOrder order);

/// Certified comparison of two computed radii: Less/Greater only when the
/// enclosures are disjoint.
RhoOrder compare_rho(const SpectralResult& x, const SpectralResult& y);
RhoOrder compare_rho(const Graph& g1, const Graph& g2, double tol = 1e-8);

}  // namespace abcover
