#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rspcorr {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi]; nodes from Newton iteration on
/// P_n started at the Chebyshev guesses.
inline QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(std::size_t(n));
  rule.weights.resize(std::size_t(n));
  const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[std::size_t(i)] = mid - half * x;
    rule.nodes[std::size_t(n - 1 - i)] = mid + half * x;
    rule.weights[std::size_t(i)] = rule.weights[std::size_t(n - 1 - i)] = half * w;
  }
  return rule;
}

}  // namespace rspcorr
