// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace trendlab {

/// Nodes and weights for the Gauss-Laguerre rule: sum_i w_i f(x_i)
/// approximates the integral of f(s) e^{-s} over [0, inf).
struct GaussLaguerreRule {
  int order{0};
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the Gauss-Laguerre rule of the given order, computed by
/// Golub-Welsch (symmetric tridiagonal eigensolve of the Jacobi matrix)
/// and cached. Thread-safe.
const GaussLaguerreRule& gauss_laguerre(int order);

}  // namespace trendlab
