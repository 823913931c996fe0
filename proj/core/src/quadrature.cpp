// SPDX-License-Identifier: Apache-2.0
#include "trendlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "trendlab/errors.hpp"

namespace trendlab {
namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix (diag d, off-diag e
// with e[i] between d[i] and d[i+1]). Instead of accumulating full
// eigenvectors, the Givens rotations are applied to a single row vector `z`
// initialised to e_1, which leaves z[i] equal to the first component of the
// i-th normalised eigenvector. That is all Golub-Welsch needs for the
// quadrature weights, and keeps the solve at O(n^2).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.resize(n + 1, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 50) {
          throw QuadratureFailure("tridiagonal_ql: too many QL iterations");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

GaussLaguerreRule build_rule(int order) {
  // Jacobi matrix for the weight e^{-x} on [0, inf): diag 2k+1, off-diag k+1.
  std::vector<double> d(order);
  std::vector<double> e(order);
  std::vector<double> z(order, 0.0);
  for (int k = 0; k < order; ++k) {
    d[k] = 2.0 * k + 1.0;
    e[k] = static_cast<double>(k + 1);
  }
  e[order - 1] = 0.0;
  z[0] = 1.0;
  tridiagonal_ql(d, e, z);

  std::vector<int> idx(order);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  GaussLaguerreRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = d[idx[i]];
    rule.weights[i] = z[idx[i]] * z[idx[i]];  // beta_0 = integral of e^{-x} dx = 1
  }
  return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int order) {
  if (order < 1) {
    throw DomainError("gauss_laguerre: order must be positive");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLaguerreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<GaussLaguerreRule>(build_rule(order));
  }
  return *slot;
}

}  // namespace trendlab
