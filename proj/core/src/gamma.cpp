// SPDX-License-Identifier: Apache-2.0
#include "trendlab/gamma.hpp"

#include <cmath>

#include "trendlab/errors.hpp"

namespace trendlab {
namespace {

// Lanczos g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.5066282746310002;

double lanczos_core(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    acc += kLanczos[i] / (z + i);
  }
  const double t = z + 7.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) {
    throw DomainError("gamma_fn: argument is NaN");
  }
  if (x >= 0.5) {
    return lanczos_core(x);
  }
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = std::sin(M_PI * x);
  if (s == 0.0) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  return M_PI / (s * lanczos_core(1.0 - x));
}

double log_gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma_fn: argument must be positive");
  }
  if (x >= 0.5) {
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
      acc += kLanczos[i] / (z + i);
    }
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(acc);
  }
  return std::log(gamma_fn(x));
}

}  // namespace trendlab
