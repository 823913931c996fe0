// SPDX-License-Identifier: Apache-2.0
#include "trendlab/params.hpp"

#include <cmath>
#include <sstream>

#include "trendlab/errors.hpp"

namespace trendlab {
namespace {

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << value << " is outside [0, 1]";
    throw ConstraintViolation(msg.str());
  }
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kDiffusive:
      return "diffusive";
    case Regime::kCritical:
      return "critical";
    case Regime::kSuperdiffusive:
      return "superdiffusive";
  }
  return "unknown";
}

ModelParams validate_params(double a, double b, double alpha, double beta,
                            std::int64_t n0, std::int64_t m0) {
  require_unit_interval(a, "a");
  require_unit_interval(b, "b");
  require_unit_interval(alpha, "alpha");
  require_unit_interval(beta, "beta");
  if (alpha + beta > 1.0) {
    std::ostringstream msg;
    msg << "alpha + beta = " << alpha + beta << " exceeds 1";
    throw ConstraintViolation(msg.str());
  }
  if (a + b > 1.0) {
    std::ostringstream msg;
    msg << "a + b = " << a + b << " exceeds 1";
    throw ConstraintViolation(msg.str());
  }
  if (beta != 0.0 && b > a) {
    std::ostringstream msg;
    msg << "b = " << b << " exceeds a = " << a << " while beta != 0";
    throw ConstraintViolation(msg.str());
  }
  if (n0 < 0 || m0 < 0) {
    throw ConstraintViolation("n0 and m0 must be non-negative");
  }
  if (n0 + m0 < 1) {
    throw ConstraintViolation("n0 + m0 must be at least 1");
  }
  return ModelParams(a, b, alpha, beta, n0, m0);
}

Regime classify_regime(const ModelParams& params) {
  const double l2 = params.lambda2();
  if (std::fabs(l2 - 0.5) <= kCriticalTolerance) {
    return Regime::kCritical;
  }
  return l2 < 0.5 ? Regime::kDiffusive : Regime::kSuperdiffusive;
}

PopulationState initial_state(const ModelParams& params) {
  return PopulationState{params.n0(), params.m0(), 0};
}

double conditional_success_prob(const ModelParams& params, int trend, double proportion) {
  if (trend < -1 || trend > 1) {
    throw DomainError("conditional_success_prob: trend must be -1, 0 or +1");
  }
  if (!(proportion >= 0.0 && proportion <= 1.0)) {
    throw DomainError("conditional_success_prob: proportion must lie in [0, 1]");
  }
  return params.a() + params.b() * trend * proportion;
}

double mean_success_prob(const ModelParams& params, const PopulationState& state) {
  return params.a() + params.lambda2() * state.proportion_a();
}

Proportions limiting_proportions(const ModelParams& params) {
  const double l2 = params.lambda2();
  if (std::fabs(1.0 - l2) < kCriticalTolerance) {
    throw DegenerateSpectrum("limiting_proportions: lambda2 == 1 (degenerate reinforcement)");
  }
  return Proportions{params.a() / (1.0 - l2), (1.0 - params.a() - l2) / (1.0 - l2)};
}

}  // namespace trendlab
