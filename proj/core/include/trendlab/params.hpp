// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace trendlab {

/// Phase regime of the model, decided by lambda2 = b*(alpha - beta)
/// against the threshold 1/2.
enum class Regime { kDiffusive, kCritical, kSuperdiffusive };

const char* regime_name(Regime r);

/// Absolute tolerance used when comparing lambda2 against the critical
/// threshold 1/2. Criticality is a measure-zero set; parameter sets that
/// target it must make b*(alpha-beta) exactly representable (e.g. b = 0.5,
/// alpha = 1, beta = 0), and anything within this tolerance is treated as
/// critical rather than silently misclassified.
inline constexpr double kCriticalTolerance = 1e-12;

/// Validated, immutable parameter tuple of the random-trend diffusion model.
///
///   P(X_{n+1} = 1 | state, Y = y) = a + b * y * N/(N+M),
///   Y in {+1, -1, 0} with probabilities (alpha, beta, 1 - alpha - beta).
///
/// lambda2 = b*(alpha - beta) is computed once at construction and reused by
/// every regime-sensitive operation. Construct through validate_params().
class ModelParams {
 public:
  double a() const { return a_; }
  double b() const { return b_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::int64_t n0() const { return n0_; }
  std::int64_t m0() const { return m0_; }
  double lambda2() const { return lambda2_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  friend ModelParams validate_params(double a, double b, double alpha, double beta,
                                     std::int64_t n0, std::int64_t m0);
  ModelParams(double a, double b, double alpha, double beta, std::int64_t n0, std::int64_t m0)
      : a_(a), b_(b), alpha_(alpha), beta_(beta), n0_(n0), m0_(m0), lambda2_(b * (alpha - beta)) {}

  double a_, b_, alpha_, beta_;
  std::int64_t n0_, m0_;
  double lambda2_;
};

/// Validates a raw parameter tuple and derives lambda2.
///
/// Constraints: a, b, alpha, beta in [0,1]; alpha + beta <= 1; a + b <= 1;
/// b <= a whenever beta != 0; n0, m0 >= 0 with n0 + m0 >= 1. Together these
/// guarantee a + b*y*x in [0,1] for every admissible trend value y and
/// proportion x. Throws ConstraintViolation naming the failed constraint.
ModelParams validate_params(double a, double b, double alpha, double beta,
                            std::int64_t n0, std::int64_t m0);

/// Diffusive iff lambda2 < 1/2, critical iff lambda2 == 1/2 (within
/// kCriticalTolerance), superdiffusive above. The degenerate corner
/// lambda2 == 1 (reachable only with beta == 0) is reported superdiffusive;
/// spectral operations reject it separately.
Regime classify_regime(const ModelParams& params);

/// Decision counts after `step` decisions. n_count + m_count always equals
/// n0 + m0 + step.
struct PopulationState {
  std::int64_t n_count{0};
  std::int64_t m_count{0};
  std::int64_t step{0};

  double proportion_a() const {
    return static_cast<double>(n_count) / static_cast<double>(n_count + m_count);
  }

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

PopulationState initial_state(const ModelParams& params);

/// P(X = 1 | Y = trend, proportion) = a + b * trend * proportion.
/// `trend` must be -1, 0 or +1; `proportion` must lie in [0,1].
double conditional_success_prob(const ModelParams& params, int trend, double proportion);

/// Trend-averaged success probability a + lambda2 * N/(N+M).
double mean_success_prob(const ModelParams& params, const PopulationState& state);

struct Proportions {
  double p_a;
  double p_b;
};

/// Almost-sure limits of the decision proportions:
/// p_a = a/(1-lambda2), p_b = (1-a-lambda2)/(1-lambda2).
/// Throws DegenerateSpectrum at lambda2 == 1 where the limit degenerates.
Proportions limiting_proportions(const ModelParams& params);

}  // namespace trendlab
