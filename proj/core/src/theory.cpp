// SPDX-License-Identifier: Apache-2.0
#include "trendlab/theory.hpp"

#include <cmath>
#include <sstream>

#include "trendlab/errors.hpp"
#include "trendlab/gamma.hpp"
#include "trendlab/quadrature.hpp"

namespace trendlab {
namespace {

constexpr Matrix2 kFluctuationPattern{1.0, -1.0, -1.0, 1.0};

void require_regime(const ModelParams& params, Regime expected, const char* op) {
  const Regime actual = classify_regime(params);
  if (actual != expected) {
    std::ostringstream msg;
    msg << op << ": requires the " << regime_name(expected) << " regime, but lambda2 = "
        << params.lambda2() << " is " << regime_name(actual);
    throw RegimeMismatch(msg.str());
  }
}

}  // namespace

Matrix2 mean_replacement_matrix(const ModelParams& params) {
  const double a = params.a();
  const double l2 = params.lambda2();
  return Matrix2{a + l2, a, 1.0 - a - l2, 1.0 - a};
}

EigenStructure eigenstructure(const ModelParams& params) {
  const double a = params.a();
  const double l2 = params.lambda2();
  if (std::fabs(1.0 - l2) < 1e-12) {
    throw DegenerateSpectrum("eigenstructure: lambda2 == 1, eigenvalue collision with lambda1");
  }
  const double gap = 1.0 - l2;
  EigenStructure eig;
  eig.lambda1 = 1.0;
  eig.lambda2 = l2;
  eig.v1 = Vector2{a / gap, (1.0 - a - l2) / gap};
  eig.v2 = Vector2{1.0 / gap, -1.0 / gap};
  eig.u1 = Vector2{1.0, 1.0};
  eig.u2 = Vector2{1.0 - a - l2, -a};
  return eig;
}

Matrix2 second_moment_matrix(const ModelParams& params) {
  const EigenStructure eig = eigenstructure(params);
  return Matrix2::diagonal(eig.v1.x, eig.v1.y);
}

Matrix2 covariance_kernel(const ModelParams& params, double s) {
  if (s < 0.0) {
    throw DomainError("covariance_kernel: s must be non-negative");
  }
  const EigenStructure eig = eigenstructure(params);
  return eig.principal_projector() + std::exp(eig.lambda2 * s) * eig.secondary_projector();
}

double diffusive_variance_scalar(const ModelParams& params) {
  require_regime(params, Regime::kDiffusive, "diffusive_variance_scalar");
  const double a = params.a();
  const double l2 = params.lambda2();
  const double gap = 1.0 - l2;
  return a * (1.0 - a - l2) / (gap * gap * (1.0 - 2.0 * l2));
}

Matrix2 diffusive_covariance(const ModelParams& params) {
  return diffusive_variance_scalar(params) * kFluctuationPattern;
}

Matrix2 diffusive_covariance_quadrature(const ModelParams& params, double tol) {
  require_regime(params, Regime::kDiffusive, "diffusive_covariance_quadrature");
  if (!(tol > 0.0)) {
    throw DomainError("diffusive_covariance_quadrature: tol must be positive");
  }
  const EigenStructure eig = eigenstructure(params);
  const Matrix2 b = second_moment_matrix(params);
  const Matrix2 p1 = eig.principal_projector();
  const Matrix2 p2 = eig.secondary_projector();
  const Matrix2 stationary = Matrix2::outer(eig.v1, eig.v1);

  const auto estimate = [&](int order) {
    const GaussLaguerreRule& rule = gauss_laguerre(order);
    Matrix2 sum = Matrix2::zero();
    for (int i = 0; i < rule.order; ++i) {
      const double es = std::exp(eig.lambda2 * rule.nodes[i]);
      const Matrix2 kernel = p1 + es * p2;
      sum = sum + rule.weights[i] * (kernel * b * kernel.transpose());
    }
    return sum - stationary;
  };

  constexpr int kMaxOrder = 4096;
  Matrix2 previous = estimate(64);
  for (int order = 128; order <= kMaxOrder; order *= 2) {
    const Matrix2 current = estimate(order);
    if (max_abs_diff(current, previous) < tol / 10.0) {
      return current;
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "diffusive_covariance_quadrature: not converged to tol = " << tol
      << " at " << kMaxOrder << " nodes (lambda2 = " << params.lambda2() << ")";
  throw QuadratureFailure(msg.str());
}

double critical_variance_scalar(const ModelParams& params) {
  require_regime(params, Regime::kCritical, "critical_variance_scalar");
  const double a = params.a();
  return 2.0 * a * (1.0 - 2.0 * a);
}

Matrix2 critical_covariance(const ModelParams& params) {
  require_regime(params, Regime::kCritical, "critical_covariance");
  const EigenStructure eig = eigenstructure(params);
  const Matrix2 b = second_moment_matrix(params);
  const Matrix2 t1 = eig.principal_projector();
  const Matrix2 p = eig.secondary_projector();
  const Matrix2 centered = Matrix2::identity() - t1;
  const Matrix2 route_spectral = centered * p * b * p.transpose() * centered.transpose();
  const Matrix2 route_scalar = critical_variance_scalar(params) * kFluctuationPattern;
  if (max_abs_diff(route_spectral, route_scalar) > 1e-12) {
    throw Error("critical_covariance: spectral and scalar routes disagree beyond 1e-12");
  }
  return route_spectral;
}

Matrix2 functional_covariance(const ModelParams& params, double s, double t) {
  if (!(s > 0.0) || t < s) {
    throw DomainError("functional_covariance: requires 0 < s <= t");
  }
  const Regime regime = classify_regime(params);
  if (regime == Regime::kSuperdiffusive) {
    throw RegimeMismatch("functional_covariance: undefined in the superdiffusive regime");
  }
  if (regime == Regime::kCritical) {
    const double a = params.a();
    return (2.0 * s * a * (1.0 - 2.0 * a)) * kFluctuationPattern;
  }
  const Matrix2 sigma1 = diffusive_covariance(params);
  const double ratio = t / s;
  const Matrix2 direct = (s * std::pow(ratio, params.lambda2())) * sigma1;

  // independent spectral route: s Sigma_1 e^{log(t/s) A^T}
  const EigenStructure eig = eigenstructure(params);
  const double log_ratio = std::log(ratio);
  const Matrix2 exp_at = std::exp(log_ratio) * eig.principal_projector().transpose() +
                         std::exp(eig.lambda2 * log_ratio) * eig.secondary_projector().transpose();
  const Matrix2 spectral = s * (sigma1 * exp_at);
  if (max_abs_diff(direct, spectral) > 1e-10) {
    throw Error("functional_covariance: power-law and semigroup routes disagree beyond 1e-10");
  }
  return direct;
}

WMoments elephant_limit_moments(double a) {
  if (!(a > 0.0 && a < 0.25)) {
    throw DomainError("elephant_limit_moments: requires 0 < a < 1/4");
  }
  const double one_minus_2a = 1.0 - 2.0 * a;
  const double one_minus_4a = 1.0 - 4.0 * a;
  WMoments w;
  w.m1 = 1.0 / (2.0 * gamma_fn(2.0 * (1.0 - a)));
  w.m2 = (1.0 + one_minus_2a * one_minus_2a / one_minus_4a) / (2.0 * gamma_fn(3.0 - 4.0 * a));
  w.m3 = (1.0 + (5.0 - 2.0 * a) * one_minus_2a * one_minus_2a / one_minus_4a) /
         (2.0 * gamma_fn(2.0 * (2.0 - 3.0 * a)));
  return w;
}

BhwEmbedding bhw_embedding(double theta, double p, std::int64_t n0, std::int64_t m0) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw DomainError("bhw_embedding: theta must lie in (0, 1]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("bhw_embedding: p must lie in [0, 1]");
  }
  BhwEmbedding out{validate_params(theta * p, 1.0 - theta, 1.0, 0.0, n0, m0), std::nullopt};
  if (theta > 0.5) {
    out.heyde_variance = p * (1.0 - p) / (2.0 * theta - 1.0);
  }
  return out;
}

}  // namespace trendlab
