// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "trendlab/linalg.hpp"
#include "trendlab/params.hpp"

namespace trendlab {

/// Spectral decomposition of the mean replacement matrix A. The eigenvalues
/// are always lambda1 = 1 and lambda2 = b*(alpha-beta); right eigenvectors
/// v1, v2 and left eigenvectors u1, u2 are normalised so that u_i . v_j is
/// the Kronecker delta, u1 = (1,1), and v1 has non-negative entries summing
/// to one (it is the vector of limiting proportions).
struct EigenStructure {
  double lambda1;
  double lambda2;
  Vector2 v1, v2;
  Vector2 u1, u2;

  /// Spectral projector v1 u1^T onto the principal eigendirection.
  Matrix2 principal_projector() const { return Matrix2::outer(v1, u1); }
  /// Spectral projector v2 u2^T onto the secondary eigendirection.
  Matrix2 secondary_projector() const { return Matrix2::outer(v2, u2); }
};

/// First three raw moments of the first component of the superdiffusive
/// almost-sure limit, for the elephant-walk parameterisation (beta = 0,
/// alpha = (1-2a)/b, a single initial A decision). The second component is
/// the negation of the first.
struct WMoments {
  double m1;
  double m2;
  double m3;
};

/// Mean replacement matrix A = [[a+l2, a], [1-a-l2, 1-a]]; column-stochastic.
Matrix2 mean_replacement_matrix(const ModelParams& params);

/// Closed-form eigendecomposition of A. Throws DegenerateSpectrum when
/// |1 - lambda2| < 1e-12 (the repeated-eigenvalue corner lambda2 == 1).
EigenStructure eigenstructure(const ModelParams& params);

/// Diagonal second-moment matrix of the replacement vectors,
/// B = diag(v1) = diag(a/(1-l2), (1-a-l2)/(1-l2)); trace 1.
Matrix2 second_moment_matrix(const ModelParams& params);

/// Kernel of the limit covariance integral,
/// psi(s) = e^{sA} - v1 (1 1) int_0^s e^{tA} dt, evaluated in closed form
/// through the spectral projectors: psi(s) = v1 u1^T + e^{lambda2 s} v2 u2^T.
/// psi(0) is the identity.
Matrix2 covariance_kernel(const ModelParams& params, double s);

/// Scalar sigma^2 = a(1-a-l2) / ((1-l2)^2 (1-2 l2)) of the diffusive limit
/// covariance. Throws RegimeMismatch outside the diffusive regime.
double diffusive_variance_scalar(const ModelParams& params);

/// Diffusive limit covariance Sigma_1 = sigma^2 [[1,-1],[-1,1]], closed form.
Matrix2 diffusive_covariance(const ModelParams& params);

/// Sigma_1 evaluated independently as
///   int_0^inf psi(s) B psi(s)^T e^{-s} ds  -  v1 v1^T
/// by adaptive Gauss-Laguerre quadrature (node count doubled from 64 until
/// two successive estimates agree within tol/10, cap 4096). Agrees with the
/// closed form within tol. Throws RegimeMismatch outside the diffusive
/// regime and QuadratureFailure if the cap is hit first.
Matrix2 diffusive_covariance_quadrature(const ModelParams& params, double tol);

/// Scalar 2a(1-2a) of the critical limit covariance.
/// Throws RegimeMismatch outside the critical regime.
double critical_variance_scalar(const ModelParams& params);

/// Critical limit covariance Sigma_2, computed as
///   (I - T1) P B P^T (I - T1)^T,  T1 = v1 u1^T,  P = v2 u2^T,
/// and cross-checked against 2a(1-2a) [[1,-1],[-1,1]] within 1e-12.
Matrix2 critical_covariance(const ModelParams& params);

/// Covariance E(W_s W_t^T) of the functional limit, 0 < s <= t.
/// Diffusive: s (t/s)^{lambda2} Sigma_1; also evaluated as
/// s Sigma_1 e^{log(t/s) A^T} and asserted equal within 1e-10.
/// Critical: 2 s a (1-2a) [[1,-1],[-1,1]] (no t-dependence).
/// Throws RegimeMismatch in the superdiffusive regime and DomainError for
/// s <= 0 or t < s.
Matrix2 functional_covariance(const ModelParams& params, double s, double t);

/// Raw moments of the superdiffusive limit for the elephant-walk
/// parameterisation, valid for 0 < a < 1/4:
///   m1 = 1 / (2 Gamma(2(1-a)))
///   m2 = (1 + (1-2a)^2/(1-4a)) / (2 Gamma(3-4a))
///   m3 = (1 + (5-2a)(1-2a)^2/(1-4a)) / (2 Gamma(2(2-3a)))
/// Throws DomainError outside (0, 1/4).
WMoments elephant_limit_moments(double a);

struct BhwEmbedding {
  ModelParams params;
  /// p(1-p)/(2 theta - 1) when theta > 1/2 (the diffusive variance of the
  /// embedded chain); absent at and below theta = 1/2.
  std::optional<double> heyde_variance;
};

/// Embeds the two-parameter preference-mixture chain
///   P(X_{n+1} = 1 | state) = theta p + (1-theta) N/(N+M)
/// as params (a = theta p, b = 1 - theta, alpha = 1, beta = 0).
/// Requires 0 < theta <= 1 and 0 <= p <= 1.
BhwEmbedding bhw_embedding(double theta, double p, std::int64_t n0 = 1, std::int64_t m0 = 1);

}  // namespace trendlab
