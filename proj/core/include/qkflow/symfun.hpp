#pragma once

#include <Eigen/Dense>

#include "qkflow/errors.hpp"

namespace qkflow::symfun {

/// Principal-curvature tuple lambda = (lambda_1, ..., lambda_n).
/// Convex contexts expect entries >= 0, strictly convex contexts > 0;
/// constructors do not enforce this, the quotient routines do.
using CurvatureVector = Eigen::VectorXd;

/// Value and gradient of the quotient Q_k = S_k / S_{k-1} at one lambda.
/// The gradient entries are d(Q_k)/d(lambda_i); degree-1 homogeneity gives
/// the Euler identity  sum_i lambda_i * gradient_i == value.
struct SymQuotientJet {
    double value = 0.0;
    Eigen::VectorXd gradient;
    int k = 0;
};

/// All elementary symmetric polynomials S_0..S_n of lambda in one pass,
/// via the incremental product recurrence on prod_i (1 + lambda_i x).
/// Entries are sorted descending before evaluation so permutations of
/// lambda produce bit-identical results.
[[nodiscard]] Eigen::VectorXd all_elementary_symmetric(const CurvatureVector& lambda);

/// S_k(lambda). k = 0 returns 1 (empty product). Throws DomainError for
/// k outside [0, n].
[[nodiscard]] double elementary_symmetric(const CurvatureVector& lambda, int k);

/// Relative tolerance under which S_{k-1} counts as degenerate.
inline constexpr double kDenominatorTol = 1e-14;

/// Q_k(lambda) = S_k / S_{k-1}, positively homogeneous of degree one.
/// Throws DegenerateDenominatorError when S_{k-1} <= tol * max(1, S_{k-1}(|lambda|)).
[[nodiscard]] double qk_quotient(const CurvatureVector& lambda, int k);

/// Q_k and its gradient. Entry p uses the reduced polynomials S_{j,p}
/// (terms of S_j without lambda_p):
///   dQ_k/dlambda_p = (S_{k-1,p}^2 - S_{k,p} S_{k-2,p}) / S_{k-1}^2.
[[nodiscard]] SymQuotientJet qk_gradient(const CurvatureVector& lambda, int k);

/// Lower bound on gradient entry p:
///   dQ_k/dlambda_p >= n/(k(n-k+1)) * (S_{k-1,p}/S_{k-1})^2.
[[nodiscard]] double dieter_lower_bound(const CurvatureVector& lambda, int k, int p);

/// Both sides of  sum_i dQ_k/dlambda_i * lambda_i^2 >= k/(n-k+1) * Q_k^2.
struct PositivityIdentity {
    double lhs;
    double rhs;
};
[[nodiscard]] PositivityIdentity positivity_identity_check(const CurvatureVector& lambda, int k);

/// Q_k for the axisymmetric multiplicity pattern lambda = (kr, kt, ..., kt)
/// with n-1 copies of kt. The common power of kt between S_k and S_{k-1}
/// is cancelled analytically, so the value extends continuously to kt -> 0
/// as long as kr stays positive (and to 0 when both vanish, k >= 2).
[[nodiscard]] double qk_axisymmetric(double kr, double kt, int n, int k);

} // namespace qkflow::symfun
