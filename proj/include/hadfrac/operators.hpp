#pragma once

#include <utility>

#include "hadfrac/positive_function.hpp"
#include "hadfrac/quadrature.hpp"

namespace hadfrac {

/// Order and proportionality index of a fractional operator.
struct FracParams {
  double alpha = 1.0;
  double beta = 1.0;
  void validate() const;  // alpha in [0.05, 10], beta in (0, 1]
};

/// Exponent of the closed-form kernel input (ln t)^{lambda-1}.
struct PowerImageSpec {
  double lambda = 1.0;
  void validate() const;  // lambda in (0, 10]
};

/// Left-sided generalized proportional Hadamard integral with base point a:
///   (1 / (beta^alpha Gamma(alpha))) int_a^x
///     e^{((beta-1)/beta)(ln x - ln t)} (ln x - ln t)^{alpha-1} z(t) dt / t.
/// Computed on the canonical form via s = (ln x - ln t)/(ln x - ln a) with
/// the function's kinks mapped to quadrature breakpoints.  x = a gives 0.
OperatorValue hadamard_left(const PositiveFunction& z, double x, FracParams p,
                            double a = 1.0, double rtol = 1e-10);

/// Right-sided counterpart on [x, b].
OperatorValue hadamard_right(const PositiveFunction& z, double x, double b,
                             FracParams p, double rtol = 1e-10);

/// Left-sided generalized proportional Riemann-Liouville integral:
///   (1 / (beta^alpha Gamma(alpha))) int_a^x
///     e^{((beta-1)/beta)(x - t)} (x - t)^{alpha-1} z(t) dt.
OperatorValue rl_proportional_left(const PositiveFunction& z, double x,
                                   FracParams p, double a = 1.0,
                                   double rtol = 1e-10);

/// Right-sided counterpart on [x, b].
OperatorValue rl_proportional_right(const PositiveFunction& z, double x,
                                    FracParams p, double b,
                                    double rtol = 1e-10);

/// Classical (beta = 1) left Hadamard integral computed by an independent
/// route: direct panels in v = ln x - ln t without the canonical rescaling.
/// Reference implementation for the beta = 1 reduction checks.
OperatorValue classical_hadamard_left(const PositiveFunction& z, double x,
                                      double alpha, double a = 1.0,
                                      double rtol = 1e-10);

/// Classical (beta = 1) left Riemann-Liouville integral, same independent
/// style in v = x - t.
OperatorValue classical_rl_left(const PositiveFunction& z, double x,
                                double alpha, double a = 1.0,
                                double rtol = 1e-10);

/// Exact image of the kernel input under the left Hadamard operator
/// (base point 1):
///   Gamma(lambda) / (beta^alpha Gamma(alpha+lambda))
///     * e^{((beta-1)/beta) ln x} (ln x)^{alpha+lambda-1}.
double closed_form_power_image(double x, FracParams p, PowerImageSpec spec);

/// Evaluates the semigroup pair at x: first the nested value
/// H^{alpha,beta}(H^{lambda,beta} z)(x), then the direct H^{alpha+lambda,beta}
/// z(x).  The nested value uses genuine two-level quadrature: the outer
/// integral is split at the midpoint so that the inner image's u^lambda
/// endpoint factor becomes an exact Jacobi weight, and the smooth part of the
/// image is re-integrated at every outer node.
std::pair<OperatorValue, OperatorValue> semigroup_compose(
    const PositiveFunction& z, double x, FracParams outer, FracParams inner,
    double rtol = 1e-10);

}  // namespace hadfrac
