#pragma once

// Independent reference routes for the tests.  These deliberately use
// different algorithms (and a different Gamma implementation, std::tgamma)
// from the library so that agreement is evidence rather than tautology:
//  - product-trapezoid integration of s^{alpha-1} phi(s) on the graded mesh
//    s_j = (j/N)^{3/alpha}, with the weight integrated exactly per cell;
//  - a monomial-coefficient cubic Hermite evaluator for spline functions.

#include <cmath>
#include <cstddef>
#include <vector>

#include "hadfrac/positive_function.hpp"

namespace oracle {

/// integral_0^1 s^{alpha-1} phi(s) ds; phi continuous on [0, 1].
template <class F>
double graded_weighted_integral(double alpha, F&& phi, int N = 100000) {
  const double grading = 3.0 / alpha;
  long double acc = 0.0L;
  double s0 = 0.0;
  double f0 = phi(0.0);
  for (int j = 1; j <= N; ++j) {
    const double s1 = std::pow(double(j) / N, grading);
    const double f1 = phi(s1);
    // exact cell moments of the weight: m0 = int s^{a-1}, m1 = int s^a
    const double m0 =
        (std::pow(s1, alpha) - std::pow(s0, alpha)) / alpha;
    const double m1 = (std::pow(s1, alpha + 1.0) - std::pow(s0, alpha + 1.0)) /
                      (alpha + 1.0);
    const double slope = (f1 - f0) / (s1 - s0);
    acc += f0 * m0 + slope * (m1 - s0 * m0);
    s0 = s1;
    f0 = f1;
  }
  return double(acc);
}

/// Cubic Hermite through (u, y, d) in monomial form; different arithmetic
/// from the library's basis-function evaluation.
inline double hermite_monomial(const std::vector<double>& u,
                               const std::vector<double>& y,
                               const std::vector<double>& d, double t) {
  std::size_t i = 0;
  while (i + 2 < u.size() && t >= u[i + 1]) ++i;
  const double h = u[i + 1] - u[i];
  const double delta = (y[i + 1] - y[i]) / h;
  const double c2 = (3.0 * delta - 2.0 * d[i] - d[i + 1]) / h;
  const double c3 = (d[i] + d[i + 1] - 2.0 * delta) / (h * h);
  const double tau = t - u[i];
  return y[i] + tau * (d[i] + tau * (c2 + tau * c3));
}

/// Value of a library function via the independent evaluator.
inline double fn_value(const hadfrac::PositiveFunction& f, double t) {
  using K = hadfrac::PositiveFunction::Kind;
  const double u = std::log(t);
  if (f.kind() == K::Constant) return std::exp(f.lscale());
  if (f.kind() == K::PowerForm)
    return std::exp(f.lscale() - f.kappa() * u) *
           (f.mu() == 0.0 ? 1.0 : std::pow(u, f.mu()));
  return std::exp(hermite_monomial(f.knots(), f.logvals(), f.slopes(), u));
}

/// Left proportional Hadamard integral by the graded-mesh route, with
/// std::tgamma for the normalization.
inline double hadamard_left(const hadfrac::PositiveFunction& z, double x,
                            double alpha, double beta, int N = 100000) {
  const double L = std::log(x);
  const double kappa = (1.0 - beta) / beta;
  const auto phi = [&](double s) {
    return std::exp(-kappa * L * s) * fn_value(z, x * std::exp(-L * s));
  };
  const double pref =
      std::pow(L, alpha) / (std::pow(beta, alpha) * std::tgamma(alpha));
  return pref * graded_weighted_integral(alpha, phi, N);
}

}  // namespace oracle
