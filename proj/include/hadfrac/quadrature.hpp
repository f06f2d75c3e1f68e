#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadfrac {

/// Nodes/weights for the canonical singular integral
///   int_0^1 s^{alpha-1} phi(s) ds  ~=  sum_i w_i phi(s_i).
/// alpha = 1 degenerates to Gauss-Legendre on [0, 1].
struct QuadratureRule {
  double alpha = 1.0;
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Thrown when an integrand produces a non-finite value at a node.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(double s)
      : std::runtime_error("non-finite integrand value at s = " +
                           std::to_string(s)),
        node(s) {}
  double node;
};

/// Gauss-Jacobi rule for weight s^{alpha-1} on [0, 1], built by Golub-Welsch
/// on the closed-form shifted-Jacobi recurrence and cached per (alpha, n).
/// The returned reference stays valid for the process lifetime.
/// Accepts alpha in [0.05, 20.5) so composed operator orders (semigroup
/// direct route, closed-form denominators) fit; n in [1, 512].
const QuadratureRule& build_jacobi_rule(double alpha, int n);

/// sum_i w_i phi(s_i); throws NonFiniteIntegrand on a bad node value.
double integrate_weighted(const std::function<double(double)>& phi,
                          const QuadratureRule& rule);

/// Result of an adaptive integration (also reused as the operator value
/// carrier: value with an error estimate and the effort that produced it).
struct OperatorValue {
  double value = 0.0;
  double err_est = 0.0;
  int n_used = 0;
  bool converged = false;
};

/// Adaptive evaluation of int_0^1 s^{alpha-1} phi(s) ds by doubling the node
/// count n = 16, 32, ..., 512 until |I_2n - I_n| <= rtol * |I_2n|.  err_est
/// is always the last doubling difference.
///
/// Optional interior breakpoints split [0, 1] into panels: the singular panel
/// [0, c_1] is handled by a scaled canonical rule, the rest by Gauss-Legendre
/// with the weight folded into the integrand.  Panels aligned with integrand
/// kinks restore fast convergence for piecewise-smooth phi.
OperatorValue integrate_adaptive(const std::function<double(double)>& phi,
                                 double alpha, double rtol,
                                 std::span<const double> breakpoints = {});

}  // namespace hadfrac
