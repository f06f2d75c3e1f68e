#pragma once

namespace hadfrac {

/// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
/// with the reflection formula below 0.5.  Intended envelope here is
/// arguments in (0, 20.5]; relative error is below 1e-13 on that range.
double gamma_fn(double x);

/// Test hook: all subsequent gamma_fn results are scaled by (1 + rel).
/// Negative controls use this to confirm that identity checks really
/// exercise the gamma path.  Normal operation leaves it at 0.
void set_gamma_perturbation(double rel);

/// Current value of the perturbation hook.
double gamma_perturbation();

}  // namespace hadfrac
