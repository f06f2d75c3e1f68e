#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hadfrac {

/// Outcome of one identity sweep: worst relative error over the sweep, the
/// tolerance it was judged against, and the number of comparisons made.
struct IdentityResult {
  std::string name;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  int count = 0;
  bool pass = false;
};

/// Quadrature vs the exact closed-form image of the kernel input over the
/// grid alpha in {0.3, 0.5, 1, 1.7} x beta in {0.25, 0.5, 1}
/// x lambda in {1, 2, 2.5} x x in {1.5, e, e^2}.  Tolerance 1e-8.
IdentityResult closed_form_grid_check(double rtol = 1e-10);

/// Nested vs direct operator application on random splines.  Tolerance 1e-6
/// (the inner image is itself interpolated).
IdentityResult semigroup_check(int trials = 100, std::uint64_t seed = 42,
                               double rtol = 1e-10);

/// Proportional operator at beta = 1 vs the independent classical Hadamard
/// route on random splines.  Tolerance 1e-10.
IdentityResult beta1_reduction_check(int trials = 50, std::uint64_t seed = 42,
                                     double rtol = 1e-11);

/// Proportional RL at beta = 1 vs the independent classical RL route.
IdentityResult beta1_rl_reduction_check(int trials = 50,
                                        std::uint64_t seed = 42,
                                        double rtol = 1e-11);

/// Runs all of the above.
std::vector<IdentityResult> run_identity_checks(int semigroup_trials,
                                                int reduction_trials,
                                                std::uint64_t seed);

}  // namespace hadfrac
