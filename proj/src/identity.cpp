#include "hadfrac/identity.hpp"

#include <cmath>

#include "hadfrac/generators.hpp"
#include "hadfrac/operators.hpp"

namespace hadfrac {

namespace {

const double kE = std::exp(1.0);
const double kE2 = std::exp(2.0);

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

IdentityResult closed_form_grid_check(double rtol) {
  IdentityResult res{"closed-form grid", 0.0, 1e-8, 0, false};
  const double alphas[] = {0.3, 0.5, 1.0, 1.7};
  const double betas[] = {0.25, 0.5, 1.0};
  const double lambdas[] = {1.0, 2.0, 2.5};
  const double xs[] = {1.5, kE, kE2};
  for (double a : alphas)
    for (double b : betas)
      for (double lam : lambdas)
        for (double x : xs) {
          const FracParams p{a, b};
          const PositiveFunction z = PositiveFunction::power_input(lam, b, kE2);
          const double want = closed_form_power_image(x, p, {lam});
          const double got = hadamard_left(z, x, p, 1.0, rtol).value;
          res.max_rel_err = std::max(res.max_rel_err, rel_err(got, want));
          ++res.count;
        }
  res.pass = res.max_rel_err <= res.tolerance;
  return res;
}

IdentityResult semigroup_check(int trials, std::uint64_t seed, double rtol) {
  IdentityResult res{"semigroup composition", 0.0, 1e-6, 0, false};
  const double betas[] = {0.25, 0.5, 1.0};
  const double xs[] = {1.5, kE, kE2};
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, 101, i));
    const PositiveFunction z = random_spline(rng);
    const FracParams outer{rng.uniform(0.3, 2.2), betas[rng.uniform_int(3)]};
    const FracParams inner{rng.uniform(0.3, 2.2), outer.beta};
    const double x = xs[rng.uniform_int(3)];
    const auto [composed, direct] = semigroup_compose(z, x, outer, inner, rtol);
    res.max_rel_err =
        std::max(res.max_rel_err, rel_err(composed.value, direct.value));
    ++res.count;
  }
  res.pass = res.max_rel_err <= res.tolerance;
  return res;
}

IdentityResult beta1_reduction_check(int trials, std::uint64_t seed,
                                     double rtol) {
  IdentityResult res{"beta=1 Hadamard reduction", 0.0, 1e-10, 0, false};
  const double xs[] = {1.5, kE, kE2};
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, 102, i));
    const PositiveFunction z = random_spline(rng);
    const double alpha = rng.uniform(0.2, 3.0);
    const double x = xs[rng.uniform_int(3)];
    const double got = hadamard_left(z, x, {alpha, 1.0}, 1.0, rtol).value;
    const double want = classical_hadamard_left(z, x, alpha, 1.0, rtol).value;
    res.max_rel_err = std::max(res.max_rel_err, rel_err(got, want));
    ++res.count;
  }
  res.pass = res.max_rel_err <= res.tolerance;
  return res;
}

IdentityResult beta1_rl_reduction_check(int trials, std::uint64_t seed,
                                        double rtol) {
  IdentityResult res{"beta=1 RL reduction", 0.0, 1e-10, 0, false};
  const double xs[] = {1.5, 3.0, 6.5};
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, 103, i));
    const PositiveFunction z = random_spline(rng);
    const double alpha = rng.uniform(0.2, 3.0);
    const double x = xs[rng.uniform_int(3)];
    const double got = rl_proportional_left(z, x, {alpha, 1.0}, 1.0, rtol).value;
    const double want = classical_rl_left(z, x, alpha, 1.0, rtol).value;
    res.max_rel_err = std::max(res.max_rel_err, rel_err(got, want));
    ++res.count;
  }
  res.pass = res.max_rel_err <= res.tolerance;
  return res;
}

std::vector<IdentityResult> run_identity_checks(int semigroup_trials,
                                                int reduction_trials,
                                                std::uint64_t seed) {
  std::vector<IdentityResult> out;
  out.push_back(closed_form_grid_check());
  out.push_back(semigroup_check(semigroup_trials, seed));
  out.push_back(beta1_reduction_check(reduction_trials, seed));
  out.push_back(beta1_rl_reduction_check(reduction_trials, seed));
  return out;
}

}  // namespace hadfrac
