#include "hadfrac/gamma.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace hadfrac {

namespace {

std::atomic<double> g_perturb{0.0};

// Lanczos coefficients for g = 7, n = 9 (Godfrey's table).
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos(double x) {
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (std::sin(M_PI * x) * lanczos(1.0 - x));
  }
  x -= 1.0;
  double acc = kCoef[0];
  for (int i = 1; i < 9; ++i) acc += kCoef[i] / (x + i);
  const double t = x + kG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: non-positive integer argument");
  const double v = lanczos(x);
  const double p = g_perturb.load(std::memory_order_relaxed);
  return (p == 0.0) ? v : v * (1.0 + p);
}

void set_gamma_perturbation(double rel) {
  g_perturb.store(rel, std::memory_order_relaxed);
}

double gamma_perturbation() { return g_perturb.load(std::memory_order_relaxed); }

}  // namespace hadfrac
