#include "hadfrac/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hadfrac/gamma.hpp"

namespace hadfrac {

namespace {

constexpr double kDomainTol = 1e-9;

// Operator-level envelope: composed orders (semigroup direct route) may
// exceed the user-facing FracParams cap, so the integral drivers accept
// alpha up to the rule-builder limit.
void check_operator_params(double alpha, double beta) {
  if (!(alpha >= 0.05 && alpha <= 20.4))
    throw std::invalid_argument("operator alpha outside [0.05, 20.4]");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("operator beta outside (0, 1]");
}

double kappa_of(double beta) { return (1.0 - beta) / beta; }

// Maps the function's interior kinks (log-domain abscissae in (ulo, uhi))
// into canonical s-coordinates via s = (uref - u)/L or (u - uref)/L.
std::vector<double> kink_cuts(const PositiveFunction& z, double ulo, double uhi,
                              double uref, double L, bool flip) {
  std::vector<double> cuts;
  for (double u : z.kinks()) {
    if (u <= ulo || u >= uhi) continue;
    const double s = flip ? (uref - u) / L : (u - uref) / L;
    if (s > 1e-12 && s < 1.0 - 1e-12) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

void FracParams::validate() const {
  if (!(alpha >= 0.05 && alpha <= 10.0))
    throw std::invalid_argument("FracParams: alpha outside [0.05, 10]");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("FracParams: beta outside (0, 1]");
}

void PowerImageSpec::validate() const {
  if (!(lambda > 0.0 && lambda <= 10.0))
    throw std::invalid_argument("PowerImageSpec: lambda outside (0, 10]");
}

OperatorValue hadamard_left(const PositiveFunction& z, double x, FracParams p,
                            double a, double rtol) {
  check_operator_params(p.alpha, p.beta);
  if (!(a >= 1.0 - kDomainTol))
    throw std::domain_error("hadamard_left: base point a must be >= 1");
  if (!(x >= a)) throw std::domain_error("hadamard_left: requires x >= a");
  if (std::log(x) > z.log_upper() + kDomainTol)
    throw std::domain_error("hadamard_left: x beyond the function domain");
  if (x == a) return {0.0, 0.0, 0, true};

  const double lx = std::log(x);
  const double la = std::log(std::max(a, 1.0));
  const double L = lx - la;
  const double kap = kappa_of(p.beta);
  const double U = z.log_upper();
  const std::vector<double> cuts = kink_cuts(z, la, lx, lx, L, true);

  auto phi = [&](double s) {
    double u = lx - L * s;
    if (u < 0.0) u = 0.0;
    if (u > U) u = U;
    return std::exp(-kap * L * s + z.log_value_u(u));
  };
  OperatorValue r = integrate_adaptive(phi, p.alpha, rtol, cuts);
  const double pref = std::pow(L / p.beta, p.alpha) / gamma_fn(p.alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

OperatorValue hadamard_right(const PositiveFunction& z, double x, double b,
                             FracParams p, double rtol) {
  check_operator_params(p.alpha, p.beta);
  if (!(x >= 1.0 - kDomainTol))
    throw std::domain_error("hadamard_right: requires x >= 1");
  if (!(b >= x)) throw std::domain_error("hadamard_right: requires b >= x");
  if (std::log(b) > z.log_upper() + kDomainTol)
    throw std::domain_error("hadamard_right: b beyond the function domain");
  if (b == x) return {0.0, 0.0, 0, true};

  const double lx = std::log(std::max(x, 1.0));
  const double lb = std::log(b);
  const double L = lb - lx;
  const double kap = kappa_of(p.beta);
  const double U = z.log_upper();
  const std::vector<double> cuts = kink_cuts(z, lx, lb, lx, L, false);

  auto phi = [&](double s) {
    double u = lx + L * s;
    if (u < 0.0) u = 0.0;
    if (u > U) u = U;
    return std::exp(-kap * L * s + z.log_value_u(u));
  };
  OperatorValue r = integrate_adaptive(phi, p.alpha, rtol, cuts);
  const double pref = std::pow(L / p.beta, p.alpha) / gamma_fn(p.alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

namespace {

void check_rl_domain(const PositiveFunction& z, double lo, double hi,
                     const char* who) {
  if (lo < 1.0 - kDomainTol || std::log(hi) > z.log_upper() + kDomainTol)
    throw std::domain_error(std::string(who) +
                            ": interval outside the function domain");
}

}  // namespace

OperatorValue rl_proportional_left(const PositiveFunction& z, double x,
                                   FracParams p, double a, double rtol) {
  check_operator_params(p.alpha, p.beta);
  if (!(a > 0.0) || !(x >= a))
    throw std::domain_error("rl_proportional_left: requires 0 < a <= x");
  check_rl_domain(z, a, x, "rl_proportional_left");
  if (x == a) return {0.0, 0.0, 0, true};

  const double L = x - a;
  const double kap = kappa_of(p.beta);
  std::vector<double> cuts;
  for (double u : z.kinks()) {
    const double t = std::exp(u);
    if (t <= a || t >= x) continue;
    const double s = (x - t) / L;
    if (s > 1e-12 && s < 1.0 - 1e-12) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());

  auto phi = [&](double s) {
    double t = x - L * s;
    if (t < a) t = a;
    return std::exp(-kap * L * s) * z.value(t);
  };
  OperatorValue r = integrate_adaptive(phi, p.alpha, rtol, cuts);
  const double pref = std::pow(L / p.beta, p.alpha) / gamma_fn(p.alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

OperatorValue rl_proportional_right(const PositiveFunction& z, double x,
                                    FracParams p, double b, double rtol) {
  check_operator_params(p.alpha, p.beta);
  if (!(x > 0.0) || !(b >= x))
    throw std::domain_error("rl_proportional_right: requires 0 < x <= b");
  check_rl_domain(z, x, b, "rl_proportional_right");
  if (b == x) return {0.0, 0.0, 0, true};

  const double L = b - x;
  const double kap = kappa_of(p.beta);
  std::vector<double> cuts;
  for (double u : z.kinks()) {
    const double t = std::exp(u);
    if (t <= x || t >= b) continue;
    const double s = (t - x) / L;
    if (s > 1e-12 && s < 1.0 - 1e-12) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());

  auto phi = [&](double s) {
    double t = x + L * s;
    if (t > b) t = b;
    return std::exp(-kap * L * s) * z.value(t);
  };
  OperatorValue r = integrate_adaptive(phi, p.alpha, rtol, cuts);
  const double pref = std::pow(L / p.beta, p.alpha) / gamma_fn(p.alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

namespace {

// Composite pass for int_0^L v^{alpha-1} psi(v) dv directly in v, without
// the canonical [0,1] rescaling.  Kept separate from integrate_adaptive so
// the classical (beta = 1) routes form an independent arithmetic path.
double v_domain_pass(const std::function<double(double)>& psi, double alpha,
                     double L, const std::vector<double>& cuts, int n) {
  double acc = 0.0;
  const double c1 = cuts.empty() ? L : cuts.front();
  {
    const QuadratureRule& rule = build_jacobi_rule(alpha, n);
    double panel = 0.0;
    for (int i = 0; i < n; ++i) panel += rule.weights[i] * psi(c1 * rule.nodes[i]);
    acc += std::pow(c1, alpha) * panel;
  }
  const QuadratureRule& leg = build_jacobi_rule(1.0, n);
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const double a = cuts[j];
    const double b = (j + 1 < cuts.size()) ? cuts[j + 1] : L;
    const double len = b - a;
    double panel = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = a + len * leg.nodes[i];
      panel += leg.weights[i] * std::pow(v, alpha - 1.0) * psi(v);
    }
    acc += len * panel;
  }
  return acc;
}

OperatorValue v_domain_adaptive(const std::function<double(double)>& psi,
                                double alpha, double L,
                                std::vector<double> cuts, double rtol) {
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> cleaned;
  for (double c : cuts) {
    if (c <= 1e-12 * L || c >= L * (1.0 - 1e-12)) continue;
    if (!cleaned.empty() && c - cleaned.back() < 1e-12 * L) continue;
    cleaned.push_back(c);
  }
  OperatorValue out;
  double prev = v_domain_pass(psi, alpha, L, cleaned, 16);
  out.value = prev;
  out.n_used = 16 * int(cleaned.size() + 1);
  for (int n = 32; n <= 512; n *= 2) {
    const double cur = v_domain_pass(psi, alpha, L, cleaned, n);
    const double diff = std::abs(cur - prev);
    out.value = cur;
    out.err_est = diff;
    out.n_used = n * int(cleaned.size() + 1);
    const double ref = std::abs(cur);
    if (diff <= rtol * (ref > 0.0 ? ref : 1.0)) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  return out;
}

}  // namespace

OperatorValue classical_hadamard_left(const PositiveFunction& z, double x,
                                      double alpha, double a, double rtol) {
  check_operator_params(alpha, 1.0);
  if (!(a >= 1.0 - kDomainTol))
    throw std::domain_error("classical_hadamard_left: base point a must be >= 1");
  if (!(x >= a)) throw std::domain_error("classical_hadamard_left: requires x >= a");
  if (std::log(x) > z.log_upper() + kDomainTol)
    throw std::domain_error("classical_hadamard_left: x beyond the function domain");
  if (x == a) return {0.0, 0.0, 0, true};

  const double lx = std::log(x);
  const double la = std::log(std::max(a, 1.0));
  const double L = lx - la;
  const double U = z.log_upper();
  std::vector<double> cuts;
  for (double u : z.kinks())
    if (u > la && u < lx) cuts.push_back(lx - u);

  auto psi = [&](double v) {
    double u = lx - v;
    if (u < 0.0) u = 0.0;
    if (u > U) u = U;
    return std::exp(z.log_value_u(u));
  };
  OperatorValue r = v_domain_adaptive(psi, alpha, L, std::move(cuts), rtol);
  const double pref = 1.0 / gamma_fn(alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

OperatorValue classical_rl_left(const PositiveFunction& z, double x,
                                double alpha, double a, double rtol) {
  check_operator_params(alpha, 1.0);
  if (!(a > 0.0) || !(x >= a))
    throw std::domain_error("classical_rl_left: requires 0 < a <= x");
  check_rl_domain(z, a, x, "classical_rl_left");
  if (x == a) return {0.0, 0.0, 0, true};

  const double L = x - a;
  std::vector<double> cuts;
  for (double u : z.kinks()) {
    const double t = std::exp(u);
    if (t > a && t < x) cuts.push_back(x - t);
  }
  auto psi = [&](double v) {
    double t = x - v;
    if (t < a) t = a;
    return z.value(t);
  };
  OperatorValue r = v_domain_adaptive(psi, alpha, L, std::move(cuts), rtol);
  const double pref = 1.0 / gamma_fn(alpha);
  r.value *= pref;
  r.err_est *= pref;
  return r;
}

double closed_form_power_image(double x, FracParams p, PowerImageSpec spec) {
  p.validate();
  spec.validate();
  if (!(x > 1.0))
    throw std::domain_error("closed_form_power_image: requires x > 1");
  const double L = std::log(x);
  const double kap = kappa_of(p.beta);
  return gamma_fn(spec.lambda) /
         (std::pow(p.beta, p.alpha) * gamma_fn(p.alpha + spec.lambda)) *
         std::exp(-kap * L) * std::pow(L, p.alpha + spec.lambda - 1.0);
}

std::pair<OperatorValue, OperatorValue> semigroup_compose(
    const PositiveFunction& z, double x, FracParams outer, FracParams inner,
    double rtol) {
  outer.validate();
  inner.validate();
  if (std::abs(outer.beta - inner.beta) > 1e-12)
    throw std::invalid_argument("semigroup_compose: beta indices must match");
  if (!(x > 1.0)) throw std::domain_error("semigroup_compose: requires x > 1");
  if (std::log(x) > z.log_upper() + kDomainTol)
    throw std::domain_error("semigroup_compose: x beyond the function domain");

  const double beta = outer.beta;
  const double kap = kappa_of(beta);
  const double lam = inner.alpha;
  const double L = std::log(x);

  // Inner image in the factored form
  //   W(u) = [u^lam / (beta^lam Gamma(lam))] Q(u),
  //   Q(u) = int_0^1 sigma^{lam-1} e^{-kappa u sigma} zeta(u(1-sigma)) dsigma,
  // with the smooth part Q re-integrated at every outer node.
  int inner_nodes = 0;
  double inner_rel = 0.0;
  auto Q = [&](double u) {
    std::vector<double> cuts;
    for (double uk : z.kinks()) {
      if (uk <= 0.0 || uk >= u) continue;
      const double s = 1.0 - uk / u;
      if (s > 1e-12 && s < 1.0 - 1e-12) cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    const OperatorValue r = integrate_adaptive(
        [&](double s) {
          return std::exp(-kap * u * s + z.log_value_u(u * (1.0 - s)));
        },
        lam, rtol, cuts);
    if (!(r.value > 0.0))
      throw std::runtime_error("semigroup_compose: inner image not positive");
    inner_nodes += r.n_used;
    inner_rel = std::max(inner_rel, std::abs(r.err_est) / r.value);
    return r.value;
  };

  // Outer integral split at s = 1/2.  The left half keeps the exact
  // s^{alpha-1} endpoint weight; on the right half the substitution
  // sigma = 1 - s turns the image's u^lam factor into an exact sigma^lam
  // Jacobi weight.  Kink crossings are handed down as cuts, so both
  // remaining integrands are piecewise smooth.
  std::vector<double> cuts_left, cuts_right;
  for (double uk : z.kinks()) {
    const double tl = 2.0 * (1.0 - uk / L);  // u = L(1 - t/2) crosses uk
    if (tl > 1e-12 && tl < 1.0 - 1e-12) cuts_left.push_back(tl);
    const double tr = 2.0 * uk / L;  // u = L t/2 crosses uk
    if (tr > 1e-12 && tr < 1.0 - 1e-12) cuts_right.push_back(tr);
  }
  std::sort(cuts_left.begin(), cuts_left.end());
  std::sort(cuts_right.begin(), cuts_right.end());

  const OperatorValue left = integrate_adaptive(
      [&](double t) {
        const double s = 0.5 * t;
        const double u = L * (1.0 - s);
        return std::exp(-kap * L * s + lam * std::log(u)) * Q(u);
      },
      outer.alpha, rtol, cuts_left);
  const OperatorValue right = integrate_adaptive(
      [&](double t) {
        const double sig = 0.5 * t;
        return std::pow(1.0 - sig, outer.alpha - 1.0) *
               std::exp(-kap * L * (1.0 - sig)) * Q(L * sig);
      },
      lam + 1.0, rtol, cuts_right);

  const double pref = std::pow(L / beta, outer.alpha) / gamma_fn(outer.alpha) /
                      (std::pow(beta, lam) * gamma_fn(lam));
  const double wl = std::pow(0.5, outer.alpha);
  const double wr = std::pow(L, lam) * std::pow(0.5, lam + 1.0);
  OperatorValue composed;
  composed.value = pref * (wl * left.value + wr * right.value);
  composed.err_est =
      pref * (wl * std::abs(left.err_est) + wr * std::abs(right.err_est)) +
      std::abs(composed.value) * inner_rel;
  composed.n_used = left.n_used + right.n_used + inner_nodes;
  composed.converged = left.converged && right.converged;

  FracParams direct_p{outer.alpha + inner.alpha, beta};
  OperatorValue direct = hadamard_left(z, x, direct_p, 1.0, rtol);
  return {composed, direct};
}

}  // namespace hadfrac
