#include "hadfrac/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hadfrac {

namespace {

constexpr double kU = 2.0;  // shared log-domain width, X = e^2
constexpr double kAuditTol = 1e-12;

std::vector<double> jittered_knots(Rng& rng, int n_intervals) {
  std::vector<double> u(n_intervals + 1);
  u[0] = 0.0;
  u[n_intervals] = kU;
  for (int j = 1; j < n_intervals; ++j)
    u[j] = kU * (j + 0.35 * (2.0 * rng.uniform() - 1.0)) / n_intervals;
  return u;
}

int draw_intervals(Rng& rng) { return 5 + rng.uniform_int(4); }

}  // namespace

std::uint64_t Rng::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int n) { return int(next() % std::uint64_t(n)); }

std::uint64_t derive_seed(std::uint64_t master, int stream, int index) {
  Rng r(master ^ (0x9E3779B97F4A7C15ull * std::uint64_t(stream + 1)) ^
        (0xD1B54A32D192ED03ull * std::uint64_t(index + 1)));
  r.next();
  return r.next();
}

void CorridorSpec::validate() const {
  if (!(m > 0.0) || !(M >= m) || !std::isfinite(M))
    throw std::invalid_argument("CorridorSpec: need 0 < m <= M < inf");
  if (!(p >= 1.0) || !(q >= 1.0))
    throw std::invalid_argument("CorridorSpec: exponents must be >= 1");
  if (p > 1.0) {
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
      throw std::invalid_argument("CorridorSpec: q must conjugate p");
  }
  if (!std::isfinite(gamma) || !(delta > 0.0) || !(gamma > delta))
    throw std::invalid_argument("CorridorSpec: need gamma > delta > 0");
}

PositiveFunction random_spline(Rng& rng, double lo_log, double hi_log) {
  const int n = draw_intervals(rng);
  const std::vector<double> u = jittered_knots(rng, n);
  std::vector<double> y(n + 1);
  for (double& v : y) v = rng.uniform(lo_log, hi_log);
  return make_function(u, y);
}

double corridor_min_slack(const PositiveFunction& f, const PositiveFunction& g,
                          double m, double M, int npts) {
  const double lm = std::log(m), lM = std::log(M);
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < npts; ++i) {
    const double u = kU * i / double(npts - 1);
    const double lr = f.log_value_u(u) - g.log_value_u(u);
    slack = std::min(slack, std::min(lr - lm, lM - lr));
  }
  return slack;
}

double similarly_ordered_min_slack(const PositiveFunction& f,
                                   const PositiveFunction& g,
                                   const PositiveFunction& h, int npts) {
  std::vector<double> gv(npts), rv(npts);
  for (int i = 0; i < npts; ++i) {
    const double u = kU * i / double(npts - 1);
    gv[i] = g.log_value_u(u);
    rv[i] = f.log_value_u(u) - h.log_value_u(u);
  }
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < npts; ++i)
    for (int j = i + 1; j < npts; ++j)
      slack = std::min(slack, (gv[j] - gv[i]) * (rv[i] - rv[j]));
  return slack;
}

double dominated_min_slack(const PositiveFunction& f, const PositiveFunction& h,
                           int npts) {
  double slack = std::numeric_limits<double>::infinity();
  double prev_f = 0.0, prev_r = 0.0;
  for (int i = 0; i < npts; ++i) {
    const double u = kU * i / double(npts - 1);
    const double lf = f.log_value_u(u);
    const double lr = lf - h.log_value_u(u);
    slack = std::min(slack, -lr);  // f <= h
    if (i > 0) {
      slack = std::min(slack, lf - prev_f);   // f non-decreasing
      slack = std::min(slack, prev_r - lr);   // f/h non-increasing
    }
    prev_f = lf;
    prev_r = lr;
  }
  return slack;
}

std::pair<PositiveFunction, PositiveFunction> gen_corridor_pair(
    const CorridorSpec& spec, TrialSeed ts) {
  spec.validate();
  Rng rng(ts.seed);
  PositiveFunction g = random_spline(rng);
  if (spec.m == spec.M) {
    PositiveFunction f =
        combine({g, PositiveFunction::constant(spec.m, g.X())}, {1.0, 1.0});
    return {std::move(f), std::move(g)};
  }
  const double lm = std::log(spec.m), lM = std::log(spec.M);
  const double eps = 0.01 * (lM - lm);
  const double lo = lm + eps, hi = lM - eps;

  const int n = draw_intervals(rng);
  const std::vector<double> u = jittered_knots(rng, n);
  std::vector<double> y(n + 1);
  for (double& v : y) v = rng.uniform();
  const auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
  const double ymin = *ymin_it, ymax = *ymax_it;
  if (ymax - ymin < 1e-9) {
    std::fill(y.begin(), y.end(), 0.5 * (lo + hi));
  } else {
    for (double& v : y) v = lo + (hi - lo) * (v - ymin) / (ymax - ymin);
  }
  // Interpolating inside the (shrunken) corridor box keeps the ratio inside
  // the full box: the log-spline cannot overshoot its data.
  PositiveFunction ratio = make_function(u, y);
  PositiveFunction f = combine({g, ratio}, {1.0, 1.0});

  if (corridor_min_slack(f, g, spec.m, spec.M) < -kAuditTol)
    throw std::logic_error("gen_corridor_pair: corridor audit failed");
  return {std::move(f), std::move(g)};
}

namespace {

PositiveFunction monotone_spline(Rng& rng, double y0_lo, double y0_hi,
                                 double step_hi, bool increasing) {
  const int n = draw_intervals(rng);
  const std::vector<double> u = jittered_knots(rng, n);
  std::vector<double> y(n + 1);
  y[0] = rng.uniform(y0_lo, y0_hi);
  for (int j = 1; j <= n; ++j) {
    const double step = rng.uniform(0.0, step_hi);
    y[j] = y[j - 1] + (increasing ? step : -step);
  }
  return make_function(u, y);
}

}  // namespace

std::tuple<PositiveFunction, PositiveFunction, PositiveFunction>
gen_similarly_ordered_triple(TrialSeed ts) {
  Rng rng(ts.seed);
  PositiveFunction g = monotone_spline(rng, -1.0, 0.2, 0.35, true);
  PositiveFunction rho = monotone_spline(rng, 0.0, 0.5, 0.3, false);
  PositiveFunction h = random_spline(rng);
  PositiveFunction f = combine({rho, h}, {1.0, 1.0});
  if (similarly_ordered_min_slack(f, g, h) < -kAuditTol)
    throw std::logic_error("gen_similarly_ordered_triple: ordering audit failed");
  return {std::move(f), std::move(g), std::move(h)};
}

std::pair<PositiveFunction, PositiveFunction> gen_dominated_pair(double p_exp,
                                                                TrialSeed ts) {
  if (!(p_exp >= 1.0))
    throw std::invalid_argument("gen_dominated_pair: p_exp must be >= 1");
  Rng rng(ts.seed);
  PositiveFunction f = monotone_spline(rng, -1.0, 0.0, 0.35, true);
  // rho starts at 1 (log 0) and decays, so h = f / rho >= f.
  const int n = draw_intervals(rng);
  const std::vector<double> u = jittered_knots(rng, n);
  std::vector<double> y(n + 1);
  y[0] = 0.0;
  for (int j = 1; j <= n; ++j) y[j] = y[j - 1] - rng.uniform(0.0, 0.25);
  PositiveFunction rho = make_function(u, y);
  PositiveFunction h = combine({f, rho}, {1.0, -1.0});
  if (dominated_min_slack(f, h) < -kAuditTol)
    throw std::logic_error("gen_dominated_pair: dominance audit failed");
  return {std::move(f), std::move(h)};
}

std::pair<PositiveFunction, PositiveFunction> gen_operator_dominance_pair(
    const CorridorSpec& spec, TrialSeed ts) {
  spec.validate();
  Rng rng(ts.seed);
  PositiveFunction f = random_spline(rng);
  PositiveFunction sigma = random_spline(rng, -1.0, 0.0);
  PositiveFunction g = combine({f, sigma}, {1.0, 1.0});
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const double u = kU * i / 9999.0;
    slack = std::min(slack, f.log_value_u(u) - g.log_value_u(u));
  }
  if (slack < -kAuditTol)
    throw std::logic_error("gen_operator_dominance_pair: dominance audit failed");
  return {std::move(f), std::move(g)};
}

}  // namespace hadfrac
