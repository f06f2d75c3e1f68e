#pragma once

#include <cstdint>
#include <tuple>
#include <utility>

#include "hadfrac/positive_function.hpp"

namespace hadfrac {

/// Hypothesis box for the inequality families: corridor bounds m <= f/g <= M,
/// conjugate exponents p, q, and the exponent pair (gamma, delta) for the
/// operator-dominance family.
struct CorridorSpec {
  double m = 1.0;
  double M = 1.0;
  double p = 2.0;
  double q = 2.0;
  double gamma = 2.0;
  double delta = 1.0;
  void validate() const;
};

/// Seed material for one suite trial.  `seed` fully determines every draw;
/// `trial_index` is carried for reporting.
struct TrialSeed {
  std::uint64_t seed = 0;
  int trial_index = 0;
};

/// splitmix64 stream; cheap, splittable enough for per-trial derivation, and
/// stable across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// uniform in [0, 1) with 53 random bits
  double uniform();
  double uniform(double lo, double hi);
  int uniform_int(int n);  // [0, n)
};

/// Deterministic per-trial seed derivation from a master seed and a stream
/// label (theorem ordinal or purpose tag).
std::uint64_t derive_seed(std::uint64_t master, int stream, int index);

/// Random spline-exponential function on [1, e^2]: 5-8 intervals with
/// jittered knots, log-ordinates uniform in [lo_log, hi_log].
PositiveFunction random_spline(Rng& rng, double lo_log = -1.0,
                               double hi_log = 1.0);

/// (f, g) with the ratio f/g confined to [m e^eps, M e^-eps],
/// eps = 0.01 (ln M - ln m); exact when m = M (then f = m g).  The pair is
/// audited on a 10^4-point grid before being returned.
std::pair<PositiveFunction, PositiveFunction> gen_corridor_pair(
    const CorridorSpec& spec, TrialSeed ts);

/// (f, g, h): g non-decreasing, h arbitrary, f = rho h with rho
/// non-increasing, so (g(t)-g(s))(f(s)/h(s)-f(t)/h(t)) >= 0.  Audited on a
/// 200 x 200 grid of pairs.
std::tuple<PositiveFunction, PositiveFunction, PositiveFunction>
gen_similarly_ordered_triple(TrialSeed ts);

/// (f, h) with f non-decreasing, f <= h, and f/h non-increasing
/// (h = f / rho for non-increasing rho in (0, 1]).  Audited pointwise.
std::pair<PositiveFunction, PositiveFunction> gen_dominated_pair(double p_exp,
                                                                TrialSeed ts);

/// (f, g) with g = sigma f for sigma in (0, 1], so f >= g pointwise and
/// every monotone operator preserves the order.  Audited pointwise.
std::pair<PositiveFunction, PositiveFunction> gen_operator_dominance_pair(
    const CorridorSpec& spec, TrialSeed ts);

/// Audit primitives (log-domain slacks; generators assert these, tests can
/// call them directly).  All return the minimal slack found; hypothesis
/// holds when the result is >= -1e-12.
double corridor_min_slack(const PositiveFunction& f, const PositiveFunction& g,
                          double m, double M, int npts = 10000);
double similarly_ordered_min_slack(const PositiveFunction& f,
                                   const PositiveFunction& g,
                                   const PositiveFunction& h, int npts = 200);
double dominated_min_slack(const PositiveFunction& f,
                           const PositiveFunction& h, int npts = 10000);

}  // namespace hadfrac
