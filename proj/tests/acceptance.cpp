// Acceptance gate: eight criteria, one PASS/FAIL line each, exit code equal
// to the number of failures.  Tolerances and grids are pinned here on
// purpose; loosening them is a contract change, not a tuning knob.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hadfrac/generators.hpp"
#include "hadfrac/harness.hpp"
#include "hadfrac/identity.hpp"
#include "hadfrac/operators.hpp"
#include "support/oracles.hpp"

using namespace hadfrac;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              label, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// --- criterion 1: closed-form identity grid ---------------------------------
void criterion_closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityResult r = closed_form_grid_check(1e-10);
  const double dt = seconds_since(t0);
  const bool pass = r.pass && r.max_rel_err <= 1e-8 && dt < 5.0;
  report(1, "closed-form identity on the 36-point grid", pass,
         fmt("max rel err %.3e <= 1e-8 over %d points, %.2f s < 5 s",
             r.max_rel_err, r.count, dt));
}

// --- criterion 2: semigroup -------------------------------------------------
void criterion_semigroup() {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityResult r = semigroup_check(100, 42, 1e-10);
  const double dt = seconds_since(t0);
  const bool pass = r.pass && r.max_rel_err <= 1e-6 && dt < 60.0;
  report(2, "semigroup composed vs direct, 100 trials", pass,
         fmt("max rel err %.3e <= 1e-6, %.1f s < 60 s", r.max_rel_err, dt));
}

// --- criterion 3: beta = 1 reductions ---------------------------------------
void criterion_reductions() {
  const IdentityResult r = beta1_reduction_check(50, 42, 1e-11);
  const bool pass = r.pass && r.max_rel_err <= 1e-10;
  report(3, "beta=1 reduction vs classical route, 50 functions", pass,
         fmt("max rel err %.3e <= 1e-10", r.max_rel_err));
}

// --- criterion 4: equality degeneracies -------------------------------------
void criterion_degeneracies() {
  const double x = std::exp(1.5);
  const FracParams fp{0.7, 0.5};
  const FracParams fp2{1.3, 0.5};
  const PositiveFunction one = PositiveFunction::constant(1.0, std::exp(2.0));
  const PositiveFunction sa =
      make_function(std::vector<double>{0.0, 0.5, 1.2, 2.0},
                    std::vector<double>{0.2, -0.4, 0.6, 0.1});
  const PositiveFunction sb =
      make_function(std::vector<double>{0.0, 0.7, 1.4, 2.0},
                    std::vector<double>{-0.1, 0.5, -0.3, 0.4});
  CorridorSpec tight;
  tight.m = tight.M = 1.0;
  tight.p = tight.q = 2.0;

  double worst = 0.0;
  std::string worst_at = "-";
  const auto consider = [&](const char* name, const InequalityReport& r) {
    if (std::abs(r.margin) > worst) {
      worst = std::abs(r.margin);
      worst_at = name;
    }
  };
  consider("T3_1", check_t3_1(one, one, tight, x, fp));
  consider("T3_2", check_t3_2(sa, sa, tight, x, fp));
  consider("T4_1", check_t4_1(one, one, tight, x, fp));
  consider("T4_2", check_t4_2(one, one, tight, x, fp));
  consider("T4_3", check_t4_3(one, one, tight, x, fp));
  consider("T4_4", check_t4_4(sa, sa, tight, x, fp));
  consider("T4_5 const g", check_t4_5(sa, one, sb, x, fp));
  consider("T4_5 f=h", check_t4_5(sa, sb, sa, x, fp));
  consider("T4_6 f=h", check_t4_5(sa, sb, sa, x, fp, fp2));
  consider("T4_7 f=h", check_t4_7(sa, sa, 2.0, x, fp));
  consider("T4_7 p=1", check_t4_7(sa, sb, 1.0, x, fp));
  consider("T4_8 f=h", check_t4_7(sa, sa, 2.0, x, fp, fp2));
  const bool pass = worst <= 1e-9;
  report(4, "equality degeneracies across all checkers", pass,
         fmt("worst |margin| %.3e <= 1e-9 (at %s)", worst, worst_at.c_str()));
}

// --- criteria 5 + 6: the full suite and the T4_4 census ---------------------
void criteria_suite_and_census() {
  SuiteConfig cfg;  // defaults are the documented grid
  cfg.threads = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<InequalityReport> reports = run_suite(cfg);
  const double dt = seconds_since(t0);

  int violated = 0, inconclusive = 0, errors = 0, asserted_total = 0;
  double worst_rate = 0.0;
  std::string worst_id = "-";
  for (const TheoremSummary& s : summarize(reports)) {
    if (s.id == "T4_4" || s.id == "T3_1_literal") continue;
    asserted_total += s.count;
    violated += s.violated;
    inconclusive += s.inconclusive;
    errors += s.errors;
    const double rate = double(s.inconclusive) / std::max(s.count, 1);
    if (rate > worst_rate) {
      worst_rate = rate;
      worst_id = s.id;
    }
  }
  const bool pass5 = violated == 0 && errors == 0 && worst_rate <= 1e-3 &&
                     dt < 600.0 && asserted_total == 9000;
  report(5, "inequality suite, 1000 trials/theorem, single-threaded", pass5,
         fmt("0 violated required: got %d; errors %d; worst inconclusive "
             "rate %.2e (%s) <= 1e-3; %.0f s < 600 s",
             violated, errors, worst_rate, worst_id.c_str(), dt));

  // census: every T4_4 row, violations replayed from the JSON artifact
  std::vector<InequalityReport> census;
  for (const auto& r : reports)
    if (r.theorem == TheoremId::T4_4) census.push_back(r);
  double census_min = 1e300;
  long double census_sum = 0.0L;
  int n_violations = 0;
  std::vector<int> to_replay;
  for (int i = 0; i < int(census.size()); ++i) {
    census_min = std::min(census_min, census[i].margin);
    census_sum += census[i].margin;
    if (census[i].verdict == Verdict::Violated) {
      ++n_violations;
      to_replay.push_back(i);
    }
  }
  // no violations expected under pointwise dominance; still prove the replay
  // path on the extremes and the middle
  if (to_replay.empty())
    to_replay = {0, int(census.size()) / 2, int(census.size()) - 1};
  std::ostringstream os;
  write_json(cfg, census, os);
  const std::string artifact = os.str();
  bool replay_ok = !census.empty();
  for (int idx : to_replay) {
    const ReplayResult res = replay_trial(artifact, idx);
    const auto close = [](double a, double b) {
      return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
    };
    replay_ok = replay_ok && close(res.recorded.lhs, res.recomputed.lhs) &&
                close(res.recorded.rhs, res.recomputed.rhs);
  }
  const bool pass6 = replay_ok && int(census.size()) == 1000;
  report(6, "T4_4 margin census with replayable rows", pass6,
         fmt("%d rows, min margin %.3e, mean %.3e, %d violations, "
             "%zu rows replayed to 1e-12",
             int(census.size()), census_min, double(census_sum / 1000.0),
             n_violations, to_replay.size()));
}

// --- criterion 7: quadrature vs graded-mesh oracle --------------------------
void criterion_oracle() {
  Rng rng(20240801);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PositiveFunction z = random_spline(rng);
    const double alpha = rng.uniform(0.1, 2.0);
    const double beta = rng.uniform(0.2, 1.0);
    const double x = std::exp(rng.uniform(0.5, 2.0));
    const double got = hadamard_left(z, x, {alpha, beta}, 1.0, 1e-11).value;
    const double want = oracle::hadamard_left(z, x, alpha, beta);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  report(7, "quadrature vs graded-mesh trapezoid oracle, 100 integrands",
         worst <= 1e-7, fmt("max rel err %.3e <= 1e-7", worst));
}

// --- criterion 8: CSV determinism -------------------------------------------
void criterion_determinism() {
  SuiteConfig cfg;
  cfg.trials_per_theorem = 25;
  std::ostringstream a, b;
  write_csv(run_suite(cfg), a);
  write_csv(run_suite(cfg), b);
  const bool pass = a.str() == b.str() && !a.str().empty();
  report(8, "same-seed suite runs give byte-identical CSV", pass,
         fmt("%zu bytes compared", a.str().size()));
}

}  // namespace

int main() {
  std::printf("hadfrac acceptance gate\n");
  criterion_closed_form();
  criterion_semigroup();
  criterion_reductions();
  criterion_degeneracies();
  criteria_suite_and_census();
  criterion_oracle();
  criterion_determinism();
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures;
}
