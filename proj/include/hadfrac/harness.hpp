#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hadfrac/generators.hpp"
#include "hadfrac/operators.hpp"

namespace hadfrac {

enum class TheoremId {
  T3_1,
  T3_2,
  T4_1,
  T4_2,
  T4_3,
  T4_4,
  T4_5,
  T4_6,
  T4_7,
  T4_8,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

enum class Verdict { Holds, Violated, Inconclusive, Error };

const char* verdict_name(Verdict v);

/// One checked trial.  margin is the signed normalized slack, positive when
/// the inequality holds in its stated orientation:
///   (rhs - lhs)/max(|rhs|, |lhs|, 1e-300) for "lhs <= rhs" theorems,
///   mirrored for ">=" theorems.  err_budget is the first-order propagation
/// of the quadrature error estimates through the same arithmetic, normalized
/// identically.
struct InequalityReport {
  TheoremId theorem = TheoremId::T3_1;
  bool literal_variant = false;  // T3_1 with the statement's g^q reading
  FracParams params;
  std::optional<FracParams> params2;  // two-parameter theorems T4_6 / T4_8
  CorridorSpec spec;
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double err_budget = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  TrialSeed seed;
  /// (name, serialized PositiveFunction) pairs, enough to replay the checker.
  std::vector<std::pair<std::string, std::string>> functions;
  std::string note;  // funnel for checker exceptions (verdict Error)
};

/// Shared verdict/tolerance knobs.  tol_rel is the margin tolerance;
/// quad_rtol is passed to every operator evaluation.
struct CheckSettings {
  double tol_rel = 1e-9;
  double quad_rtol = 1e-9;
};

InequalityReport check_t3_1(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

/// The statement's raw reading (H g^q instead of H g^p on the left).
/// Reported under id "T3_1_literal", never asserted.  Requires p > 1.
InequalityReport check_t3_1_literal(const PositiveFunction& f,
                                    const PositiveFunction& g,
                                    const CorridorSpec& spec, double x,
                                    FracParams p, CheckSettings cs = {});

InequalityReport check_t3_2(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

InequalityReport check_t4_1(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

/// Corridor is understood on the pair (f^p, g^q).
InequalityReport check_t4_2(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

InequalityReport check_t4_3(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

InequalityReport check_t4_4(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs = {});

/// Chebyshev-type; with p2 present runs the two-parameter form (id T4_6).
InequalityReport check_t4_5(const PositiveFunction& f, const PositiveFunction& g,
                            const PositiveFunction& h, double x, FracParams p,
                            std::optional<FracParams> p2 = std::nullopt,
                            CheckSettings cs = {});

/// Dominated-pair family; with p2 present runs the two-parameter form
/// (id T4_8).  p_exp >= 1.
InequalityReport check_t4_7(const PositiveFunction& f, const PositiveFunction& h,
                            double p_exp, double x, FracParams p,
                            std::optional<FracParams> p2 = std::nullopt,
                            CheckSettings cs = {});

/// Scalar sub-steps of T4_3, exposed for direct testing:
/// Young slack a^p/p + b^q/q - ab and power-sum slack
/// 2^{r-1}(a^r + b^r) - (a+b)^r; both nonnegative on their hypotheses.
double young_slack(double a, double b, double p, double q);
double power_sum_slack(double a, double b, double r);

struct SuiteConfig {
  int trials_per_theorem = 1000;
  double tol_rel = 1e-9;
  double quad_rtol = 1e-9;
  std::uint64_t master_seed = 42;
  std::vector<TheoremId> theorems;  // empty = all ten
  bool include_literal_variant = true;
  int threads = 0;  // 0: HADFRAC_THREADS env var, else hardware concurrency
  std::vector<double> alphas = {0.3, 0.5, 1.0, 1.7};
  std::vector<double> betas = {0.25, 0.5, 1.0};
  std::vector<double> ps = {1.0, 1.5, 2.0, 4.0};
  std::vector<std::pair<double, double>> corridors = {
      {0.5, 2.0}, {0.9, 1.1}, {0.1, 10.0}};
  std::vector<double> xs;  // default {1.5, e, e^2}
  void validate() const;
};

/// Deterministic sweep: for each selected theorem, trials_per_theorem trials
/// cycle over the applicable parameter cells; per-trial seeds derive from the
/// master seed.  Trials may run on a worker pool; reports are sorted before
/// being returned.  Checker exceptions become Verdict::Error rows.
std::vector<InequalityReport> run_suite(const SuiteConfig& config);

struct TheoremSummary {
  std::string id;
  int count = 0;
  int holds = 0;
  int violated = 0;
  int inconclusive = 0;
  int errors = 0;
  double min_margin = 0.0;
  double mean_margin = 0.0;
};

std::vector<TheoremSummary> summarize(const std::vector<InequalityReport>& reports);

/// CSV with the fixed column set; %.17g formatting, byte-deterministic.
void write_csv(const std::vector<InequalityReport>& reports, std::ostream& os);

/// JSON report mirroring the CSV plus embedded function serializations and
/// the generating config.
void write_json(const SuiteConfig& config,
                const std::vector<InequalityReport>& reports, std::ostream& os);

/// Re-runs the checker of record `trial` of a JSON report (functions are
/// rebuilt from their embedded serializations, not regenerated).  Returns the
/// recomputed report; lhs/rhs must match the recorded values to 1e-12
/// relative for a replay to be declared a match.
struct ReplayResult {
  InequalityReport recorded;
  InequalityReport recomputed;
  bool match = false;
};
ReplayResult replay_trial(const std::string& json_text, int record_index);

/// Count of records in a JSON report (for CLI bounds checking).
int report_record_count(const std::string& json_text);

}  // namespace hadfrac
