#include "hadfrac/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace hadfrac {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T3_1: return "T3_1";
    case TheoremId::T3_2: return "T3_2";
    case TheoremId::T4_1: return "T4_1";
    case TheoremId::T4_2: return "T4_2";
    case TheoremId::T4_3: return "T4_3";
    case TheoremId::T4_4: return "T4_4";
    case TheoremId::T4_5: return "T4_5";
    case TheoremId::T4_6: return "T4_6";
    case TheoremId::T4_7: return "T4_7";
    case TheoremId::T4_8: return "T4_8";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  static const TheoremId all[] = {
      TheoremId::T3_1, TheoremId::T3_2, TheoremId::T4_1, TheoremId::T4_2,
      TheoremId::T4_3, TheoremId::T4_4, TheoremId::T4_5, TheoremId::T4_6,
      TheoremId::T4_7, TheoremId::T4_8};
  for (TheoremId id : all)
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Error: return "error";
  }
  return "?";
}

namespace {

// Value with a first-order absolute error bound, for propagating quadrature
// err_est through the checker arithmetic.
struct EV {
  double v;
  double e;
};

EV ev(const OperatorValue& r) { return {r.value, std::abs(r.err_est)}; }

EV powv(EV a, double p) {
  if (p == 1.0) return a;
  const double v = std::pow(a.v, p);
  return {v, std::abs(p) * std::abs(v / a.v) * a.e};
}

EV mulv(EV a, EV b) {
  return {a.v * b.v, std::abs(a.v) * b.e + std::abs(b.v) * a.e};
}

EV divv(EV a, EV b) {
  const double v = a.v / b.v;
  return {v, (a.e + std::abs(v) * b.e) / std::abs(b.v)};
}

EV addv(EV a, EV b) { return {a.v + b.v, a.e + b.e}; }

EV scalev(EV a, double c) { return {c * a.v, std::abs(c) * a.e}; }

void finish(InequalityReport& r, EV lhs, EV rhs, bool le_oriented,
            const CheckSettings& cs) {
  r.lhs = lhs.v;
  r.rhs = rhs.v;
  const double norm = std::max({std::abs(lhs.v), std::abs(rhs.v), 1e-300});
  r.margin = (le_oriented ? rhs.v - lhs.v : lhs.v - rhs.v) / norm;
  r.err_budget = (lhs.e + rhs.e) / norm;
  if (std::abs(r.margin) < r.err_budget) {
    r.verdict = Verdict::Inconclusive;
  } else if (r.margin >= -cs.tol_rel) {
    r.verdict = Verdict::Holds;
  } else if (std::abs(r.margin) <= r.err_budget) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = Verdict::Violated;
  }
}

OperatorValue H(const PositiveFunction& z, double x, FracParams p,
                const CheckSettings& cs) {
  return hadamard_left(z, x, p, 1.0, cs.quad_rtol);
}

void attach(InequalityReport& r, const char* name, const PositiveFunction& f) {
  r.functions.emplace_back(name, serialize_function(f));
}

}  // namespace

InequalityReport check_t3_1(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T3_1;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p;
  const EV A = ev(H(pow_fn(f, pe), x, p, cs));
  const EV B = ev(H(pow_fn(g, pe), x, p, cs));
  const EV R = ev(H(pow_fn(combine_add(f, g), pe), x, p, cs));
  const double C =
      (1.0 + spec.M * (spec.m + 2.0)) / ((spec.m + 1.0) * (spec.M + 1.0));
  const EV lhs = addv(powv(A, 1.0 / pe), powv(B, 1.0 / pe));
  const EV rhs = scalev(powv(R, 1.0 / pe), C);
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t3_1_literal(const PositiveFunction& f,
                                    const PositiveFunction& g,
                                    const CorridorSpec& spec, double x,
                                    FracParams p, CheckSettings cs) {
  if (!(spec.p > 1.0))
    throw std::invalid_argument("check_t3_1_literal: needs p > 1 for q");
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T3_1;
  r.literal_variant = true;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p, qe = spec.q;
  const EV A = ev(H(pow_fn(f, pe), x, p, cs));
  const EV B = ev(H(pow_fn(g, qe), x, p, cs));  // the statement's g^q
  const EV R = ev(H(pow_fn(combine_add(f, g), pe), x, p, cs));
  const double C =
      (1.0 + spec.M * (spec.m + 2.0)) / ((spec.m + 1.0) * (spec.M + 1.0));
  // outer exponents exactly as displayed in the statement: both 1/p
  const EV lhs = addv(powv(A, 1.0 / pe), powv(B, 1.0 / pe));
  const EV rhs = scalev(powv(R, 1.0 / pe), C);
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t3_2(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T3_2;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p;
  const EV A = ev(H(pow_fn(f, pe), x, p, cs));
  const EV B = ev(H(pow_fn(g, pe), x, p, cs));
  const double K = (spec.M + 1.0) * (spec.m + 1.0) / spec.M - 2.0;
  const EV lhs = addv(powv(A, 2.0 / pe), powv(B, 2.0 / pe));
  const EV rhs = scalev(mulv(powv(A, 1.0 / pe), powv(B, 1.0 / pe)), K);
  finish(r, lhs, rhs, false, cs);
  return r;
}

InequalityReport check_t4_1(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  if (!(spec.p > 1.0)) throw std::invalid_argument("check_t4_1: needs p > 1");
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T4_1;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p, qe = spec.q;
  const EV A = ev(H(f, x, p, cs));
  const EV B = ev(H(g, x, p, cs));
  const EV C = ev(H(combine({f, g}, {1.0 / pe, 1.0 / qe}), x, p, cs));
  const EV lhs = mulv(powv(A, 1.0 / pe), powv(B, 1.0 / qe));
  const EV rhs = scalev(C, std::pow(spec.M / spec.m, 1.0 / (pe * qe)));
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t4_2(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  if (!(spec.p > 1.0)) throw std::invalid_argument("check_t4_2: needs p > 1");
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T4_2;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p, qe = spec.q;
  const EV A = ev(H(pow_fn(f, pe), x, p, cs));
  const EV B = ev(H(pow_fn(g, qe), x, p, cs));
  const EV C = ev(H(combine({f, g}, {1.0, 1.0}), x, p, cs));
  const EV lhs = mulv(powv(A, 1.0 / pe), powv(B, 1.0 / qe));
  const EV rhs = scalev(C, std::pow(spec.M / spec.m, 1.0 / (pe * qe)));
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t4_3(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  if (!(spec.p > 1.0)) throw std::invalid_argument("check_t4_3: needs p > 1");
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T4_3;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double pe = spec.p, qe = spec.q;
  const EV FG = ev(H(combine({f, g}, {1.0, 1.0}), x, p, cs));
  const EV Sp =
      ev(H(combine_add(pow_fn(f, pe), pow_fn(g, pe)), x, p, cs));
  const EV Sq =
      ev(H(combine_add(pow_fn(f, qe), pow_fn(g, qe)), x, p, cs));
  const double c1 = std::pow(2.0, pe - 1.0) * std::pow(spec.M, pe) /
                    (pe * std::pow(spec.M + 1.0, pe));
  const double c2 =
      std::pow(2.0, qe - 1.0) / (qe * std::pow(spec.m + 1.0, qe));
  const EV lhs = FG;
  const EV rhs = addv(scalev(Sp, c1), scalev(Sq, c2));
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t4_4(const PositiveFunction& f, const PositiveFunction& g,
                            const CorridorSpec& spec, double x, FracParams p,
                            CheckSettings cs) {
  spec.validate();
  p.validate();
  InequalityReport r;
  r.theorem = TheoremId::T4_4;
  r.params = p;
  r.spec = spec;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);

  const double ga = spec.gamma, de = spec.delta;
  const EV lhs = ev(H(pow_fn(f, ga - de), x, p, cs));
  const EV rhs = ev(H(combine({f, g}, {ga, -de}), x, p, cs));
  finish(r, lhs, rhs, true, cs);
  return r;
}

InequalityReport check_t4_5(const PositiveFunction& f, const PositiveFunction& g,
                            const PositiveFunction& h, double x, FracParams p,
                            std::optional<FracParams> p2, CheckSettings cs) {
  p.validate();
  if (p2) p2->validate();
  InequalityReport r;
  r.theorem = p2 ? TheoremId::T4_6 : TheoremId::T4_5;
  r.params = p;
  r.params2 = p2;
  r.x = x;
  attach(r, "f", f);
  attach(r, "g", g);
  attach(r, "h", h);

  const PositiveFunction gf = combine({g, f}, {1.0, 1.0});
  const PositiveFunction gh = combine({g, h}, {1.0, 1.0});
  if (!p2) {
    const EV lhs = divv(ev(H(f, x, p, cs)), ev(H(h, x, p, cs)));
    const EV rhs = divv(ev(H(gf, x, p, cs)), ev(H(gh, x, p, cs)));
    finish(r, lhs, rhs, false, cs);
    return r;
  }
  const EV f1 = ev(H(f, x, p, cs)), f2 = ev(H(f, x, *p2, cs));
  const EV h1 = ev(H(h, x, p, cs)), h2 = ev(H(h, x, *p2, cs));
  const EV gf1 = ev(H(gf, x, p, cs)), gf2 = ev(H(gf, x, *p2, cs));
  const EV gh1 = ev(H(gh, x, p, cs)), gh2 = ev(H(gh, x, *p2, cs));
  const EV lhs = addv(mulv(f1, gh2), mulv(f2, gh1));
  const EV rhs = addv(mulv(h1, gf2), mulv(h2, gf1));
  finish(r, lhs, rhs, false, cs);
  return r;
}

InequalityReport check_t4_7(const PositiveFunction& f, const PositiveFunction& h,
                            double p_exp, double x, FracParams p,
                            std::optional<FracParams> p2, CheckSettings cs) {
  if (!(p_exp >= 1.0))
    throw std::invalid_argument("check_t4_7: p_exp must be >= 1");
  p.validate();
  if (p2) p2->validate();
  InequalityReport r;
  r.theorem = p2 ? TheoremId::T4_8 : TheoremId::T4_7;
  r.params = p;
  r.params2 = p2;
  r.spec.p = p_exp;
  r.spec.q = p_exp > 1.0 ? p_exp / (p_exp - 1.0) : 2.0;
  r.x = x;
  attach(r, "f", f);
  attach(r, "h", h);

  const PositiveFunction fp = pow_fn(f, p_exp);
  const PositiveFunction hp = pow_fn(h, p_exp);
  if (!p2) {
    const EV lhs = divv(ev(H(f, x, p, cs)), ev(H(h, x, p, cs)));
    const EV rhs = divv(ev(H(fp, x, p, cs)), ev(H(hp, x, p, cs)));
    finish(r, lhs, rhs, false, cs);
    return r;
  }
  const EV f1 = ev(H(f, x, p, cs)), f2 = ev(H(f, x, *p2, cs));
  const EV h1 = ev(H(h, x, p, cs)), h2 = ev(H(h, x, *p2, cs));
  const EV fp1 = ev(H(fp, x, p, cs)), fp2 = ev(H(fp, x, *p2, cs));
  const EV hp1 = ev(H(hp, x, p, cs)), hp2 = ev(H(hp, x, *p2, cs));
  const EV lhs = addv(mulv(f1, hp2), mulv(f2, hp1));
  const EV rhs = addv(mulv(h1, fp2), mulv(h2, fp1));
  finish(r, lhs, rhs, false, cs);
  return r;
}

double young_slack(double a, double b, double p, double q) {
  return std::pow(a, p) / p + std::pow(b, q) / q - a * b;
}

double power_sum_slack(double a, double b, double r) {
  return std::pow(2.0, r - 1.0) * (std::pow(a, r) + std::pow(b, r)) -
         std::pow(a + b, r);
}

void SuiteConfig::validate() const {
  if (trials_per_theorem < 1)
    throw std::invalid_argument("SuiteConfig: trials_per_theorem must be >= 1");
  if (!(tol_rel >= 1e-12 && tol_rel <= 1e-6))
    throw std::invalid_argument("SuiteConfig: tol_rel outside [1e-12, 1e-6]");
  if (!(quad_rtol >= 1e-13 && quad_rtol <= 1e-4))
    throw std::invalid_argument("SuiteConfig: quad_rtol outside [1e-13, 1e-4]");
  if (alphas.empty() || betas.empty() || ps.empty() || corridors.empty())
    throw std::invalid_argument("SuiteConfig: empty parameter grid");
  for (double a : alphas) FracParams{a, 1.0}.validate();
  for (double b : betas) FracParams{1.0, b}.validate();
  for (double p : ps)
    if (!(p >= 1.0)) throw std::invalid_argument("SuiteConfig: p grid below 1");
  for (auto [m, M] : corridors)
    if (!(m > 0.0 && M >= m))
      throw std::invalid_argument("SuiteConfig: bad corridor");
  for (double x : xs)
    if (!(x > 1.0)) throw std::invalid_argument("SuiteConfig: x grid must be > 1");
}

namespace {

struct Cell {
  FracParams p;
  std::optional<FracParams> p2;
  CorridorSpec spec;
  double x = 0.0;
};

struct Job {
  TheoremId theorem;
  int trial_index;
  TrialSeed ts;
  Cell cell;
};

std::vector<double> default_xs() {
  return {1.5, std::exp(1.0), std::exp(2.0)};
}

CorridorSpec spec_for(double m, double M, double p) {
  CorridorSpec s;
  s.m = m;
  s.M = M;
  s.p = p;
  s.q = p > 1.0 ? p / (p - 1.0) : 2.0;
  return s;
}

std::vector<Cell> cells_for(TheoremId tid, const SuiteConfig& cfg,
                            const std::vector<double>& xs) {
  std::vector<Cell> cells;
  const bool needs_q = tid == TheoremId::T4_1 || tid == TheoremId::T4_2 ||
                       tid == TheoremId::T4_3;
  // p = 1 makes T4_7/T4_8 a bitwise identity (verdict would always be
  // inconclusive at zero margin), so the sweep uses the strict exponents and
  // leaves p = 1 to the degeneracy tests.
  const bool strict_p = needs_q || tid == TheoremId::T4_7 || tid == TheoremId::T4_8;
  switch (tid) {
    case TheoremId::T3_1:
    case TheoremId::T3_2:
    case TheoremId::T4_1:
    case TheoremId::T4_2:
    case TheoremId::T4_3:
      for (double a : cfg.alphas)
        for (double b : cfg.betas)
          for (double p : cfg.ps) {
            if (strict_p && !(p > 1.0)) continue;
            for (auto [m, M] : cfg.corridors)
              for (double x : xs)
                cells.push_back({{a, b}, std::nullopt, spec_for(m, M, p), x});
          }
      break;
    case TheoremId::T4_4:
    case TheoremId::T4_5:
      for (double a : cfg.alphas)
        for (double b : cfg.betas)
          for (double x : xs)
            cells.push_back({{a, b}, std::nullopt, CorridorSpec{}, x});
      break;
    case TheoremId::T4_6:
      for (double a : cfg.alphas)
        for (double b : cfg.betas)
          for (double a2 : cfg.alphas)
            for (double b2 : cfg.betas)
              for (double x : xs)
                cells.push_back(
                    {{a, b}, FracParams{a2, b2}, CorridorSpec{}, x});
      break;
    case TheoremId::T4_7:
      for (double a : cfg.alphas)
        for (double b : cfg.betas)
          for (double p : cfg.ps) {
            if (!(p > 1.0)) continue;
            for (double x : xs)
              cells.push_back({{a, b}, std::nullopt, spec_for(1.0, 1.0, p), x});
          }
      break;
    case TheoremId::T4_8:
      for (double a : cfg.alphas)
        for (double b : cfg.betas)
          for (double p : cfg.ps) {
            if (!(p > 1.0)) continue;
            for (double a2 : cfg.alphas)
              for (double b2 : cfg.betas)
                for (double x : xs)
                  cells.push_back({{a, b}, FracParams{a2, b2},
                                   spec_for(1.0, 1.0, p), x});
          }
      break;
  }
  return cells;
}

int theorem_ordinal(TheoremId tid) { return int(tid); }

void run_job(const Job& job, const SuiteConfig& cfg,
             std::vector<InequalityReport>& out) {
  const CheckSettings cs{cfg.tol_rel, cfg.quad_rtol};
  const Cell& c = job.cell;
  try {
    switch (job.theorem) {
      case TheoremId::T3_1: {
        auto [f, g] = gen_corridor_pair(c.spec, job.ts);
        out.push_back(check_t3_1(f, g, c.spec, c.x, c.p, cs));
        if (cfg.include_literal_variant && c.spec.p > 1.0)
          out.push_back(check_t3_1_literal(f, g, c.spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T3_2: {
        auto [f, g] = gen_corridor_pair(c.spec, job.ts);
        out.push_back(check_t3_2(f, g, c.spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T4_1: {
        auto [f, g] = gen_corridor_pair(c.spec, job.ts);
        out.push_back(check_t4_1(f, g, c.spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T4_2: {
        auto [F, G] = gen_corridor_pair(c.spec, job.ts);
        const PositiveFunction f = pow_fn(F, 1.0 / c.spec.p);
        const PositiveFunction g = pow_fn(G, 1.0 / c.spec.q);
        out.push_back(check_t4_2(f, g, c.spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T4_3: {
        auto [f, g] = gen_corridor_pair(c.spec, job.ts);
        out.push_back(check_t4_3(f, g, c.spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T4_4: {
        CorridorSpec spec = c.spec;
        Rng pr(derive_seed(job.ts.seed, 7, 0));
        spec.gamma = pr.uniform(1.5, 3.0);
        spec.delta = pr.uniform(0.5, spec.gamma - 0.5);
        auto [f, g] = gen_operator_dominance_pair(spec, job.ts);
        out.push_back(check_t4_4(f, g, spec, c.x, c.p, cs));
        break;
      }
      case TheoremId::T4_5:
      case TheoremId::T4_6: {
        auto [f, g, h] = gen_similarly_ordered_triple(job.ts);
        out.push_back(check_t4_5(f, g, h, c.x, c.p, c.p2, cs));
        break;
      }
      case TheoremId::T4_7:
      case TheoremId::T4_8: {
        auto [f, h] = gen_dominated_pair(c.spec.p, job.ts);
        out.push_back(check_t4_7(f, h, c.spec.p, c.x, c.p, c.p2, cs));
        break;
      }
    }
  } catch (const std::exception& e) {
    InequalityReport r;
    r.theorem = job.theorem;
    r.params = c.p;
    r.params2 = c.p2;
    r.spec = c.spec;
    r.x = c.x;
    r.seed = job.ts;
    r.verdict = Verdict::Error;
    r.note = e.what();
    out.push_back(r);
  }
  for (InequalityReport& r : out) r.seed = job.ts;
}

int resolve_threads(const SuiteConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("HADFRAC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? int(hc) : 1;
}

}  // namespace

std::vector<InequalityReport> run_suite(const SuiteConfig& config) {
  config.validate();
  const std::vector<double> xs = config.xs.empty() ? default_xs() : config.xs;
  std::vector<TheoremId> theorems = config.theorems;
  if (theorems.empty())
    theorems = {TheoremId::T3_1, TheoremId::T3_2, TheoremId::T4_1,
                TheoremId::T4_2, TheoremId::T4_3, TheoremId::T4_4,
                TheoremId::T4_5, TheoremId::T4_6, TheoremId::T4_7,
                TheoremId::T4_8};

  std::vector<Job> jobs;
  for (TheoremId tid : theorems) {
    const std::vector<Cell> cells = cells_for(tid, config, xs);
    if (cells.empty()) continue;
    for (int i = 0; i < config.trials_per_theorem; ++i) {
      Job j;
      j.theorem = tid;
      j.trial_index = i;
      j.ts = TrialSeed{
          derive_seed(config.master_seed, theorem_ordinal(tid), i), i};
      j.cell = cells[std::size_t(i) % cells.size()];
      jobs.push_back(std::move(j));
    }
  }

  std::vector<std::vector<InequalityReport>> slots(jobs.size());
  const int nthreads =
      std::min(resolve_threads(config),
               int(std::max<std::size_t>(jobs.size(), 1)));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      run_job(jobs[i], config, slots[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) break;
        run_job(jobs[i], config, slots[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<InequalityReport> reports;
  for (auto& s : slots)
    for (auto& r : s) reports.push_back(std::move(r));
  return reports;
}

std::vector<TheoremSummary> summarize(const std::vector<InequalityReport>& reports) {
  std::vector<TheoremSummary> out;
  auto find = [&](const std::string& id) -> TheoremSummary& {
    for (auto& s : out)
      if (s.id == id) return s;
    out.push_back(TheoremSummary{id});
    return out.back();
  };
  for (const auto& r : reports) {
    std::string id = theorem_name(r.theorem);
    if (r.literal_variant) id += "_literal";
    TheoremSummary& s = find(id);
    ++s.count;
    switch (r.verdict) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Violated: ++s.violated; break;
      case Verdict::Inconclusive: ++s.inconclusive; break;
      case Verdict::Error: ++s.errors; break;
    }
    if (r.verdict != Verdict::Error) {
      if (s.count == 1 || r.margin < s.min_margin) s.min_margin = r.margin;
      s.mean_margin += r.margin;
    }
  }
  for (auto& s : out) {
    const int counted = s.count - s.errors;
    if (counted > 0) s.mean_margin /= counted;
  }
  return out;
}

}  // namespace hadfrac
