#include "hadfrac/positive_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hadfrac {

namespace {

constexpr double kEdgeTol = 1e-12;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// PCHIP slope selection: Fritsch-Butland weighted harmonic mean inside,
// the usual one-sided three-point rule at the ends.  Guarantees
// |d_j| <= 3 min(|delta|) on each flank, hence no overshoot of the data.
std::vector<double> pchip_slopes(const std::vector<double>& u,
                                 const std::vector<double>& y) {
  const std::size_t K = u.size() - 1;  // interval count
  std::vector<double> d(K + 1);
  if (K == 1) {
    d[0] = d[1] = (y[1] - y[0]) / (u[1] - u[0]);
    return d;
  }
  std::vector<double> h(K), del(K);
  for (std::size_t j = 0; j < K; ++j) {
    h[j] = u[j + 1] - u[j];
    del[j] = (y[j + 1] - y[j]) / h[j];
  }
  for (std::size_t j = 1; j < K; ++j) {
    if (del[j - 1] * del[j] <= 0.0) {
      d[j] = 0.0;
    } else {
      const double w1 = 2.0 * h[j] + h[j - 1];
      const double w2 = h[j] + 2.0 * h[j - 1];
      d[j] = (w1 + w2) / (w1 / del[j - 1] + w2 / del[j]);
    }
  }
  auto edge = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sgn(s) != sgn(d0)) {
      s = 0.0;
    } else if (sgn(d0) != sgn(d1) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  d[0] = edge(h[0], h[1], del[0], del[1]);
  d[K] = edge(h[K - 1], h[K - 2], del[K - 1], del[K - 2]);
  return d;
}

struct HermiteJet {
  double y, dy, d2y;
};

HermiteJet hermite_jet(double u0, double u1, double y0, double y1, double d0,
                       double d1, double u) {
  const double h = u1 - u0;
  const double t = (u - u0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  const double y_ = h00 * y0 + h * h10 * d0 + h01 * y1 + h * h11 * d1;
  const double g00 = 6.0 * t2 - 6.0 * t;
  const double g10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double g01 = -g00;
  const double g11 = 3.0 * t2 - 2.0 * t;
  const double dy = (g00 * y0 + g01 * y1) / h + g10 * d0 + g11 * d1;
  const double q00 = 12.0 * t - 6.0;
  const double q10 = 6.0 * t - 4.0;
  const double q01 = -q00;
  const double q11 = 6.0 * t - 2.0;
  const double d2y = (q00 * y0 + q01 * y1) / (h * h) + (q10 * d0 + q11 * d1) / h;
  return {y_, dy, d2y};
}

void append_sorted_unique(std::vector<double>& dst, const std::vector<double>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<double> sorted_unique(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  return out;
}

}  // namespace

void DomainSpec::validate() const {
  if (!(X > 1.0) || !std::isfinite(X))
    throw std::invalid_argument("DomainSpec: X must be finite and > 1");
}

PositiveFunction PositiveFunction::constant(double c, double X) {
  DomainSpec{X}.validate();
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("constant: value must be positive and finite");
  PositiveFunction f;
  f.kind_ = Kind::Constant;
  f.logX_ = std::log(X);
  f.lscale_ = std::log(c);
  return f;
}

PositiveFunction PositiveFunction::power_form_raw(double lscale, double kappa,
                                                  double mu, double X) {
  DomainSpec{X}.validate();
  if (!std::isfinite(lscale) || !std::isfinite(kappa) || !std::isfinite(mu))
    throw std::invalid_argument("power_form_raw: non-finite parameter");
  PositiveFunction f;
  f.kind_ = Kind::PowerForm;
  f.logX_ = std::log(X);
  f.lscale_ = lscale;
  f.kappa_ = kappa;
  f.mu_ = mu;
  return f;
}

PositiveFunction PositiveFunction::power_input(double lambda, double beta,
                                               double X) {
  if (!(lambda > 0.0)) throw std::invalid_argument("power_input: lambda must be > 0");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("power_input: beta must lie in (0, 1]");
  // e^{((beta-1)/beta) u} u^{lambda-1} = e^{-kappa u} u^{mu}
  return power_form_raw(0.0, (1.0 - beta) / beta, lambda - 1.0, X);
}

double PositiveFunction::X() const { return std::exp(logX_); }

std::size_t PositiveFunction::locate(double u) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  std::size_t i = (it == knots_.begin()) ? 0 : std::size_t(it - knots_.begin()) - 1;
  if (i >= knots_.size() - 1) i = knots_.size() - 2;
  return i;
}

double PositiveFunction::log_value_u(double u) const {
  if (u < 0.0) u = 0.0;
  if (u > logX_) u = logX_;
  switch (kind_) {
    case Kind::Constant:
      return lscale_;
    case Kind::PowerForm: {
      double acc = lscale_ - kappa_ * u;
      if (mu_ != 0.0) acc += mu_ * std::log(u);
      return acc;
    }
    case Kind::SplineExp: {
      const std::size_t i = locate(u);
      return hermite_jet(knots_[i], knots_[i + 1], logvals_[i], logvals_[i + 1],
                         slopes_[i], slopes_[i + 1], u)
          .y;
    }
  }
  return lscale_;
}

LogJet PositiveFunction::log_jet_u(double u) const {
  if (u < 0.0) u = 0.0;
  if (u > logX_) u = logX_;
  switch (kind_) {
    case Kind::Constant:
      return {lscale_, 0.0, 0.0};
    case Kind::PowerForm: {
      if (mu_ == 0.0) return {lscale_ - kappa_ * u, -kappa_, 0.0};
      if (!(u > 0.0))
        throw std::domain_error("log_jet_u: power form jet undefined at u = 0");
      return {lscale_ - kappa_ * u + mu_ * std::log(u), -kappa_ + mu_ / u,
              -mu_ / (u * u)};
    }
    case Kind::SplineExp: {
      const std::size_t i = locate(u);
      const HermiteJet j =
          hermite_jet(knots_[i], knots_[i + 1], logvals_[i], logvals_[i + 1],
                      slopes_[i], slopes_[i + 1], u);
      return {j.y, j.dy, j.d2y};
    }
  }
  return {lscale_, 0.0, 0.0};
}

double PositiveFunction::value(double t) const {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::domain_error("value: t must be positive and finite");
  const double X_ = X();
  if (t < 1.0 - kEdgeTol || t > X_ * (1.0 + kEdgeTol))
    throw std::domain_error("value: t outside [1, X]");
  double u = std::log(std::max(t, 1.0));
  if (kind_ == Kind::PowerForm && u <= 0.0) {
    if (mu_ > 0.0) return 0.0;
    if (mu_ < 0.0)
      throw std::domain_error("value: power form singular at t = 1");
    return std::exp(lscale_);
  }
  return std::exp(log_value_u(u));
}

double evaluate(const PositiveFunction& f, double t) { return f.value(t); }

PositiveFunction make_function(std::span<const double> knots,
                               std::span<const double> log_ordinates) {
  if (knots.size() < 2)
    throw std::invalid_argument("make_function: need at least two knots");
  if (knots.size() != log_ordinates.size())
    throw std::invalid_argument("make_function: knot/ordinate size mismatch");
  if (std::abs(knots[0]) > kEdgeTol)
    throw std::invalid_argument("make_function: first knot must be 0 (t = 1)");
  for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
    if (!(knots[j + 1] > knots[j]))
      throw std::invalid_argument("make_function: knots must strictly increase");
  }
  for (double y : log_ordinates) {
    if (!std::isfinite(y))
      throw std::invalid_argument("make_function: non-finite log-ordinate");
  }
  PositiveFunction f;
  f.kind_ = PositiveFunction::Kind::SplineExp;
  f.knots_.assign(knots.begin(), knots.end());
  f.knots_.front() = 0.0;
  f.logvals_.assign(log_ordinates.begin(), log_ordinates.end());
  f.logX_ = f.knots_.back();
  f.slopes_ = pchip_slopes(f.knots_, f.logvals_);
  f.kinks_.assign(f.knots_.begin() + 1, f.knots_.end() - 1);
  return f;
}

PositiveFunction combine(const std::vector<PositiveFunction>& fs,
                         const std::vector<double>& exponents) {
  if (fs.empty()) throw std::invalid_argument("combine: empty function list");
  if (fs.size() != exponents.size())
    throw std::invalid_argument("combine: function/exponent size mismatch");
  for (double e : exponents) {
    if (!std::isfinite(e))
      throw std::invalid_argument("combine: non-finite exponent");
  }
  const double U = fs[0].log_upper();
  for (const auto& f : fs) {
    if (std::abs(f.log_upper() - U) > 1e-12 * std::max(1.0, U))
      throw std::invalid_argument("combine: mismatched domains");
  }

  bool any_spline = false, any_power = false;
  for (const auto& f : fs) {
    any_spline |= f.kind() == PositiveFunction::Kind::SplineExp;
    any_power |= f.kind() == PositiveFunction::Kind::PowerForm;
  }

  if (!any_spline) {
    double lscale = 0.0, kappa = 0.0, mu = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      lscale += exponents[i] * fs[i].lscale_;
      kappa += exponents[i] * fs[i].kappa_;
      mu += exponents[i] * fs[i].mu_;
    }
    const double X = std::exp(U);
    if (kappa == 0.0 && mu == 0.0)
      return PositiveFunction::constant(std::exp(lscale), X);
    return PositiveFunction::power_form_raw(lscale, kappa, mu, X);
  }
  if (any_power)
    throw std::invalid_argument(
        "combine: mixing spline and power factors is not supported");

  std::vector<double> grid;
  std::vector<double> kinks;
  double const_log = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind() == PositiveFunction::Kind::Constant) {
      const_log += exponents[i] * fs[i].lscale_;
    } else {
      append_sorted_unique(grid, fs[i].knots());
      append_sorted_unique(kinks, fs[i].kinks());
    }
  }
  grid = sorted_unique(std::move(grid), 1e-13 * std::max(1.0, U));
  grid.front() = 0.0;
  grid.back() = U;
  kinks = sorted_unique(std::move(kinks), 1e-13 * std::max(1.0, U));

  PositiveFunction out;
  out.kind_ = PositiveFunction::Kind::SplineExp;
  out.logX_ = U;
  out.knots_ = grid;
  out.logvals_.resize(grid.size());
  out.slopes_.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double y = const_log, dy = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].kind() != PositiveFunction::Kind::SplineExp) continue;
      const LogJet j = fs[i].log_jet_u(grid[k]);
      y += exponents[i] * j.y;
      dy += exponents[i] * j.dy;
    }
    out.logvals_[k] = y;
    out.slopes_[k] = dy;
  }
  out.kinks_ = std::move(kinks);
  return out;
}

PositiveFunction pow_fn(const PositiveFunction& f, double e) {
  return combine({f}, {e});
}

namespace {

struct AddNode {
  double u, y, dy;
};

// log(f+g) and its exact u-derivative at u.
AddNode add_node(const PositiveFunction& f, const PositiveFunction& g, double u) {
  const LogJet a = f.log_jet_u(u);
  const LogJet b = g.log_jet_u(u);
  const double m = std::max(a.y, b.y);
  const double y = m + std::log(std::exp(a.y - m) + std::exp(b.y - m));
  const double wa = std::exp(a.y - y);
  const double wb = std::exp(b.y - y);
  return {u, y, wa * a.dy + wb * b.dy};
}

}  // namespace

PositiveFunction combine_add(const PositiveFunction& f,
                             const PositiveFunction& g, double tol) {
  using Kind = PositiveFunction::Kind;
  if (f.kind() == Kind::PowerForm || g.kind() == Kind::PowerForm)
    throw std::invalid_argument("combine_add: power-form operands unsupported");
  const double U = f.log_upper();
  if (std::abs(g.log_upper() - U) > 1e-12 * std::max(1.0, U))
    throw std::invalid_argument("combine_add: mismatched domains");
  if (!(tol > 0.0)) throw std::invalid_argument("combine_add: tol must be > 0");
  if (f.kind() == Kind::Constant && g.kind() == Kind::Constant)
    return PositiveFunction::constant(std::exp(f.lscale()) + std::exp(g.lscale()),
                                      std::exp(U));

  std::vector<double> base;
  append_sorted_unique(base, f.knots());
  append_sorted_unique(base, g.knots());
  if (base.empty()) base = {0.0, U};
  base = sorted_unique(std::move(base), 1e-13 * std::max(1.0, U));
  base.front() = 0.0;
  base.back() = U;

  // Seed grid: union knots plus three uniform interior points per interval.
  std::vector<double> seed;
  seed.reserve(base.size() * 4);
  for (std::size_t j = 0; j + 1 < base.size(); ++j) {
    seed.push_back(base[j]);
    const double h = base[j + 1] - base[j];
    for (int k = 1; k <= 3; ++k) seed.push_back(base[j] + h * (k / 4.0));
  }
  seed.push_back(base.back());

  std::vector<AddNode> nodes;
  nodes.reserve(seed.size() * 2);
  for (double u : seed) nodes.push_back(add_node(f, g, u));

  // Midpoint-split refinement against the true log-sum until the Hermite
  // interpolant reproduces it to tol at three probes per interval.
  constexpr int kMaxDepth = 14;
  constexpr std::size_t kMaxNodes = 4096;
  std::vector<AddNode> extra;
  struct Piece {
    AddNode a, b;
    int depth;
  };
  std::vector<Piece> stack;
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j)
    stack.push_back({nodes[j], nodes[j + 1], 0});
  while (!stack.empty()) {
    const Piece p = stack.back();
    stack.pop_back();
    const double h = p.b.u - p.a.u;
    if (h <= 1e-12) continue;
    double err = 0.0;
    for (double tau : {0.25, 0.5, 0.75}) {
      const double u = p.a.u + h * tau;
      const AddNode truth = add_node(f, g, u);
      const HermiteJet hj =
          hermite_jet(p.a.u, p.b.u, p.a.y, p.b.y, p.a.dy, p.b.dy, u);
      err = std::max(err, std::abs(hj.y - truth.y));
    }
    if (err <= tol || p.depth >= kMaxDepth ||
        nodes.size() + extra.size() >= kMaxNodes)
      continue;
    const AddNode mid = add_node(f, g, p.a.u + 0.5 * h);
    extra.push_back(mid);
    stack.push_back({p.a, mid, p.depth + 1});
    stack.push_back({mid, p.b, p.depth + 1});
  }
  nodes.insert(nodes.end(), extra.begin(), extra.end());
  std::sort(nodes.begin(), nodes.end(),
            [](const AddNode& a, const AddNode& b) { return a.u < b.u; });

  PositiveFunction out;
  out.kind_ = Kind::SplineExp;
  out.logX_ = U;
  out.knots_.reserve(nodes.size());
  out.logvals_.reserve(nodes.size());
  out.slopes_.reserve(nodes.size());
  for (const AddNode& n : nodes) {
    if (!out.knots_.empty() && n.u - out.knots_.back() <= 1e-13) continue;
    out.knots_.push_back(n.u);
    out.logvals_.push_back(n.y);
    out.slopes_.push_back(n.dy);
  }
  out.knots_.front() = 0.0;
  out.knots_.back() = U;

  // Curvature of log(f+g) jumps only where an operand's does.
  std::vector<double> kinks;
  append_sorted_unique(kinks, f.kinks());
  append_sorted_unique(kinks, g.kinks());
  out.kinks_ = sorted_unique(std::move(kinks), 1e-13 * std::max(1.0, U));
  return out;
}

}  // namespace hadfrac
