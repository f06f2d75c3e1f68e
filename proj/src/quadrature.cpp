#include "hadfrac/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace hadfrac {

namespace {

// Recurrence for monic polynomials orthogonal w.r.t. s^{alpha-1} on [0,1]
// (shifted Jacobi with parameters (0, alpha-1)):
//   p_{k+1} = (s - A_k) p_k - B_k p_{k-1}
// with A_k = (a_k + 1)/2 mapped from the [-1,1] Jacobi recurrence and
// B_0 = 1/alpha the total weight mass.
void shifted_jacobi_coeffs(double alpha, int n, std::vector<double>& A,
                           std::vector<double>& B) {
  A.resize(n);
  B.resize(n);
  const double c = alpha - 1.0;
  for (int k = 0; k < n; ++k) {
    double ak;
    if (k == 0) {
      ak = c / (alpha + 1.0);
    } else {
      const double den = (2.0 * k + c) * (2.0 * k + c + 2.0);
      ak = c * c / den;
    }
    A[k] = 0.5 * (ak + 1.0);
  }
  B[0] = 1.0 / alpha;
  if (n > 1) {
    B[1] = alpha / ((alpha + 1.0) * (alpha + 1.0) * (alpha + 2.0));
  }
  for (int k = 2; k < n; ++k) {
    const double kk = double(k);
    const double num = kk * kk * (kk + c) * (kk + c);
    const double den = (2.0 * kk + c) * (2.0 * kk + c) * (2.0 * kk + c + 1.0) *
                       (2.0 * kk + c - 1.0);
    B[k] = num / den;
  }
}

// Symmetric tridiagonal QL with implicit shifts, tracking only the first
// components of the eigenvectors (Golub-Welsch needs nothing more).
// d: diagonal, e: subdiagonal (e[i] couples i and i+1), z: first-row vector.
void tql_first_components(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
  const int n = int(d.size());
  if (n == 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60)
        throw std::runtime_error("build_jacobi_rule: QL failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, cth = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = cth * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        cth = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * cth * b;
        p = s * r;
        d[i + 1] = g + p;
        g = cth * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + cth * f;
        z[i] = cth * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  // sort nodes ascending, carrying the first components along
  for (int i = 1; i < n; ++i) {
    const double dv = d[i], zv = z[i];
    int j = i - 1;
    while (j >= 0 && d[j] > dv) {
      d[j + 1] = d[j];
      z[j + 1] = z[j];
      --j;
    }
    d[j + 1] = dv;
    z[j + 1] = zv;
  }
}

std::unique_ptr<QuadratureRule> make_rule(double alpha, int n) {
  std::vector<double> A, B;
  shifted_jacobi_coeffs(alpha, n, A, B);
  std::vector<double> d = A;
  std::vector<double> e(n, 0.0);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(B[k]);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tql_first_components(d, e, z);

  auto rule = std::make_unique<QuadratureRule>();
  rule->alpha = alpha;
  rule->n = n;
  rule->nodes = std::move(d);
  rule->weights.resize(n);
  const double mass = B[0];
  double wsum = 0.0;
  for (int i = 0; i < n; ++i) {
    rule->weights[i] = mass * z[i] * z[i];
    wsum += rule->weights[i];
    if (!(rule->nodes[i] > 0.0 && rule->nodes[i] < 1.0) ||
        !(rule->weights[i] > 0.0))
      throw std::runtime_error("build_jacobi_rule: invalid node/weight");
  }
  if (std::abs(wsum - mass) > 1e-10 * mass)
    throw std::runtime_error("build_jacobi_rule: weight mass check failed");
  return rule;
}

struct RuleKey {
  std::uint64_t alpha_bits;
  int n;
  bool operator<(const RuleKey& o) const {
    return alpha_bits != o.alpha_bits ? alpha_bits < o.alpha_bits : n < o.n;
  }
};

std::mutex g_cache_mutex;
std::map<RuleKey, std::unique_ptr<QuadratureRule>>& rule_cache() {
  static std::map<RuleKey, std::unique_ptr<QuadratureRule>> cache;
  return cache;
}

}  // namespace

const QuadratureRule& build_jacobi_rule(double alpha, int n) {
  if (!(alpha >= 0.05 && alpha < 20.5))
    throw std::invalid_argument("build_jacobi_rule: alpha outside [0.05, 20.5)");
  if (n < 1 || n > 512)
    throw std::invalid_argument("build_jacobi_rule: n outside [1, 512]");
  const RuleKey key{std::bit_cast<std::uint64_t>(alpha), n};
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& cache = rule_cache();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_rule(alpha, n)).first;
  return *it->second;
}

double integrate_weighted(const std::function<double(double)>& phi,
                          const QuadratureRule& rule) {
  double acc = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    const double v = phi(rule.nodes[i]);
    if (!std::isfinite(v)) throw NonFiniteIntegrand(rule.nodes[i]);
    acc += rule.weights[i] * v;
  }
  return acc;
}

namespace {

// One composite pass at per-panel order n.  Returns the integral and the
// total node count spent.
std::pair<double, int> composite_pass(const std::function<double(double)>& phi,
                                      double alpha,
                                      const std::vector<double>& cuts, int n) {
  double acc = 0.0;
  int used = 0;
  if (cuts.empty()) {
    const QuadratureRule& rule = build_jacobi_rule(alpha, n);
    for (int i = 0; i < n; ++i) {
      const double v = phi(rule.nodes[i]);
      if (!std::isfinite(v)) throw NonFiniteIntegrand(rule.nodes[i]);
      acc += rule.weights[i] * v;
    }
    return {acc, n};
  }
  // singular panel [0, c1]: substitute s = c1 sigma
  {
    const double c1 = cuts.front();
    const QuadratureRule& rule = build_jacobi_rule(alpha, n);
    const double scale = std::pow(c1, alpha);
    double panel = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = c1 * rule.nodes[i];
      const double v = phi(s);
      if (!std::isfinite(v)) throw NonFiniteIntegrand(s);
      panel += rule.weights[i] * v;
    }
    acc += scale * panel;
    used += n;
  }
  // smooth panels: Gauss-Legendre with the weight folded in
  const QuadratureRule& leg = build_jacobi_rule(1.0, n);
  const bool unit_weight = (alpha == 1.0);
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const double a = cuts[j];
    const double b = (j + 1 < cuts.size()) ? cuts[j + 1] : 1.0;
    const double len = b - a;
    double panel = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = a + len * leg.nodes[i];
      const double v = phi(s);
      if (!std::isfinite(v)) throw NonFiniteIntegrand(s);
      const double w = unit_weight ? 1.0 : std::pow(s, alpha - 1.0);
      panel += leg.weights[i] * w * v;
    }
    acc += len * panel;
    used += n;
  }
  return {acc, used};
}

}  // namespace

OperatorValue integrate_adaptive(const std::function<double(double)>& phi,
                                 double alpha, double rtol,
                                 std::span<const double> breakpoints) {
  if (!(rtol >= 1e-13 && rtol <= 1e-4))
    throw std::invalid_argument("integrate_adaptive: rtol outside [1e-13, 1e-4]");
  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> cleaned;
  for (double c : cuts) {
    if (c <= 1e-12 || c >= 1.0 - 1e-12) continue;
    if (!cleaned.empty() && c - cleaned.back() < 1e-12) continue;
    cleaned.push_back(c);
  }

  constexpr int kFirst = 16, kLast = 512;
  OperatorValue out;
  auto [prev, used_prev] = composite_pass(phi, alpha, cleaned, kFirst);
  out.value = prev;
  out.n_used = used_prev;
  for (int n = 2 * kFirst; n <= kLast; n *= 2) {
    auto [cur, used] = composite_pass(phi, alpha, cleaned, n);
    const double diff = std::abs(cur - prev);
    out.value = cur;
    out.err_est = diff;
    out.n_used = used;
    const double ref = std::abs(cur);
    if (diff <= rtol * (ref > 0.0 ? ref : 1.0)) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  return out;
}

}  // namespace hadfrac
