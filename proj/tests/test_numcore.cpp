#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hadfrac/gamma.hpp"
#include "hadfrac/positive_function.hpp"
#include "support/oracles.hpp"

using namespace hadfrac;

namespace {
double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("gamma_fn matches reference values") {
  // 20-digit references computed independently of this code base.
  const struct {
    double x, want;
  } cases[] = {
      {0.05, 19.470085311255512864},
      {0.1, 9.5135076986687318363},
      {0.5, 1.7724538509055160273},
      {1.0, 1.0},
      {1.5, 0.88622692545275801365},
      {2.5, 1.3293403881791370205},
      {5.0, 24.0},
      {7.5, 1871.2543057977883465},
      {10.0, 362880.0},
      {19.5, 27724322986333718.178},
  };
  for (const auto& c : cases) {
    CAPTURE(c.x);
    CHECK(rel_err(gamma_fn(c.x), c.want) <= 1e-14);
  }
}

TEST_CASE("gamma_fn rejects poles and non-finite input") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(std::nan("")), std::domain_error);
  // negative non-integers are fine (reflection)
  CHECK(rel_err(gamma_fn(-0.5), -2.0 * 1.7724538509055160273) <= 1e-13);
}

TEST_CASE("gamma perturbation hook scales the result") {
  const double base = gamma_fn(0.5);
  set_gamma_perturbation(1e-6);
  const double bumped = gamma_fn(0.5);
  set_gamma_perturbation(0.0);
  CHECK(rel_err(bumped, base * (1.0 + 1e-6)) <= 1e-12);
  CHECK(gamma_fn(0.5) == base);
}

TEST_CASE("constant function") {
  const PositiveFunction f = PositiveFunction::constant(3.25, std::exp(2.0));
  CHECK(f.kind() == PositiveFunction::Kind::Constant);
  CHECK(f.value(1.0) == 3.25);
  CHECK(f.value(std::exp(2.0)) == 3.25);
  CHECK(f.kinks().empty());
  CHECK_THROWS_AS(f.value(0.5), std::domain_error);
  CHECK_THROWS_AS(PositiveFunction::constant(-1.0, 2.0), std::invalid_argument);
}

TEST_CASE("power kernel input matches its formula") {
  // z(t) = e^{((beta-1)/beta) ln t} (ln t)^{lambda-1}
  const double beta = 0.5, lambda = 2.0;
  const PositiveFunction z =
      PositiveFunction::power_input(lambda, beta, std::exp(2.0));
  CHECK(z.kind() == PositiveFunction::Kind::PowerForm);
  for (double t : {1.3, 2.0, 5.0, 7.38}) {
    const double want = std::exp((beta - 1.0) / beta * std::log(t)) *
                        std::pow(std::log(t), lambda - 1.0);
    CHECK(rel_err(z.value(t), want) <= 1e-14);
  }
  CHECK(z.value(1.0) == 0.0);  // (ln 1)^{lambda-1} with lambda > 1
}

TEST_CASE("make_function interpolates its data and stays C1") {
  const std::vector<double> knots = {0.0, 0.5, 1.2, 2.0};
  const std::vector<double> logvals = {0.0, 0.4, -0.3, 0.1};
  const PositiveFunction f = make_function(knots, logvals);
  for (std::size_t i = 0; i < knots.size(); ++i)
    CHECK(rel_err(f.value(std::exp(knots[i])), std::exp(logvals[i])) <= 1e-15);
  // continuity of value and slope across an interior knot
  const double u = 1.2, h = 1e-7;
  const LogJet jl = f.log_jet_u(u - h), jr = f.log_jet_u(u + h);
  CHECK(std::abs(jl.y - jr.y) <= 1e-6);
  CHECK(std::abs(jl.dy - jr.dy) <= 1e-5);
  // interior knots are the kinks
  REQUIRE(f.kinks().size() == 2);
  CHECK(f.kinks()[0] == 0.5);
  CHECK(f.kinks()[1] == 1.2);
}

TEST_CASE("monotone data gives a monotone, overshoot-free interpolant") {
  const std::vector<double> knots = {0.0, 0.3, 0.9, 1.4, 2.0};
  const std::vector<double> logvals = {-1.0, -0.5, 0.2, 0.95, 1.0};
  const PositiveFunction f = make_function(knots, logvals);
  double prev = -1e300;
  for (int i = 0; i <= 400; ++i) {
    const double u = 2.0 * i / 400.0;
    const double y = f.log_value_u(u);
    CHECK(y >= -1.0 - 1e-12);
    CHECK(y <= 1.0 + 1e-12);
    CHECK(y >= prev - 1e-12);
    prev = y;
  }
}

TEST_CASE("make_function validates its input") {
  using V = std::vector<double>;
  CHECK_THROWS_AS(make_function(V{0.0}, V{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_function(V{0.1, 1.0}, V{0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_function(V{0.0, 1.0, 0.5}, V{0.0, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_function(V{0.0, 1.0}, V{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_function(V{0.0, 1.0}, V{0.0, std::nan("")}),
                  std::invalid_argument);
}

TEST_CASE("independent Hermite evaluator agrees with the library") {
  const std::vector<double> knots = {0.0, 0.4, 1.0, 1.7, 2.0};
  const std::vector<double> logvals = {0.2, -0.1, 0.4, 0.3, -0.2};
  const PositiveFunction f = make_function(knots, logvals);
  for (int i = 0; i <= 200; ++i) {
    const double t = std::exp(2.0 * i / 200.0);
    CHECK(rel_err(f.value(t), oracle::fn_value(f, t)) <= 1e-13);
  }
}

TEST_CASE("combine multiplies pointwise") {
  const PositiveFunction f =
      make_function(std::vector<double>{0.0, 0.7, 1.5, 2.0},
                    std::vector<double>{0.1, 0.5, -0.2, 0.3});
  const PositiveFunction g =
      make_function(std::vector<double>{0.0, 0.4, 1.1, 2.0},
                    std::vector<double>{-0.3, 0.2, 0.6, -0.1});
  const PositiveFunction fg = combine({f, g}, {1.0, 1.0});
  const PositiveFunction f2 = pow_fn(f, 2.0);
  const PositiveFunction finv = pow_fn(f, -1.5);
  for (int i = 0; i <= 100; ++i) {
    const double t = std::exp(2.0 * i / 100.0);
    CHECK(rel_err(fg.value(t), f.value(t) * g.value(t)) <= 1e-12);
    CHECK(rel_err(f2.value(t), std::pow(f.value(t), 2.0)) <= 1e-12);
    CHECK(rel_err(finv.value(t), std::pow(f.value(t), -1.5)) <= 1e-12);
  }
  // union-grid kinks
  CHECK(fg.kinks().size() == 4);
}

TEST_CASE("combine handles power and constant factors") {
  const double X = std::exp(2.0);
  const PositiveFunction z = PositiveFunction::power_input(1.5, 0.5, X);
  const PositiveFunction c = PositiveFunction::constant(2.0, X);
  const PositiveFunction zc = combine({z, c}, {2.0, 1.0});
  CHECK(zc.kind() == PositiveFunction::Kind::PowerForm);
  for (double t : {1.5, 3.0, 7.0})
    CHECK(rel_err(zc.value(t), 2.0 * std::pow(z.value(t), 2.0)) <= 1e-13);
  // spline x power is rejected
  const PositiveFunction s = make_function(std::vector<double>{0.0, 1.0, 2.0},
                                           std::vector<double>{0.0, 0.2, 0.1});
  CHECK_THROWS_AS(combine({s, z}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(combine({s}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(combine({}, {}), std::invalid_argument);
}

TEST_CASE("combine_add approximates the pointwise sum") {
  const PositiveFunction f =
      make_function(std::vector<double>{0.0, 0.6, 1.3, 2.0},
                    std::vector<double>{0.4, -0.8, 0.9, 0.0});
  const PositiveFunction g =
      make_function(std::vector<double>{0.0, 0.5, 1.6, 2.0},
                    std::vector<double>{-0.5, 0.7, -0.9, 0.4});
  const PositiveFunction s = combine_add(f, g);
  for (int i = 0; i <= 500; ++i) {
    const double t = std::exp(2.0 * i / 500.0);
    CHECK(rel_err(s.value(t), f.value(t) + g.value(t)) <= 1e-7);
  }
  const PositiveFunction c1 = PositiveFunction::constant(1.5, std::exp(2.0));
  const PositiveFunction c2 = PositiveFunction::constant(2.5, std::exp(2.0));
  const PositiveFunction cs = combine_add(c1, c2);
  CHECK(cs.kind() == PositiveFunction::Kind::Constant);
  CHECK(cs.value(2.0) == 4.0);
  CHECK_THROWS_AS(
      combine_add(f, PositiveFunction::power_input(2.0, 0.5, std::exp(2.0))),
      std::invalid_argument);
}

TEST_CASE("serialization round-trips exactly") {
  const PositiveFunction f =
      make_function(std::vector<double>{0.0, 0.37, 1.21, 2.0},
                    std::vector<double>{0.11, -0.52, 0.73, 0.29});
  const std::string text = serialize_function(f);
  const PositiveFunction f2 = deserialize_function(text);
  CHECK(serialize_function(f2) == text);
  for (double t : {1.0, 1.7, 3.1, 6.2, std::exp(2.0)})
    CHECK(f.value(t) == f2.value(t));  // bitwise: doubles survive JSON

  const PositiveFunction c = PositiveFunction::constant(0.75, 3.0);
  CHECK(deserialize_function(serialize_function(c)).value(2.0) == 0.75);
  const PositiveFunction z = PositiveFunction::power_input(2.5, 0.25, 5.0);
  const PositiveFunction z2 = deserialize_function(serialize_function(z));
  CHECK(z.value(4.0) == z2.value(4.0));
  CHECK_THROWS_AS(deserialize_function("{\"kind\":\"nope\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(deserialize_function("not json"), std::exception);
}

TEST_CASE("log_jet_u derivatives match finite differences") {
  const PositiveFunction f =
      make_function(std::vector<double>{0.0, 0.8, 1.5, 2.0},
                    std::vector<double>{0.3, -0.4, 0.6, 0.2});
  for (double u : {0.31, 0.97, 1.72}) {
    const double h = 1e-5;
    const LogJet j = f.log_jet_u(u);
    const double y0 = f.log_value_u(u - h), y1 = f.log_value_u(u + h);
    CHECK(std::abs(j.dy - (y1 - y0) / (2 * h)) <= 1e-7);
    CHECK(std::abs(j.d2y - (y1 - 2 * f.log_value_u(u) + y0) / (h * h)) <= 1e-4);
  }
}
