#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "hadfrac/generators.hpp"

using namespace hadfrac;

TEST_CASE("rng matches the splitmix64 reference stream") {
  Rng r0(0);
  CHECK(r0.next() == 0xe220a8397b1dcdafull);
  CHECK(r0.next() == 0x6e789e6aa1b965f4ull);
  CHECK(r0.next() == 0x06c45d188009454full);
  CHECK(r0.next() == 0xf88bb8a8724c81ecull);
  Rng r42(42);
  CHECK(r42.next() == 0xbdd732262feb6e95ull);
  CHECK(r42.next() == 0x28efe333b266f103ull);
}

TEST_CASE("uniform draws live in their ranges") {
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = r.uniform(2.0, 5.0);
    CHECK(v >= 2.0);
    CHECK(v < 5.0);
    const int k = r.uniform_int(4);
    CHECK(k >= 0);
    CHECK(k < 4);
  }
}

TEST_CASE("derive_seed is deterministic and stream-separating") {
  CHECK(derive_seed(42, 0, 0) == derive_seed(42, 0, 0));
  std::set<std::uint64_t> seen;
  for (int stream = 0; stream < 12; ++stream)
    for (int index = 0; index < 64; ++index)
      seen.insert(derive_seed(42, stream, index));
  CHECK(seen.size() == 12 * 64);
  CHECK(derive_seed(42, 0, 1) != derive_seed(43, 0, 1));
}

TEST_CASE("random splines are positive, on-domain, and reproducible") {
  Rng a(1234), b(1234);
  for (int i = 0; i < 10; ++i) {
    const PositiveFunction f = random_spline(a);
    const PositiveFunction g = random_spline(b);
    CHECK(serialize_function(f) == serialize_function(g));
    CHECK(f.X() == std::exp(2.0));
    const int n_intervals = int(f.knots().size()) - 1;
    CHECK(n_intervals >= 5);
    CHECK(n_intervals <= 8);
    for (int j = 0; j <= 50; ++j)
      CHECK(f.value(std::exp(2.0 * j / 50.0)) > 0.0);
  }
  Rng c(1235);
  CHECK(serialize_function(random_spline(c)) !=
        serialize_function(random_spline(a)));
}

TEST_CASE("corridor pairs satisfy their hypothesis with slack") {
  CorridorSpec spec;
  spec.m = 0.5;
  spec.M = 2.0;
  for (int i = 0; i < 10; ++i) {
    const auto [f, g] = gen_corridor_pair(spec, TrialSeed{derive_seed(9, 0, i), i});
    CHECK(corridor_min_slack(f, g, spec.m, spec.M) >= -1e-12);
  }
}

TEST_CASE("tight corridor m = M gives an exact ratio") {
  CorridorSpec spec;
  spec.m = spec.M = 1.75;
  const auto [f, g] = gen_corridor_pair(spec, TrialSeed{31337, 0});
  for (int j = 0; j <= 100; ++j) {
    const double t = std::exp(2.0 * j / 100.0);
    CHECK(std::abs(f.value(t) / g.value(t) - 1.75) <= 1e-12 * 1.75);
  }
}

TEST_CASE("corridor generation is seed-deterministic") {
  CorridorSpec spec;
  spec.m = 0.9;
  spec.M = 1.1;
  const auto [f1, g1] = gen_corridor_pair(spec, TrialSeed{77, 3});
  const auto [f2, g2] = gen_corridor_pair(spec, TrialSeed{77, 3});
  CHECK(serialize_function(f1) == serialize_function(f2));
  CHECK(serialize_function(g1) == serialize_function(g2));
  const auto [f3, g3] = gen_corridor_pair(spec, TrialSeed{78, 3});
  CHECK(serialize_function(f1) != serialize_function(f3));
}

TEST_CASE("similarly ordered triples satisfy the pairwise inequality") {
  for (int i = 0; i < 10; ++i) {
    const auto [f, g, h] =
        gen_similarly_ordered_triple(TrialSeed{derive_seed(5, 1, i), i});
    CHECK(similarly_ordered_min_slack(f, g, h) >= -1e-12);
  }
}

TEST_CASE("dominated pairs keep f below h with monotone ratio") {
  for (int i = 0; i < 10; ++i) {
    const auto [f, h] =
        gen_dominated_pair(2.0, TrialSeed{derive_seed(6, 2, i), i});
    CHECK(dominated_min_slack(f, h) >= -1e-12);
    // spot pointwise dominance too
    for (int j = 0; j <= 60; ++j) {
      const double t = std::exp(2.0 * j / 60.0);
      CHECK(f.value(t) <= h.value(t) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("operator-dominance pairs keep g below f pointwise") {
  CorridorSpec spec;
  spec.gamma = 2.0;
  spec.delta = 1.0;
  for (int i = 0; i < 10; ++i) {
    const auto [f, g] =
        gen_operator_dominance_pair(spec, TrialSeed{derive_seed(8, 3, i), i});
    for (int j = 0; j <= 60; ++j) {
      const double t = std::exp(2.0 * j / 60.0);
      CHECK(g.value(t) <= f.value(t) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("corridor spec validation") {
  CorridorSpec s;
  s.m = 2.0;
  s.M = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = CorridorSpec{};
  s.p = 3.0;
  s.q = 2.0;  // not conjugate
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = CorridorSpec{};
  s.gamma = 1.0;
  s.delta = 1.5;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = CorridorSpec{};
  CHECK_NOTHROW(s.validate());
}
