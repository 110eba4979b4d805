#include <doctest.h>

#include <cmath>

#include "icup/errors.hpp"
#include "icup/upper_bounds.hpp"
#include "oracles.hpp"

using namespace icup;
using doctest::Approx;

TEST_SUITE("upper_bounds") {

TEST_CASE("ub_cgrc_exact examples") {
  CHECK(ub_cgrc_exact({3.0, 0.0, 0.0}) == Approx(2.0).epsilon(1e-12));
  CHECK(cgrc_best_eta({3.0, 0.0, 0.0}) == Approx(1.0).epsilon(1e-9));
  for (double p : {0.5, 6.0, 1e3, 1e7}) {
    CHECK(ub_cgrc_exact({p, 1.0, 0.0}) == Approx(oracle::c(4.0 * p)).epsilon(1e-12));
  }
  CHECK(ub_cgrc_exact({6.0, 0.5, 0.5}) <= ub_weak_enlarged({6.0, 0.5, 0.5}));
  CHECK_THROWS_AS(ub_cgrc_exact({6.0, 1.5, 0.0}), PreconditionError);
  CHECK_THROWS_AS(cgrc_best_eta({6.0, 1.5, 0.0}), PreconditionError);
}

TEST_CASE("ub_cgrc_exact frozen high-precision values") {
  // Reference maxima from an arbitrary-precision evaluation of the objective.
  CHECK(ub_cgrc_exact({6.0, 0.5, 0.0}) == Approx(2.3405251982623308).epsilon(1e-12));
  CHECK(cgrc_best_eta({6.0, 0.5, 0.0}) == Approx(0.44579305).epsilon(1e-6));
  CHECK(ub_cgrc_exact({100.0, 0.1, 0.0}) == Approx(5.1851550561646403).epsilon(1e-12));
  CHECK(ub_cgrc_exact({1e4, 0.01, 0.0}) == Approx(10.060205027646268).epsilon(1e-12));
}

TEST_CASE("ub_cgrc_exact against a dense eta grid") {
  oracle::ParamGenerator gen(71);
  for (int i = 0; i < 300; ++i) {
    const double a = gen.uniform(0.0, 1.0);
    const double p = gen.log_uniform(1e-2, 1e6);
    const double ub = ub_cgrc_exact({p, a, 0.0});
    const double grid = oracle::cgrc_grid(p, a, 100001);
    CHECK(ub >= grid - 1e-12);
    CHECK(ub - grid <= 1e-6);
  }
}

TEST_CASE("ub_weak_enlarged examples") {
  CHECK(ub_weak_enlarged({3.0, 0.0, 0.0}) == Approx(2.0).epsilon(1e-14));
  CHECK(ub_weak_enlarged({6.0, 1.0, 0.0}) == Approx(oracle::c(24.0)).epsilon(1e-14));
  CHECK(ub_weak_enlarged({6.0, 0.5, 0.0}) == Approx(2.5078300103305198).epsilon(1e-14));
  CHECK_THROWS_AS(ub_weak_enlarged({6.0, 1.01, 0.0}), PreconditionError);
}

TEST_CASE("enlargement never tightens") {
  oracle::ParamGenerator gen(73);
  for (int i = 0; i < 3000; ++i) {
    const ChannelParams p{gen.log_uniform(1e-3, 1e8), gen.uniform(0.0, 1.0), 0.0};
    CHECK(ub_cgrc_exact(p) <= ub_weak_enlarged(p) + 1e-12);
  }
}

TEST_CASE("ub_genie examples") {
  CHECK(ub_genie({3.0, 0.0, 0.0}) == Approx(2.0).epsilon(1e-15));
  CHECK(ub_genie({3.0, 0.0, 1.0}) == Approx(3.0).epsilon(1e-15));
  CHECK(ub_genie({6.0, 0.5, 0.5}) == Approx(0.5 + std::log2(5.5)).epsilon(1e-15));
  CHECK(ub_genie({0.0, 2.0, 0.0}) == 0.0);
}

TEST_CASE("ub_genie is nonnegative and increasing in P") {
  oracle::ParamGenerator gen(79);
  for (int i = 0; i < 500; ++i) {
    const double a = gen.log_uniform(1e-4, 1e4);
    double prev = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double value = ub_genie({std::pow(10.0, -3.0 + 0.1 * k), a, 0.0});
      CHECK(value >= 0.0);
      CHECK(value >= prev);
      prev = value;
    }
  }
}

TEST_CASE("ub_strong examples") {
  CHECK(ub_strong({3.0, 1.0, 0.0}) == Approx(0.5 * std::log2(13.0)).epsilon(1e-15));
  CHECK(ub_strong({3.75, 1.0, 10.0}) == Approx(2.0).epsilon(1e-15));
  CHECK(ub_strong({0.0, 2.0, 0.7}) == 0.0);
  CHECK_THROWS_AS(ub_strong({3.0, 0.99, 0.0}), PreconditionError);
}

TEST_CASE("ub_strong limits") {
  oracle::ParamGenerator gen(83);
  for (int i = 0; i < 2000; ++i) {
    ChannelParams p = gen.strong();
    p.c12 = 1e3;
    CHECK(ub_strong(p) == oracle::c(oracle::gain_b(p.gain) * p.power));
    p.c12 = 0.0;
    CHECK(ub_strong(p) <= 2.0 * oracle::c(p.power) + 1e-15);
  }
}

TEST_CASE("best_bound examples") {
  BoundReport r = best_bound({10.0, 0.5, 0.0});
  CHECK(r.ub1.has_value());
  CHECK(r.ub_cgrc_exact.has_value());
  CHECK_FALSE(r.ub3.has_value());
  CHECK(r.best <= r.ub2);

  r = best_bound({10.0, 2.0, 0.1});
  CHECK_FALSE(r.ub1.has_value());
  CHECK_FALSE(r.ub_cgrc_exact.has_value());
  REQUIRE(r.ub3.has_value());
  CHECK(r.best == std::min(r.ub2, *r.ub3));

  r = best_bound({6.0, 1.0, 0.5});
  REQUIRE(r.ub1.has_value());
  REQUIRE(r.ub_cgrc_exact.has_value());
  REQUIRE(r.ub3.has_value());
  CHECK(r.best == std::min({r.ub2, *r.ub1, *r.ub_cgrc_exact, *r.ub3}));
  CHECK(r.best == Approx(2.321928094887362).epsilon(1e-12));
}

TEST_CASE("best_bound is the minimum of what applies and names it") {
  oracle::ParamGenerator gen(89);
  for (int i = 0; i < 3000; ++i) {
    const ChannelParams p = gen.any();
    const BoundReport r = best_bound(p);
    double expected = r.ub2;
    if (r.ub1) expected = std::min(expected, *r.ub1);
    if (r.ub_cgrc_exact) expected = std::min(expected, *r.ub_cgrc_exact);
    if (r.ub3) expected = std::min(expected, *r.ub3);
    CHECK(r.best == expected);
    CHECK(r.ub1.has_value() == (p.gain <= 1.0));
    CHECK(r.ub3.has_value() == (p.gain >= 1.0));
    if (r.best_label == "ub1") CHECK(r.best == *r.ub1);
    else if (r.best_label == "cgrc_exact") CHECK(r.best == *r.ub_cgrc_exact);
    else if (r.best_label == "ub3") CHECK(r.best == *r.ub3);
    else CHECK(r.best_label == "ub2");
  }
}

}  // TEST_SUITE
