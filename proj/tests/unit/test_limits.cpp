#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qedccr/errors.hpp"
#include "qedccr/limits.hpp"
#include "qedccr/scattering.hpp"

using namespace qedccr;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("limit examples") {
  auto const z = ccr_limit_case2({0.0, 0.0}, pi / 2);
  CHECK(z.va == 0.0);
  CHECK(z.vb == 0.0);
  auto const q = ccr_limit_case2({pi / 4, pi / 4}, pi / 2);
  CHECK(q.pa < 1e-15);
  CHECK(q.pb < 1e-15);

  auto const lim = ccr_limit_case2({pi / 8, pi / 6}, 2 * pi / 3);
  auto const r = scatter({Process::Bhabha, Kinematics(1e6, 2 * pi / 3),
                          TwoQubitState::product(pi / 8, pi / 6)})
                     .final_report;
  CHECK(std::abs(lim.c - r.concurrence) < 1e-4);
  CHECK(std::abs(lim.pa - r.a.predictability) < 1e-4);
  CHECK(std::abs(lim.pb - r.b.predictability) < 1e-4);
  CHECK(std::abs(lim.va - r.a.visibility) < 1e-4);
  CHECK(std::abs(lim.vb - r.b.visibility) < 1e-4);
}

TEST_CASE("case I reduction") {
  // α = β = 0 is |RR>; at large μ the state goes to (cot⁴(θ/2) ... ) with
  // C² + P² = 1 and no visibility.
  for (double th : {0.5, 1.5, 3.0, 4.5}) {
    auto const l = ccr_limit_case2({0.0, 0.0}, th);
    CHECK(l.c * l.c + l.pa * l.pa == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed forms satisfy triality on a dense grid") {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      for (int k = 1; k < 36; ++k) {
        double const a = -pi / 2 + pi * i / 40.0;
        double const b = -pi / 2 + pi * j / 40.0;
        auto const l = ccr_limit_case2({a, b}, 2 * pi * k / 36.0);
        CHECK(l.residual_a() < 1e-12);
        CHECK(l.residual_b() < 1e-12);
      }
    }
  }
}

TEST_CASE("swap symmetry") {
  for (double a : {0.1, 0.7, 1.3}) {
    for (double b : {-0.4, 0.2, 0.9}) {
      for (double th : {0.3, 2.0, 4.0}) {
        auto const x = ccr_limit_case2({a, b}, th);
        auto const y = ccr_limit_case2({b, a}, th);
        CHECK(x.pa == y.pb);
        CHECK(x.va == y.vb);
        CHECK(x.c == y.c);
      }
    }
  }
}

TEST_CASE("literal reading violates triality") {
  double worst = 0.0;
  for (double th : {0.7, 1.2, 2.5}) {
    auto const l = ccr_limit_case2({0.4, 0.9}, th, LimitReading::Literal);
    worst = std::max({worst, l.residual_a(), l.residual_b()});
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ccr_limit_case2({0.1, 0.2}, 0.0), DomainError);
  CHECK_THROWS_AS(ccr_limit_case2({0.1, 0.2}, 2 * pi), DomainError);
  // D ≥ 16 for every (α, β, θ), so the singular branch is unreachable here
  CHECK(limit_denominator({pi / 4, -pi / 4}, pi / 2) >= 16.0 - 1e-12);
}

TEST_CASE("engine comparison helper") {
  std::vector<double> const as = {0.2, 1.0};
  std::vector<double> const bs = {-0.5, 0.6};
  auto const th = uniform_theta_grid(12);
  auto const c = compare_with_engine(as, bs, th);
  CHECK(c.points == 48);
  CHECK(c.max_deviation < 1e-4);
  CHECK(c.max_residual < 1e-12);
}
