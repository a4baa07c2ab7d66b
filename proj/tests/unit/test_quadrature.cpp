#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qedccr/errors.hpp"
#include "qedccr/quadrature.hpp"

using namespace qedccr;

TEST_CASE("Gauss-Legendre rules") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 32u, 64u}) {
    auto const r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == n);
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w += r.weights[i];
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      CHECK(std::abs(r.nodes[i] + r.nodes[n - 1 - i]) < 1e-14);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // exact for polynomials of degree 2n - 1
    for (std::size_t deg = 0; deg < 2 * n; deg += 2) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += r.weights[i] * std::pow(r.nodes[i], double(deg));
      CHECK(acc == doctest::Approx(2.0 / double(deg + 1)).epsilon(1e-13));
    }
  }
  auto const two = gauss_legendre(2);
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("adaptive integration") {
  auto const r = integrate_adaptive<2>(
      [](double x) { return std::array<double, 2>{std::sin(x), std::exp(x)}; }, 0.0,
      std::numbers::pi);
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.value[1] == doctest::Approx(std::exp(std::numbers::pi) - 1.0).epsilon(1e-12));

  // sharply peaked integrand forces refinement
  auto const peak = integrate_adaptive<1>(
      [](double x) { return std::array<double, 1>{1e-4 / (x * x + 1e-8)}; }, -1.0, 1.0);
  CHECK(peak.value[0] == doctest::Approx(2.0 * std::atan(1e4)).epsilon(1e-8));
  CHECK(peak.panels > 1);

  AdaptiveOptions tight;
  tight.max_depth = 1;
  tight.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate_adaptive<1>(
                      [](double x) { return std::array<double, 1>{1e-4 / (x * x + 1e-8)}; },
                      -1.0, 1.0, tight),
                  QuadratureError);
}
