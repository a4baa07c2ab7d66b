#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qedccr/bell.hpp"
#include "qedccr/errors.hpp"
#include "qedccr/regime.hpp"
#include "qedccr/scattering.hpp"

using namespace qedccr;

namespace {

constexpr double pi = std::numbers::pi;
double const lam = kMuonElectronMassRatio;

Regime verdict(Family f, double angle, std::size_t grid = kDefaultRegimeGrid, double mu = 1.0) {
  auto const g = uniform_theta_grid(grid);
  return classify(Process::Bhabha, mu, lam, FamilyState{f, angle}, g).regime;
}

}  // namespace

TEST_CASE("family states") {
  auto const s = FamilyState{Family::PsiMinus, pi / 4}.state();
  CHECK(equal_up_to_phase(s, bell_state(BellLabel::PsiMinus)));
  auto const t = FamilyState{Family::PhiMinus, 0.3}.state();
  CHECK(t.a().real() == doctest::Approx(std::cos(0.3)));
  CHECK(t.d().real() == doctest::Approx(-std::sin(0.3)));
  for (auto f : {Family::PhiPlus, Family::PhiMinus, Family::PsiPlus, Family::PsiMinus}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("xyz"), DomainError);
}

TEST_CASE("delta C examples") {
  for (double mu : {0.2, 1.0, 30.0}) {
    for (double th : {0.4, 1.9, pi, 5.0}) {
      Kinematics const k(mu, th);
      CHECK(std::abs(delta_c(Process::Bhabha, k, FamilyState{Family::PsiMinus, pi / 4})) < 1e-12);
      CHECK(std::abs(delta_c(Process::Bhabha, k, FamilyState{Family::PhiPlus, pi / 4})) < 1e-9);
    }
  }
  CHECK_THROWS_AS(delta_c(Process::Bhabha, Kinematics(1.0, 1.0),
                          TwoQubitState::basis(Helicity::R, Helicity::L)),
                  ZeroInitialEntanglementError);
  CHECK(delta_c(Process::Bhabha, Kinematics(1.0, pi / 2), FamilyState{Family::PhiPlus, pi / 8}) > 0.0);
}

TEST_CASE("Bhabha regimes at mu = 1") {
  for (double a : {pi / 16, pi / 8, 3 * pi / 16}) {
    CHECK(verdict(Family::PhiPlus, a) == Regime::Entanglophilus);
    CHECK(verdict(Family::PhiMinus, a) == Regime::Entanglophobus);
  }
  CHECK(verdict(Family::PsiPlus, pi / 8) == Regime::Mixed);
  CHECK(verdict(Family::PsiMinus, pi / 8) == Regime::Mixed);
}

TEST_CASE("verdicts are stable under grid refinement") {
  for (Family f : {Family::PhiPlus, Family::PhiMinus, Family::PsiPlus}) {
    for (double a : {pi / 16, pi / 8, 3 * pi / 16}) {
      CHECK(verdict(f, a, 360) == verdict(f, a, 3600));
    }
  }
}

TEST_CASE("psi families are not symmetric under beta -> -beta") {
  auto const g = uniform_theta_grid(360);
  for (Family f : {Family::PsiPlus, Family::PsiMinus}) {
    auto const plus = delta_c_scan(Process::Bhabha, 1.0, lam, FamilyState{f, pi / 8}.state(), g);
    auto const minus = delta_c_scan(Process::Bhabha, 1.0, lam, FamilyState{f, -pi / 8}.state(), g);
    double gap = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) gap = std::max(gap, std::abs(plus[i] - minus[i]));
    CHECK(gap > 1e-6);
  }
}

TEST_CASE("verdict records the extreme values") {
  auto const g = uniform_theta_grid(720);
  auto const v = classify(Process::Bhabha, 1.0, lam, FamilyState{Family::PsiPlus, pi / 8}, g);
  CHECK(v.min_dc < 0.0);
  CHECK(v.max_dc > 0.0);
  CHECK(v.theta_grid_size == 720);
}

TEST_CASE("general configurations") {
  auto const g = uniform_theta_grid(720);
  // A: concurrence grows at every angle
  auto const a = TwoQubitState::general(pi / 4, pi / 6, pi / 2);
  CHECK(classify(Process::Bhabha, 1.0, lam, a, g).regime == Regime::Entanglophilus);
  // B: concurrence drops, touching zero where Re(ad - bc) changes sign
  auto const b = TwoQubitState::general(pi / 3, pi / 6, 0.0);
  CHECK(classify(Process::Bhabha, 1.0, lam, b, g).regime == Regime::Entanglophobus);
  int sign_changes = 0;
  double prev = 0.0;
  for (double th : g) {
    auto const f = scatter({Process::Bhabha, Kinematics(1.0, th), b}).final;
    double const det = (f.a() * f.d() - f.b() * f.c()).real();
    if (prev != 0.0 && (det > 0) != (prev > 0)) ++sign_changes;
    prev = det;
  }
  CHECK(sign_changes > 0);
}
