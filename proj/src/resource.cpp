#include "qedccr/resource.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qedccr/errors.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/quadrature.hpp"
#include "qedccr/scattering.hpp"

namespace qedccr {

ThetaDomain::ThetaDomain(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo > 0.0 && lo < hi && hi < 2.0 * std::numbers::pi)) {
    throw DomainError("theta domain must satisfy 0 < lo < hi < 2pi, got [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double WeightedAverages::residual_a() const {
  return std::abs(c2_bar + pa2_bar + va2_bar - 1.0);
}
double WeightedAverages::residual_b() const {
  return std::abs(c2_bar + pb2_bar + vb2_bar - 1.0);
}

WeightedAverages weighted_average(Process process, double mu, double lambda,
                                  TwoQubitState const& initial, ThetaDomain const& domain,
                                  AverageOptions const& opts) {
  if (opts.quadrature_points < 16) {
    throw PreconditionError("weighted_average needs at least 16 quadrature points per panel");
  }
  Kinematics(mu, domain.lo(), lambda);

  auto integrand = [&](double theta) -> std::array<double, 6> {
    auto const m = amplitude_set(process, Kinematics(mu, theta, lambda));
    auto const raw = scattered_coefficients(m, initial);
    double w = 0.0;
    for (auto const& z : raw) w += std::norm(z);
    if (opts.sin_weight) w *= std::sin(theta);
    if (w == 0.0) return {};
    auto const s = TwoQubitState::normalize(raw);
    double const c = concurrence(s);
    double const pa = predictability(s, Subsystem::A);
    double const pb = predictability(s, Subsystem::B);
    double const va = visibility(s, Subsystem::A);
    double const vb = visibility(s, Subsystem::B);
    return {w, w * c * c, w * pa * pa, w * pb * pb, w * va * va, w * vb * vb};
  };

  AdaptiveOptions aopts;
  aopts.points = opts.quadrature_points;
  aopts.rel_tol = opts.rel_tol;
  auto const res = integrate_adaptive<6>(integrand, domain.lo(), domain.hi(), aopts);
  auto const& v = res.value;
  if (!(v[0] > 0.0)) throw DegenerateOutcomeError("cross-section weight vanishes on the domain");

  WeightedAverages out;
  out.n_weight = v[0];
  out.c2_bar = v[1] / v[0];
  out.pa2_bar = v[2] / v[0];
  out.pb2_bar = v[3] / v[0];
  out.va2_bar = v[4] / v[0];
  out.vb2_bar = v[5] / v[0];
  out.panels = res.panels;
  return out;
}

}  // namespace qedccr
