#include "qedccr/limits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qedccr/errors.hpp"
#include "qedccr/scattering.hpp"

namespace qedccr {

double CcrLimit::residual_a() const { return std::abs(c * c + pa * pa + va * va - 1.0); }
double CcrLimit::residual_b() const { return std::abs(c * c + pb * pb + vb * vb - 1.0); }

double limit_denominator(Case2Params const& p, double theta, LimitReading reading) {
  double const c2t = std::cos(2.0 * theta);
  double const st = std::sin(theta);
  double const lead = reading == LimitReading::Corrected ? 7.0 + c2t : 7.0 + c2t * c2t;
  return 2.0 * lead * lead +
         4.0 * std::cos(2.0 * p.alpha) * std::cos(2.0 * p.beta) * (15.0 + c2t) * st * st +
         8.0 * std::sin(2.0 * p.alpha) * std::sin(2.0 * p.beta) * st * st * st * st;
}

CcrLimit ccr_limit_case2(Case2Params const& p, double theta, LimitReading reading) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= 2.0 * std::numbers::pi) {
    throw DomainError("theta must lie in (0, 2pi), got " + std::to_string(theta));
  }
  double const d = limit_denominator(p, theta, reading);
  if (std::abs(d) < 1e-14) throw SingularDenominatorError("D_II vanishes");

  double const a = p.alpha;
  double const b = p.beta;
  double const st = std::sin(theta);
  double const c1 = std::cos(theta);
  double const c3 = std::cos(3.0 * theta);
  double const sab = std::sin(a + b);
  double const ch = std::cos(0.5 * theta);
  double const sh = std::sin(0.5 * theta);
  // cot⁴(θ/2) sin⁴(θ/2) = cos⁴(θ/2)
  double const ch4 = ch * ch * ch * ch;
  double const sh4 = sh * sh * sh * sh;
  double const v_scale = reading == LimitReading::Corrected ? 128.0 : 64.0;

  CcrLimit out;
  out.denominator = d;
  out.c = 4.0 / d *
          (1.0 - 8.0 * std::cos(2.0 * (a - b)) + 7.0 * std::cos(2.0 * (a + b)) -
           2.0 * std::cos(2.0 * theta) * sab * sab) *
          st * st;
  out.pa = 8.0 / d *
           (std::cos(2.0 * b) * (c3 + 7.0 * c1 - 8.0) - std::cos(2.0 * a) * (c3 + 7.0 * c1 + 8.0));
  out.pb = 8.0 / d *
           (std::cos(2.0 * a) * (c3 + 7.0 * c1 - 8.0) - std::cos(2.0 * b) * (c3 + 7.0 * c1 + 8.0));
  out.va = v_scale / d * (ch4 * std::sin(2.0 * a) + sh4 * std::sin(2.0 * b));
  out.vb = v_scale / d * (ch4 * std::sin(2.0 * b) + sh4 * std::sin(2.0 * a));
  if (reading == LimitReading::Corrected) {
    out.c = std::abs(out.c);
    out.pa = std::abs(out.pa);
    out.pb = std::abs(out.pb);
    out.va = std::abs(out.va);
    out.vb = std::abs(out.vb);
  }
  return out;
}

LimitComparison compare_with_engine(std::span<double const> alphas,
                                    std::span<double const> betas,
                                    std::span<double const> thetas, double mu,
                                    LimitReading reading) {
  LimitComparison cmp;
  for (double a : alphas) {
    for (double b : betas) {
      auto const initial = TwoQubitState::product(a, b);
      for (double theta : thetas) {
        auto const lim = ccr_limit_case2({a, b}, theta, reading);
        auto const r = scatter({Process::Bhabha, Kinematics(mu, theta), initial}).final_report;
        double const dev = std::max({std::abs(lim.c - r.concurrence),
                                     std::abs(lim.pa - r.a.predictability),
                                     std::abs(lim.pb - r.b.predictability),
                                     std::abs(lim.va - r.a.visibility),
                                     std::abs(lim.vb - r.b.visibility)});
        if (dev > cmp.max_deviation || cmp.points == 0) {
          cmp.max_deviation = std::max(cmp.max_deviation, dev);
          cmp.worst_params = {a, b};
          cmp.worst_theta = theta;
        }
        cmp.max_residual = std::max({cmp.max_residual, lim.residual_a(), lim.residual_b()});
        ++cmp.points;
      }
    }
  }
  return cmp;
}

}  // namespace qedccr
