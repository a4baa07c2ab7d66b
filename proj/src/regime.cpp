#include "qedccr/regime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qedccr/errors.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/scattering.hpp"

namespace qedccr {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::PhiPlus: return "phi+";
    case Family::PhiMinus: return "phi-";
    case Family::PsiPlus: return "psi+";
    case Family::PsiMinus: return "psi-";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::PhiPlus, Family::PhiMinus, Family::PsiPlus, Family::PsiMinus}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown state family '" + std::string(name) + "'");
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Entanglophilus: return "entanglophilus";
    case Regime::Entanglophobus: return "entanglophobus";
    case Regime::Mixed: return "mixed";
  }
  return "unknown";
}

TwoQubitState FamilyState::state() const {
  double const c = std::cos(angle);
  double const s = std::sin(angle);
  switch (family) {
    case Family::PhiPlus: return TwoQubitState::normalize({c, 0.0, 0.0, s});
    case Family::PhiMinus: return TwoQubitState::normalize({c, 0.0, 0.0, -s});
    case Family::PsiPlus: return TwoQubitState::normalize({0.0, c, s, 0.0});
    case Family::PsiMinus: return TwoQubitState::normalize({0.0, c, -s, 0.0});
  }
  throw DomainError("invalid family");
}

double delta_c(Process process, Kinematics const& kin, TwoQubitState const& initial) {
  double const ci = concurrence(initial);
  if (ci <= kMinInitialConcurrence) {
    throw ZeroInitialEntanglementError("initial concurrence " + std::to_string(ci) +
                                       " is too small for a relative change");
  }
  double const cf = scatter({process, kin, initial}).final_report.concurrence;
  return (cf - ci) / ci;
}

std::vector<double> delta_c_scan(Process process, double mu, double lambda,
                                 TwoQubitState const& initial,
                                 std::span<double const> theta_grid) {
  std::vector<double> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    out.push_back(delta_c(process, Kinematics(mu, theta, lambda), initial));
  }
  return out;
}

RegimeVerdict classify(Process process, double mu, double lambda,
                       TwoQubitState const& initial, std::span<double const> theta_grid,
                       double tol) {
  if (theta_grid.empty()) throw DomainError("classification needs a non-empty theta grid");
  auto const dc = delta_c_scan(process, mu, lambda, initial, theta_grid);
  auto const [lo, hi] = std::minmax_element(dc.begin(), dc.end());
  RegimeVerdict v{Regime::Mixed, *lo, *hi, theta_grid.size()};
  if (v.min_dc > tol) {
    v.regime = Regime::Entanglophilus;
  } else if (v.max_dc < -tol) {
    v.regime = Regime::Entanglophobus;
  }
  return v;
}

RegimeVerdict classify(Process process, double mu, double lambda, FamilyState const& fs,
                       std::span<double const> theta_grid, double tol) {
  return classify(process, mu, lambda, fs.state(), theta_grid, tol);
}

}  // namespace qedccr
