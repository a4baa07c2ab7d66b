#include "qedccr/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qedccr {
namespace {

using Table = AmplitudeSet::Table;

constexpr std::size_t RR = 0;
constexpr std::size_t RL = 1;
constexpr std::size_t LR = 2;
constexpr std::size_t LL = 3;

Table bhabha(double mu, double theta) {
  double const mu2 = mu * mu;
  double const h = 0.5 * theta;
  double const c = std::cos(theta);
  double const cot_h = std::cos(h) / std::sin(h);
  double const csc2_h = 1.0 / (std::sin(h) * std::sin(h));
  double const e = std::sqrt(1.0 + mu2);

  double const same =
      (2.0 + 11.0 * mu2 + 8.0 * mu2 * mu2 + 2.0 * c + mu2 * std::cos(2.0 * theta))
      * csc2_h / (4.0 * mu2 * (1.0 + mu2));
  double const flip = (1.0 + mu2 * c) * cot_h / (mu2 * e);
  double const annihilate = (1.0 + mu2 * (1.0 + c)) / (mu2 * (1.0 + mu2));
  double const keep = (1.0 + mu2 * (1.0 + c)) * cot_h * cot_h / mu2;
  double const swap = 1.0 - c - 1.0 / mu2;

  Table t{};
  t[RR][RR] = same;
  t[LL][LL] = same;
  t[RR][RL] = -flip;
  t[RR][LR] = -flip;
  t[LL][RL] = flip;
  t[LL][LR] = flip;
  t[RR][LL] = annihilate;
  t[LL][RR] = annihilate;
  t[RL][RR] = flip;
  t[LR][RR] = flip;
  t[RL][LL] = -flip;
  t[LR][LL] = -flip;
  t[RL][RL] = keep;
  t[LR][LR] = keep;
  t[RL][LR] = swap;
  t[LR][RL] = swap;
  return t;
}

Table moller(double mu, double theta) {
  double const mu2 = mu * mu;
  double const h = 0.5 * theta;
  double const c = std::cos(theta);
  double const s = std::sin(theta);
  double const cot = c / s;
  double const cot_h = std::cos(h) / std::sin(h);
  double const tan_h = std::sin(h) / std::cos(h);
  double const csc2_h = 1.0 / (std::sin(h) * std::sin(h));
  double const sec2_h = 1.0 / (std::cos(h) * std::cos(h));

  double const same = -(3.0 + 8.0 * mu2 + std::cos(2.0 * theta)) / (s * s * mu2);
  double const flip = 2.0 * std::sqrt(1.0 + mu2) * cot / mu2;

  Table t{};
  t[RR][RR] = same;
  t[LL][LL] = same;
  // M(RR; RL/LR) = M(LL; RL/LR) = ∓ flip
  t[RR][RL] = -flip;
  t[LL][RL] = -flip;
  t[RR][LR] = flip;
  t[LL][LR] = flip;
  t[RR][LL] = 2.0 / mu2;
  t[LL][RR] = 2.0 / mu2;
  // M(RL; RR/LL) = -M(LR; RR/LL) = flip
  t[RL][RR] = flip;
  t[RL][LL] = flip;
  t[LR][RR] = -flip;
  t[LR][LL] = -flip;
  t[RL][RL] = -(2.0 * cot_h * cot_h + c * csc2_h / mu2);
  t[LR][LR] = t[RL][RL];
  t[RL][LR] = 2.0 * tan_h * tan_h - c * sec2_h / mu2;
  t[LR][RL] = t[RL][LR];
  return t;
}

Table ee_to_mumu(double mu, double lambda, double theta) {
  double const c = std::cos(theta);
  double const s = std::sin(theta);
  double const l2m2 = lambda * lambda + mu * mu;
  double const diag = lambda * c / l2m2;
  double const out_flip = lambda * s / std::sqrt(l2m2);
  double const in_flip = s / std::sqrt(l2m2);

  Table t{};
  // M(RR; RR/LL) = M(LL; LL/RR) = ∓ diag
  t[RR][RR] = -diag;
  t[RR][LL] = diag;
  t[LL][LL] = -diag;
  t[LL][RR] = diag;
  t[RR][RL] = out_flip;
  t[RR][LR] = out_flip;
  t[LL][RL] = -out_flip;
  t[LL][LR] = -out_flip;
  t[RL][RR] = -in_flip;
  t[LR][RR] = -in_flip;
  t[RL][LL] = in_flip;
  t[LR][LL] = in_flip;
  t[RL][RL] = -(1.0 + c);
  t[LR][LR] = -(1.0 + c);
  t[RL][LR] = 1.0 - c;
  t[LR][RL] = 1.0 - c;
  return t;
}

Table emu_to_emu(double mu, double lambda, double theta) {
  double const mu2 = mu * mu;
  double const h = 0.5 * theta;
  double const c = std::cos(theta);
  double const cot_h = std::cos(h) / std::sin(h);
  double const e_mu = std::sqrt(lambda * lambda + mu2);
  double const e_e = std::sqrt(1.0 + mu2);
  double const energies = e_e * e_mu;

  double const same = -(mu2 * (3.0 - c) + energies * (1.0 + c)) / (mu2 * (c - 1.0));
  double const flip_b = e_mu * cot_h / mu2;
  double const flip_a = lambda * e_e * cot_h / mu2;

  Table t{};
  t[RR][RR] = same;
  t[LL][LL] = same;
  t[RR][RL] = flip_b;
  t[LL][LR] = -flip_b;
  t[RR][LR] = -flip_a;
  t[LL][RL] = flip_a;
  t[RR][LL] = -lambda / mu2;
  t[LL][RR] = -lambda / mu2;
  t[RL][RR] = -flip_b;
  t[LR][LL] = flip_b;
  t[RL][LL] = -flip_a;
  t[LR][RR] = flip_a;
  t[RL][RL] = (mu2 + energies) * cot_h * cot_h / mu2;
  t[LR][LR] = t[RL][RL];
  t[RL][LR] = lambda / mu2;
  t[LR][RL] = lambda / mu2;
  return t;
}

Table ee_to_gammagamma(double mu, double theta) {
  double const mu2 = mu * mu;
  double const c = std::cos(theta);
  double const s = std::sin(theta);
  double const e = std::sqrt(1.0 + mu2);
  double const den = mu2 * (1.0 - std::cos(2.0 * theta)) + 2.0;
  double const den_mixed = 1.0 + mu2 * s * s;

  double const same = -4.0 * (mu + e) / den;
  double const opposite = 4.0 * (e - mu) / den;
  double const to_mixed = 4.0 * mu * s * s / den;

  Table t{};
  t[RR][RR] = same;
  t[LL][LL] = -same;
  t[RR][LL] = opposite;
  t[LL][RR] = -opposite;
  t[RR][RL] = to_mixed;
  t[RR][LR] = to_mixed;
  t[LL][RL] = -to_mixed;
  t[LL][LR] = -to_mixed;
  // M(RL; RR/LL) = M(LR; RR/LL) = 0
  t[RL][RL] = -2.0 * mu * e * (1.0 + c) * s / den_mixed;
  t[LR][LR] = t[RL][RL];
  t[RL][LR] = 2.0 * mu * e * (1.0 - c) * s / den_mixed;
  t[LR][RL] = t[RL][LR];
  return t;
}

Table compton(double mu, double theta) {
  double const h = 0.5 * theta;
  double const c = std::cos(theta);
  double const ch = std::cos(h);
  double const sh = std::sin(h);
  double const e = std::sqrt(1.0 + mu * mu);
  double const k = e - mu;  // -μ + √(1+μ²), evaluated as a difference
  double const den = mu * c + e;

  double const same_rr = -(4.0 * mu * ch + 2.0 * k * ch * ch * ch) / den;
  double const flip_b = -k * ch / den * (1.0 - c);
  double const flip_a = (1.0 + c) / den * sh;
  double const double_flip = 2.0 * k * k / den * sh * sh * sh;
  double const same_rl = -2.0 * (mu + e) / den * ch * ch * ch;
  double const swap = 2.0 * sh * sh * sh / den;

  Table t{};
  t[RR][RR] = same_rr;
  t[LL][LL] = same_rr;
  t[RR][RL] = flip_b;
  t[LL][LR] = flip_b;
  t[RR][LR] = flip_a;
  t[LL][RL] = -flip_a;
  t[RR][LL] = double_flip;
  t[LL][RR] = -double_flip;
  t[RL][RR] = flip_b;
  t[LR][LL] = flip_b;
  t[RL][LL] = flip_a;
  t[LR][RR] = -flip_a;
  t[RL][RL] = same_rl;
  t[LR][LR] = same_rl;
  t[RL][LR] = swap;
  t[LR][RL] = -swap;
  return t;
}

}  // namespace

std::string_view to_string(Process p) {
  switch (p) {
    case Process::Bhabha: return "bhabha";
    case Process::Moller: return "moller";
    case Process::EePairToMuMu: return "eemumu";
    case Process::EMuToEMu: return "emu";
    case Process::EeToGammaGamma: return "eegg";
    case Process::Compton: return "compton";
  }
  return "unknown";
}

Process parse_process(std::string_view name) {
  for (auto p : kAllProcesses) {
    if (to_string(p) == name) return p;
  }
  throw DomainError("unknown process '" + std::string(name) + "'");
}

Kinematics::Kinematics(double mu, double theta, double lambda)
    : mu_(mu), theta_(theta), lambda_(lambda) {
  if (!std::isfinite(mu) || mu <= 0.0) {
    throw DomainError("mu must be a finite positive number, got " + std::to_string(mu));
  }
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw DomainError("lambda must be a finite positive number, got " +
                      std::to_string(lambda));
  }
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= 2.0 * std::numbers::pi) {
    throw DomainError("theta must lie in the open interval (0, 2pi), got " +
                      std::to_string(theta));
  }
}

AmplitudeSet amplitude_set(Process process, Kinematics const& kin) {
  double const mu = kin.mu();
  double const theta = kin.theta();
  Table t{};
  switch (process) {
    case Process::Bhabha: t = bhabha(mu, theta); break;
    case Process::Moller:
      if (theta == std::numbers::pi) {
        throw DomainError("Moller amplitudes diverge at theta = pi");
      }
      t = moller(mu, theta);
      break;
    case Process::EePairToMuMu: t = ee_to_mumu(mu, kin.lambda(), theta); break;
    case Process::EMuToEMu: t = emu_to_emu(mu, kin.lambda(), theta); break;
    case Process::EeToGammaGamma: t = ee_to_gammagamma(mu, theta); break;
    case Process::Compton: t = compton(mu, theta); break;
  }
  for (auto const& row : t) {
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw DomainError("non-finite amplitude for " + std::string(to_string(process)) +
                          " at theta = " + std::to_string(theta));
      }
    }
  }
  return AmplitudeSet(t);
}

double amplitude(Process process, Kinematics const& kin, Helicity a, Helicity b,
                 Helicity r, Helicity s) {
  return amplitude_set(process, kin)(a, b, r, s);
}

}  // namespace qedccr
