#pragma once

// Tree-level QED helicity amplitudes in the centre-of-momentum frame.
//
// All amplitudes are returned with the overall coupling e² removed. Every
// quantity built on top of them (normalized final states, cross-section
// weighted averages) is invariant under a global rescaling of the amplitude
// table, so the factor never needs to be restored.
//
// Kinematic parameters:
//   mu     = |p| / m_e, the incoming momentum in units of the electron mass
//   lambda = second mass scale entering the two muon processes; taken as a
//            free positive parameter (default: the muon/electron mass ratio)
//   theta  = scattering angle of particle A in (0, 2π)
//
// Index convention M(a, b; r, s): (a, b) are the incoming helicities of
// particles A and B, (r, s) the outgoing ones. For the photon processes the
// outgoing (γγ) or incoming/outgoing (Compton) photon polarizations use the
// same R/L labels for circular polarization λ = ±1.

#include <array>
#include <cstddef>
#include <string_view>

#include "qedccr/errors.hpp"

namespace qedccr {

enum class Helicity : std::size_t { R = 0, L = 1 };

enum class Process {
  Bhabha,          // e⁻e⁺ → e⁻e⁺
  Moller,          // e⁻e⁻ → e⁻e⁻
  EePairToMuMu,    // e⁻e⁺ → μ⁻μ⁺
  EMuToEMu,        // e⁻μ⁻ → e⁻μ⁻
  EeToGammaGamma,  // e⁻e⁺ → γγ
  Compton,         // e⁻γ → e⁻γ
};

inline constexpr std::array<Process, 6> kAllProcesses = {
    Process::Bhabha,         Process::Moller,  Process::EePairToMuMu,
    Process::EMuToEMu,       Process::EeToGammaGamma, Process::Compton};

//! True for the four processes with only spin-1/2 particles in and out.
constexpr bool is_fermionic(Process p) {
  return p != Process::EeToGammaGamma && p != Process::Compton;
}

std::string_view to_string(Process p);
//! Parses the CLI names (bhabha, moller, eemumu, emu, eegg, compton).
Process parse_process(std::string_view name);

inline constexpr double kMuonElectronMassRatio = 206.7683;

//! Validated kinematic point.
class Kinematics {
 public:
  //! \throws DomainError when mu ≤ 0, lambda ≤ 0 or theta ∉ (0, 2π).
  Kinematics(double mu, double theta, double lambda = kMuonElectronMassRatio);

  double mu() const { return mu_; }
  double theta() const { return theta_; }
  double lambda() const { return lambda_; }

 private:
  double mu_;
  double theta_;
  double lambda_;
};

//! Flat index of M(a, b; r, s) with row = initial pair, column = final pair.
constexpr std::size_t pair_index(Helicity first, Helicity second) {
  return 2 * static_cast<std::size_t>(first) + static_cast<std::size_t>(second);
}

//! The sixteen amplitudes of one process at one kinematic point.
class AmplitudeSet {
 public:
  using Table = std::array<std::array<double, 4>, 4>;

  AmplitudeSet() = default;
  explicit AmplitudeSet(Table const& t) : table_(t) {}

  double operator()(Helicity a, Helicity b, Helicity r, Helicity s) const {
    return table_[pair_index(a, b)][pair_index(r, s)];
  }
  //! Row = initial basis index (RR, RL, LR, LL), column = final basis index.
  double at(std::size_t initial, std::size_t final) const {
    return table_[initial][final];
  }
  Table const& table() const { return table_; }

 private:
  Table table_{};
};

//! Full amplitude table of a process.
//! \throws DomainError for invalid kinematics (including θ = π for Møller,
//!         where the amplitudes diverge).
AmplitudeSet amplitude_set(Process process, Kinematics const& kin);

//! Single entry M(a, b; r, s).
double amplitude(Process process, Kinematics const& kin, Helicity a,
                 Helicity b, Helicity r, Helicity s);

}  // namespace qedccr
