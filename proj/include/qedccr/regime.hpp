#pragma once

// Relative concurrence change ΔC = (C_f - C_i)/C_i and the classification of
// partially entangled inputs by the sign of ΔC over the scattering angle.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qedccr/amplitudes.hpp"
#include "qedccr/state.hpp"

namespace qedccr {

enum class Family { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

//! Φ±_α = cos α |RR> ± sin α |LL>,  Ψ±_β = cos β |RL> ± sin β |LR>.
struct FamilyState {
  Family family;
  double angle;

  TwoQubitState state() const;
};

enum class Regime { Entanglophilus, Entanglophobus, Mixed };
std::string_view to_string(Regime r);

inline constexpr double kRegimeTolerance = 1e-9;
inline constexpr double kMinInitialConcurrence = 1e-10;
inline constexpr std::size_t kDefaultRegimeGrid = 720;

struct RegimeVerdict {
  Regime regime;
  double min_dc;
  double max_dc;
  std::size_t theta_grid_size;
};

//! \throws ZeroInitialEntanglementError if C_i ≤ kMinInitialConcurrence.
double delta_c(Process process, Kinematics const& kin, TwoQubitState const& initial);
inline double delta_c(Process process, Kinematics const& kin, FamilyState const& fs) {
  return delta_c(process, kin, fs.state());
}

//! ΔC at every grid angle.
std::vector<double> delta_c_scan(Process process, double mu, double lambda,
                                 TwoQubitState const& initial,
                                 std::span<double const> theta_grid);

//! Entanglophilus if ΔC > tol everywhere, entanglophobus if ΔC < -tol
//! everywhere, mixed otherwise.
RegimeVerdict classify(Process process, double mu, double lambda, FamilyState const& fs,
                       std::span<double const> theta_grid, double tol = kRegimeTolerance);
RegimeVerdict classify(Process process, double mu, double lambda,
                       TwoQubitState const& initial, std::span<double const> theta_grid,
                       double tol = kRegimeTolerance);

}  // namespace qedccr
