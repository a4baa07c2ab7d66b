#pragma once

// Bell-basis analysis of scattered maximally entangled states.
//
//   Φ± = (|RR> ± |LL>)/√2,   Ψ± = (|RL> ± |LR>)/√2

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qedccr/amplitudes.hpp"
#include "qedccr/state.hpp"

namespace qedccr {

enum class BellLabel : std::size_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus};

std::string_view to_string(BellLabel b);
//! Accepts phi+, phi-, psi+, psi-.
BellLabel parse_bell_label(std::string_view name);

TwoQubitState bell_state(BellLabel b);

struct BellDecomposition {
  std::array<Complex, 4> coeffs{};
  Complex operator[](BellLabel b) const { return coeffs[static_cast<std::size_t>(b)]; }
};

BellDecomposition bell_decompose(TwoQubitState const& state);
TwoQubitState bell_compose(BellDecomposition const& bell);

//! Bell coefficients with modulus at or below this are treated as absent.
inline constexpr double kBellSupportTolerance = 1e-9;

enum class BellMapping {
  Self,        // final state is the initial Bell state
  Relabel,     // final state is a different single Bell state
  TwoTermMix,  // cos s X + sin s Y
  Generic,     // three or more Bell components ("GC")
};
std::string_view to_string(BellMapping m);

//! Final ≃ cos(angle) first + sin(angle) second, angle ∈ [0, π].
struct MixingAngle {
  BellLabel first;
  BellLabel second;
  double angle;
};

//! Mixing angle for a state supported on at most two Bell components. A single
//! component gives angle 0 with first == second.
//! \throws NotTwoTermMixError if three or more components are present.
MixingAngle mixing_of(TwoQubitState const& state);

struct BellTableRow {
  BellLabel initial;
  TwoQubitState final;
  std::array<bool, 4> support{};  // which Bell components of final are present
  BellMapping classification;
  std::optional<MixingAngle> mixing;  // absent for Generic rows
  double concurrence;
  //! The process has a vanishing amplitude column for this input; the state
  //! is left unchanged at this order.
  bool transparent = false;
  //! All four helicity coefficients of the final state differ in modulus.
  bool distinct_coefficients = false;
};

std::vector<BellTableRow> bell_table(Process process, Kinematics const& kin);
BellTableRow bell_table_row(Process process, Kinematics const& kin, BellLabel initial);

//! Angle s (or r) of the two-term row for \p initial; 0 for self/relabel rows.
//! \throws NotTwoTermMixError for generic rows.
double mixing_angle(Process process, Kinematics const& kin, BellLabel initial);

using RealMatrix2 = std::array<std::array<double, 2>, 2>;

struct TransformationCheck {
  RealMatrix2 t{};                  // T = M_f · M_i⁻¹
  double orthogonality_defect = 0;  // ‖TᵀT - I‖_F
  double det = 0;
};

//! Coefficient matrices M = √2 [[a, b], [c, d]] of the initial and final
//! state are related by T; for processes conserving maximal entanglement T is
//! orthogonal.
//! \throws PreconditionError if the initial state is not maximally entangled
//!         with real coefficients, or the final state is not real.
TransformationCheck transformation_orthogonality(Process process, Kinematics const& kin,
                                                 TwoQubitState const& initial);

}  // namespace qedccr
