#pragma once

// Complementarity measures of a two-qubit pure state: predictability P_k,
// visibility V_k and concurrence C, satisfying P_k² + V_k² + C² = 1 for each
// subsystem k, together with the Hilbert-Schmidt and entropic forms of the
// same triality.

#include <array>
#include <utility>

#include "qedccr/state.hpp"

namespace qedccr {

inline constexpr double kTrialityTolerance = 1e-10;

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

struct ReducedDensityMatrix {
  Matrix2 rho{};

  Complex trace() const { return rho[0][0] + rho[1][1]; }
  //! Eigenvalues in descending order.
  std::pair<double, double> eigenvalues() const;
};

double concurrence(TwoQubitState const& state);
double predictability(TwoQubitState const& state, Subsystem k);
double visibility(TwoQubitState const& state, Subsystem k);

ReducedDensityMatrix reduced_density(TwoQubitState const& state, Subsystem k);

//! Hilbert-Schmidt predictability, coherence and nonlocal coherence; for a
//! qubit the three sum to 1/2.
struct HsTriplet {
  double predictability = 0.0;
  double coherence = 0.0;
  double nonlocal = 0.0;

  double sum() const { return predictability + coherence + nonlocal; }
};

HsTriplet hs_triplet(TwoQubitState const& state, Subsystem k);

//! Entropic predictability, relative entropy of coherence and entanglement
//! entropy (base 2); the three sum to 1.
struct EntropicTriplet {
  double predictability = 0.0;
  double coherence = 0.0;
  double entanglement = 0.0;

  double sum() const { return predictability + coherence + entanglement; }
};

EntropicTriplet entropic_triplet(TwoQubitState const& state, Subsystem k);

//! Shannon entropy in bits of a probability vector, with 0·log 0 = 0.
double shannon_entropy(std::pair<double, double> p);

//! Entanglement entropy of a pure two-qubit state as a function of its
//! concurrence.
double entanglement_entropy_from_concurrence(double c);

//! S_lin = 2 (1 - Tr ρ_A²); equals C² for pure states.
double linear_entropy(TwoQubitState const& state);

struct MaxEntanglementCheck {
  bool maximal = false;             // C ≥ 1 - tol
  bool condition_satisfied = false; // |a|²=|d|², |b|²=|c|², ξ+η-τ = (2n+1)π
};

MaxEntanglementCheck max_entanglement(TwoQubitState const& state, double tol = 1e-10);
inline bool is_max_entangled(TwoQubitState const& state, double tol = 1e-10) {
  return max_entanglement(state, tol).maximal;
}

struct SubsystemCcr {
  double predictability = 0.0;
  double visibility = 0.0;
  HsTriplet hs;
  EntropicTriplet vn;
  //! |P² + V² + C² - 1|
  double triality_residual = 0.0;
};

struct CcrReport {
  double concurrence = 0.0;
  SubsystemCcr a;
  SubsystemCcr b;

  SubsystemCcr const& operator[](Subsystem k) const { return k == Subsystem::A ? a : b; }
  double max_residual() const;
};

CcrReport ccr_report(TwoQubitState const& state);

//! Squared CCR terms written through the basis probabilities P_rs = |coeff|²
//! and the relative phase ξ + η - τ (phases of b, c, d relative to a).
struct ProbabilityDecomposition {
  std::array<double, 4> probabilities{};  // P_RR, P_RL, P_LR, P_LL
  double phase = 0.0;                     // ξ + η - τ
  double pred2_a = 0.0;
  double vis2_a = 0.0;
  double pred2_b = 0.0;
  double vis2_b = 0.0;
  double conc2 = 0.0;
};

ProbabilityDecomposition probability_decomposition(TwoQubitState const& state);

}  // namespace qedccr
