#pragma once

// Momentum-filtered scattering of a two-qubit helicity state.
//
// For an initial state Σ A_ζκ |ζκ> the outgoing state at fixed angle is
//   |f> ∝ Σ_rs ( Σ_ζκ A_ζκ M(ζκ; rs) ) |rs>,
// normalized after filtering. The unscattered forward term is not part of
// |f>, since θ = 0 lies outside the kinematic domain.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qedccr/amplitudes.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/state.hpp"

namespace qedccr {

inline constexpr double kDegenerateNorm = 1e-14;

struct ScatteringInput {
  Process process;
  Kinematics kin;
  TwoQubitState initial;
};

struct ScatteringOutcome {
  TwoQubitState final;  // canonical global phase
  double raw_norm;      // norm of the unnormalized final coefficients
  CcrReport initial_report;
  CcrReport final_report;
};

//! Unnormalized outgoing coefficients Σ_ζκ A_ζκ M(ζκ; rs).
Coefficients scattered_coefficients(AmplitudeSet const& m, TwoQubitState const& initial);

//! \throws DomainError, DegenerateOutcomeError (raw norm < kDegenerateNorm)
ScatteringOutcome scatter(ScatteringInput const& input);

//! Repeated application of the same scattering; element k is the state after
//! k + 1 passes.
std::vector<TwoQubitState> iterate_scatter(ScatteringInput const& input, std::size_t passes);

enum class RowStatus { Ok, DomainError, Degenerate };
std::string_view to_string(RowStatus s);

struct ScanRow {
  double theta = 0.0;
  double c2 = 0.0;
  double pa2 = 0.0;
  double pb2 = 0.0;
  double va2 = 0.0;
  double vb2 = 0.0;
  double raw_norm = 0.0;
  double residual_a = 0.0;
  double residual_b = 0.0;
  RowStatus status = RowStatus::Ok;
};

struct ScanResult {
  Process process = Process::Bhabha;
  double mu = 1.0;
  double lambda = kMuonElectronMassRatio;
  TwoQubitState initial = TwoQubitState::basis(Helicity::R, Helicity::L);
  std::vector<ScanRow> rows;
};

//! `count` uniform angles strictly inside (lo, hi): lo + (k+1)(hi-lo)/(count+1).
std::vector<double> uniform_theta_grid(std::size_t count, double lo, double hi);
std::vector<double> uniform_theta_grid(std::size_t count);

struct ScanOptions {
  std::size_t threads = 1;
};

//! One row per grid angle. Rows that fail carry a status code; the scan
//! itself only throws for an invalid mu/lambda.
ScanResult ccr_scan(Process process, TwoQubitState const& initial, double mu, double lambda,
                    std::span<double const> theta_grid, ScanOptions const& opts = {});

}  // namespace qedccr
