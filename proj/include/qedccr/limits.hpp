#pragma once

// Closed-form μ → ∞ CCR quantities of Bhabha scattering for the product input
// (cos α |R> + sin α |L>)_A ⊗ (cos β |R> + sin β |L>)_B.
//
// Two readings are provided. `Literal` keeps D_II = 2(7 + cos²2θ)² + ... and
// a 64 prefactor on V, without moduli; it does not satisfy the triality
// identity and is kept for comparison only. `Corrected` uses
// D_II = 2(7 + cos 2θ)² + ... and a 128 prefactor on V and returns moduli;
// it matches the numerical engine at large μ and squares to one per
// subsystem, and is the default.

#include <cstddef>
#include <span>

namespace qedccr {

struct Case2Params {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class LimitReading { Corrected, Literal };

struct CcrLimit {
  double c = 0.0;
  double pa = 0.0;
  double pb = 0.0;
  double va = 0.0;
  double vb = 0.0;
  double denominator = 0.0;

  double residual_a() const;
  double residual_b() const;
};

double limit_denominator(Case2Params const& p, double theta,
                         LimitReading reading = LimitReading::Corrected);

//! \throws DomainError for θ ∉ (0, 2π), SingularDenominatorError if |D_II| < 1e-14.
CcrLimit ccr_limit_case2(Case2Params const& p, double theta,
                         LimitReading reading = LimitReading::Corrected);

struct LimitComparison {
  double max_deviation = 0.0;  // max |closed form - engine| over (C, P_A, P_B, V_A, V_B)
  double max_residual = 0.0;   // max closed-form triality residual
  std::size_t points = 0;
  Case2Params worst_params;
  double worst_theta = 0.0;
};

inline constexpr double kLimitMu = 1e6;

//! Compares closed forms against scatter() at large μ on the product grid.
LimitComparison compare_with_engine(std::span<double const> alphas,
                                    std::span<double const> betas,
                                    std::span<double const> thetas, double mu = kLimitMu,
                                    LimitReading reading = LimitReading::Corrected);

}  // namespace qedccr
