#pragma once

// Cross-section weighted averages of the squared CCR terms over an angular
// window D:
//
//   <Q²> = (1/N) ∫_D w(θ) Q²(θ) dθ,   N = ∫_D w(θ) dθ,
//
// with w(θ) = Σ_rs |Σ_ζκ A_ζκ M(ζκ; rs)|², the squared norm of the
// unnormalized outgoing coefficients. For a definite helicity input this is
// Σ_rs |M(a,b; r,s)|²; for superpositions it is the same weight the
// scattering engine normalizes away. Constant prefactors of dσ/dΩ cancel
// between numerator and N. The solid-angle Jacobian sin θ is off by default
// and can be switched on.

#include <cstddef>

#include "qedccr/amplitudes.hpp"
#include "qedccr/state.hpp"

namespace qedccr {

class ThetaDomain {
 public:
  //! \throws DomainError unless 0 < lo < hi < 2π.
  ThetaDomain(double lo, double hi);
  static ThetaDomain centered(double center, double half_width) {
    return {center - half_width, center + half_width};
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

struct AverageOptions {
  std::size_t quadrature_points = 32;  // Gauss-Legendre nodes per panel, ≥ 16
  bool sin_weight = false;
  double rel_tol = 1e-8;
};

struct WeightedAverages {
  double c2_bar = 0.0;
  double pa2_bar = 0.0;
  double pb2_bar = 0.0;
  double va2_bar = 0.0;
  double vb2_bar = 0.0;
  double n_weight = 0.0;
  std::size_t panels = 0;

  double residual_a() const;
  double residual_b() const;
};

//! \throws DomainError, PreconditionError (quadrature_points < 16),
//!         QuadratureError if the adaptive refinement does not converge.
WeightedAverages weighted_average(Process process, double mu, double lambda,
                                  TwoQubitState const& initial, ThetaDomain const& domain,
                                  AverageOptions const& opts = {});

}  // namespace qedccr
