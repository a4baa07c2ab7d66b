#pragma once

// Two-qubit pure states in the helicity basis.
//
// Basis order (fixed library-wide): |RR>, |RL>, |LR>, |LL>, with the first
// label belonging to particle A. The coefficients are called (a, b, c, d)
// in that order.

#include <array>
#include <complex>
#include <cstddef>

#include "qedccr/amplitudes.hpp"

namespace qedccr {

using Complex = std::complex<double>;
using Coefficients = std::array<Complex, 4>;

enum class Subsystem { A, B };

inline constexpr double kNormTolerance = 1e-12;

class TwoQubitState {
 public:
  //! Rescales \p raw to unit norm; the input norm is kept as raw_norm().
  //! \throws NormalizationError if the norm is zero or not finite.
  static TwoQubitState normalize(Coefficients const& raw);

  //! Accepts already-normalized coefficients without rescaling.
  //! \throws NormalizationError if | |ψ|² - 1 | > kNormTolerance.
  static TwoQubitState exact(Coefficients const& coeffs);

  static TwoQubitState basis(Helicity a, Helicity b);

  //! (cos α |R> + e^{iξ} sin α |L>)_A ⊗ (cos β |R> + e^{iη} sin β |L>)_B
  static TwoQubitState product(double alpha, double beta, double xi = 0.0,
                               double eta = 0.0);

  //! cos α |RR> + e^{iξ} sin α cos β |RL> + e^{iη} sin α sin β cos χ |LR>
  //!   + e^{iτ} sin α sin β sin χ |LL>
  static TwoQubitState general(double alpha, double beta, double chi,
                               double xi = 0.0, double eta = 0.0,
                               double tau = 0.0);

  Complex a() const { return c_[0]; }
  Complex b() const { return c_[1]; }
  Complex c() const { return c_[2]; }
  Complex d() const { return c_[3]; }
  Complex operator[](std::size_t i) const { return c_[i]; }
  Complex coefficient(Helicity first, Helicity second) const {
    return c_[pair_index(first, second)];
  }
  Coefficients const& coefficients() const { return c_; }

  //! Norm of the coefficient vector before normalization (1 for exact()).
  double raw_norm() const { return raw_norm_; }

  //! Same state with the global phase chosen so that the largest-modulus
  //! coefficient is real and positive (first one wins ties).
  TwoQubitState canonical_phase() const;

 private:
  TwoQubitState(Coefficients const& c, double raw_norm) : c_(c), raw_norm_(raw_norm) {}

  Coefficients c_;
  double raw_norm_;
};

//! ⟨x|y⟩
Complex inner_product(TwoQubitState const& x, TwoQubitState const& y);

//! |⟨x|y⟩| ≥ 1 - tol, i.e. equal up to a global phase.
bool equal_up_to_phase(TwoQubitState const& x, TwoQubitState const& y,
                       double tol = 1e-10);

}  // namespace qedccr
