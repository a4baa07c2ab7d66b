#include "qedccr/state.hpp"

#include <cmath>
#include <string>

#include "qedccr/errors.hpp"

namespace qedccr {
namespace {

double norm_squared(Coefficients const& c) {
  double n2 = 0.0;
  for (auto const& z : c) n2 += std::norm(z);
  return n2;
}

}  // namespace

TwoQubitState TwoQubitState::normalize(Coefficients const& raw) {
  double const n = std::sqrt(norm_squared(raw));
  if (!std::isfinite(n) || n == 0.0) {
    throw NormalizationError("cannot normalize a state with norm " + std::to_string(n));
  }
  Coefficients c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = raw[i] / n;
  return TwoQubitState(c, n);
}

TwoQubitState TwoQubitState::exact(Coefficients const& coeffs) {
  double const n2 = norm_squared(coeffs);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw NormalizationError("state is not normalized: |psi|^2 = " + std::to_string(n2));
  }
  return TwoQubitState(coeffs, 1.0);
}

TwoQubitState TwoQubitState::basis(Helicity a, Helicity b) {
  Coefficients c{};
  c[pair_index(a, b)] = 1.0;
  return TwoQubitState(c, 1.0);
}

TwoQubitState TwoQubitState::product(double alpha, double beta, double xi, double eta) {
  Complex const a0 = std::cos(alpha);
  Complex const a1 = std::polar(std::sin(alpha), xi);
  Complex const b0 = std::cos(beta);
  Complex const b1 = std::polar(std::sin(beta), eta);
  return normalize({a0 * b0, a0 * b1, a1 * b0, a1 * b1});
}

TwoQubitState TwoQubitState::general(double alpha, double beta, double chi,
                                     double xi, double eta, double tau) {
  double const sa = std::sin(alpha);
  double const sb = std::sin(beta);
  return normalize({Complex(std::cos(alpha)), std::polar(sa * std::cos(beta), xi),
                    std::polar(sa * sb * std::cos(chi), eta),
                    std::polar(sa * sb * std::sin(chi), tau)});
}

TwoQubitState TwoQubitState::canonical_phase() const {
  std::size_t big = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(c_[i]) > std::abs(c_[big])) big = i;
  }
  Complex const phase = std::conj(c_[big]) / std::abs(c_[big]);
  Coefficients out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = c_[i] * phase;
  out[big] = std::abs(c_[big]);
  return TwoQubitState(out, raw_norm_);
}

Complex inner_product(TwoQubitState const& x, TwoQubitState const& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

bool equal_up_to_phase(TwoQubitState const& x, TwoQubitState const& y, double tol) {
  return std::abs(inner_product(x, y)) >= 1.0 - tol;
}

}  // namespace qedccr
