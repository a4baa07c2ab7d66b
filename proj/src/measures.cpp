#include "qedccr/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qedccr {
namespace {

// ψ_{ij} with i the A label and j the B label, transposed when k = B so that
// the first index always belongs to the subsystem being kept.
Complex amp(TwoQubitState const& s, Subsystem k, std::size_t keep, std::size_t trace) {
  return k == Subsystem::A ? s[2 * keep + trace] : s[2 * trace + keep];
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

std::pair<double, double> ReducedDensityMatrix::eigenvalues() const {
  double const p = rho[0][0].real();
  double const q = rho[1][1].real();
  double const half_gap = 0.5 * std::hypot(p - q, 2.0 * std::abs(rho[0][1]));
  double const mid = 0.5 * (p + q);
  return {mid + half_gap, mid - half_gap};
}

double concurrence(TwoQubitState const& s) {
  return clamp_unit(2.0 * std::abs(s.a() * s.d() - s.b() * s.c()));
}

double predictability(TwoQubitState const& s, Subsystem k) {
  double const pa = std::norm(s.a());
  double const pb = std::norm(s.b());
  double const pc = std::norm(s.c());
  double const pd = std::norm(s.d());
  double const p = k == Subsystem::A ? (pc + pd) - (pa + pb) : (pb + pd) - (pa + pc);
  return clamp_unit(std::abs(p));
}

double visibility(TwoQubitState const& s, Subsystem k) {
  Complex const v = k == Subsystem::A
                        ? s.a() * std::conj(s.c()) + s.b() * std::conj(s.d())
                        : s.a() * std::conj(s.b()) + s.c() * std::conj(s.d());
  return clamp_unit(2.0 * std::abs(v));
}

ReducedDensityMatrix reduced_density(TwoQubitState const& s, Subsystem k) {
  ReducedDensityMatrix out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < 2; ++t) sum += amp(s, k, i, t) * std::conj(amp(s, k, j, t));
      out.rho[i][j] = sum;
    }
  }
  // Enforce exact hermiticity of the diagonal.
  out.rho[0][0] = out.rho[0][0].real();
  out.rho[1][1] = out.rho[1][1].real();
  out.rho[1][0] = std::conj(out.rho[0][1]);
  return out;
}

HsTriplet hs_triplet(TwoQubitState const& s, Subsystem k) {
  auto const rd = reduced_density(s, k);
  HsTriplet t;
  t.predictability = std::norm(rd.rho[0][0]) + std::norm(rd.rho[1][1]) - 0.5;
  t.coherence = std::norm(rd.rho[0][1]) + std::norm(rd.rho[1][0]);

  // Nonlocal coherence from the global density matrix
  //   Σ_{i≠k, j≠l} |ρ_{ij,kl}|² - 2 Σ_{i≠k, j<l} Re(ρ_{ij,kj} ρ*_{il,kl}),
  // with ρ_{ij,kl} = ψ_ij ψ*_kl and i, k the indices of the kept subsystem.
  auto rho = [&](std::size_t i, std::size_t j, std::size_t kk, std::size_t l) {
    return amp(s, k, i, j) * std::conj(amp(s, k, kk, l));
  };
  double nl = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t const kk = 1 - i;
    for (std::size_t j = 0; j < 2; ++j) nl += std::norm(rho(i, j, kk, 1 - j));
    nl -= 2.0 * std::real(rho(i, 0, kk, 0) * std::conj(rho(i, 1, kk, 1)));
  }
  t.nonlocal = nl;
  return t;
}

double shannon_entropy(std::pair<double, double> p) {
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p.first) + term(p.second);
}

double entanglement_entropy_from_concurrence(double c) {
  double const r = std::sqrt(std::max(0.0, 1.0 - c * c));
  return shannon_entropy({0.5 * (1.0 + r), 0.5 * (1.0 - r)});
}

EntropicTriplet entropic_triplet(TwoQubitState const& s, Subsystem k) {
  auto const rd = reduced_density(s, k);
  auto [l1, l2] = rd.eigenvalues();
  double const s_diag = shannon_entropy({rd.rho[0][0].real(), rd.rho[1][1].real()});
  double const s_full = shannon_entropy({std::max(l1, 0.0), std::max(l2, 0.0)});
  return {1.0 - s_diag, s_diag - s_full, s_full};
}

double linear_entropy(TwoQubitState const& s) {
  auto const rd = reduced_density(s, Subsystem::A);
  double purity = 0.0;
  for (auto const& row : rd.rho) {
    for (auto const& z : row) purity += std::norm(z);
  }
  return 2.0 * (1.0 - purity);
}

MaxEntanglementCheck max_entanglement(TwoQubitState const& s, double tol) {
  MaxEntanglementCheck out;
  out.maximal = concurrence(s) >= 1.0 - tol;

  auto const pd = probability_decomposition(s);
  auto const& p = pd.probabilities;
  bool const balanced = std::abs(p[0] - p[3]) <= tol && std::abs(p[1] - p[2]) <= tol;
  bool const phase_ok =
      p[0] * p[1] * p[2] * p[3] <= tol * tol || std::cos(pd.phase) <= -1.0 + tol;
  out.condition_satisfied = balanced && phase_ok;
  return out;
}

double CcrReport::max_residual() const {
  return std::max(a.triality_residual, b.triality_residual);
}

CcrReport ccr_report(TwoQubitState const& s) {
  CcrReport r;
  r.concurrence = concurrence(s);
  double const c2 = r.concurrence * r.concurrence;
  for (Subsystem k : {Subsystem::A, Subsystem::B}) {
    SubsystemCcr& sub = k == Subsystem::A ? r.a : r.b;
    sub.predictability = predictability(s, k);
    sub.visibility = visibility(s, k);
    sub.hs = hs_triplet(s, k);
    sub.vn = entropic_triplet(s, k);
    sub.triality_residual = std::abs(sub.predictability * sub.predictability +
                                     sub.visibility * sub.visibility + c2 - 1.0);
  }
  return r;
}

ProbabilityDecomposition probability_decomposition(TwoQubitState const& s) {
  ProbabilityDecomposition out;
  auto& p = out.probabilities;
  for (std::size_t i = 0; i < 4; ++i) p[i] = std::norm(s[i]);
  double const prr = p[0], prl = p[1], plr = p[2], pll = p[3];

  // Phases of b, c, d relative to a; the combination ξ + η - τ is invariant
  // under a global phase, so arg(b c d* a*) gives it directly.
  Complex const z = s.b() * s.c() * std::conj(s.d()) * std::conj(s.a());
  out.phase = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  double const interference = 2.0 * std::sqrt(prr * pll * prl * plr) * std::cos(out.phase);

  double const dr = prr - pll;
  out.pred2_a = dr * dr + (prl - plr) * (prl - plr) - 2.0 * dr * (plr - prl);
  out.pred2_b = dr * dr + (plr - prl) * (plr - prl) - 2.0 * dr * (prl - plr);
  out.vis2_a = 4.0 * (prr * plr + pll * prl + interference);
  out.vis2_b = 4.0 * (prr * prl + pll * plr + interference);
  out.conc2 = 4.0 * (prr * pll + prl * plr - interference);
  return out;
}

}  // namespace qedccr
