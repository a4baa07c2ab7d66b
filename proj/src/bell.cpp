#include "qedccr/bell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qedccr/errors.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/scattering.hpp"

namespace qedccr {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t idx(BellLabel b) { return static_cast<std::size_t>(b); }

std::array<bool, 4> support_of(BellDecomposition const& d) {
  std::array<bool, 4> s{};
  for (std::size_t i = 0; i < 4; ++i) s[i] = std::abs(d.coeffs[i]) > kBellSupportTolerance;
  return s;
}

std::size_t count(std::array<bool, 4> const& s) {
  std::size_t n = 0;
  for (bool b : s) n += b ? 1 : 0;
  return n;
}

bool distinct_moduli(TwoQubitState const& s) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (std::abs(std::abs(s[i]) - std::abs(s[j])) <= kBellSupportTolerance) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(BellLabel b) {
  switch (b) {
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
  }
  return "unknown";
}

BellLabel parse_bell_label(std::string_view name) {
  for (auto b : kBellLabels) {
    if (to_string(b) == name) return b;
  }
  throw DomainError("unknown Bell label '" + std::string(name) + "'");
}

std::string_view to_string(BellMapping m) {
  switch (m) {
    case BellMapping::Self: return "self";
    case BellMapping::Relabel: return "relabel";
    case BellMapping::TwoTermMix: return "two-term-mix";
    case BellMapping::Generic: return "GC";
  }
  return "unknown";
}

TwoQubitState bell_state(BellLabel b) {
  BellDecomposition d;
  d.coeffs[idx(b)] = 1.0;
  return bell_compose(d);
}

BellDecomposition bell_decompose(TwoQubitState const& s) {
  BellDecomposition d;
  d.coeffs[0] = kInvSqrt2 * (s.a() + s.d());
  d.coeffs[1] = kInvSqrt2 * (s.a() - s.d());
  d.coeffs[2] = kInvSqrt2 * (s.b() + s.c());
  d.coeffs[3] = kInvSqrt2 * (s.b() - s.c());
  return d;
}

TwoQubitState bell_compose(BellDecomposition const& bell) {
  auto const& q = bell.coeffs;
  return TwoQubitState::normalize({kInvSqrt2 * (q[0] + q[1]), kInvSqrt2 * (q[2] + q[3]),
                                   kInvSqrt2 * (q[2] - q[3]), kInvSqrt2 * (q[0] - q[1])});
}

MixingAngle mixing_of(TwoQubitState const& state) {
  auto const d = bell_decompose(state);
  auto const sup = support_of(d);
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sup[i]) present.push_back(i);
  }
  if (present.size() > 2) {
    throw NotTwoTermMixError("state has " + std::to_string(present.size()) +
                             " Bell components");
  }
  if (present.size() == 1) {
    auto const b = kBellLabels[present[0]];
    return {b, b, 0.0};
  }
  // Fix the global phase so that the second coefficient is real and
  // non-negative; the angle then follows from the first one.
  Complex const x = d.coeffs[present[0]];
  Complex const y = d.coeffs[present[1]];
  Complex const phase = std::conj(y) / std::abs(y);
  double const angle = std::atan2(std::abs(y), (x * phase).real());
  return {kBellLabels[present[0]], kBellLabels[present[1]], angle};
}

BellTableRow bell_table_row(Process process, Kinematics const& kin, BellLabel initial) {
  auto const in = bell_state(initial);
  BellTableRow row{initial, in, {}, BellMapping::Self, std::nullopt, 1.0};
  try {
    row.final = scatter({process, kin, in}).final;
  } catch (DegenerateOutcomeError const&) {
    row.transparent = true;
  }
  row.concurrence = concurrence(row.final);
  row.support = support_of(bell_decompose(row.final));
  row.distinct_coefficients = distinct_moduli(row.final);

  std::size_t const n = count(row.support);
  if (n == 1) {
    row.classification = row.support[idx(initial)] ? BellMapping::Self : BellMapping::Relabel;
  } else if (n == 2) {
    row.classification = BellMapping::TwoTermMix;
  } else {
    row.classification = BellMapping::Generic;
  }
  if (row.classification != BellMapping::Generic) row.mixing = mixing_of(row.final);
  return row;
}

std::vector<BellTableRow> bell_table(Process process, Kinematics const& kin) {
  std::vector<BellTableRow> rows;
  rows.reserve(4);
  for (auto b : kBellLabels) rows.push_back(bell_table_row(process, kin, b));
  return rows;
}

double mixing_angle(Process process, Kinematics const& kin, BellLabel initial) {
  auto const row = bell_table_row(process, kin, initial);
  if (!row.mixing) {
    throw NotTwoTermMixError(std::string(to_string(process)) + " maps " +
                             std::string(to_string(initial)) + " to generic coefficients");
  }
  return row.mixing->angle;
}

namespace {

constexpr double kRealTolerance = 1e-12;

RealMatrix2 real_coefficient_matrix(TwoQubitState const& s, char const* what) {
  auto const c = s.canonical_phase();
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(c[i].imag()) > kRealTolerance) {
      throw PreconditionError(std::string(what) + " state does not have real coefficients");
    }
  }
  double const r2 = std::numbers::sqrt2;
  return {{{r2 * c.a().real(), r2 * c.b().real()}, {r2 * c.c().real(), r2 * c.d().real()}}};
}

double det(RealMatrix2 const& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TransformationCheck transformation_orthogonality(Process process, Kinematics const& kin,
                                                 TwoQubitState const& initial) {
  if (concurrence(initial) < 1.0 - 1e-10) {
    throw PreconditionError("initial state is not maximally entangled");
  }
  auto const mi = real_coefficient_matrix(initial, "initial");
  double const di = det(mi);
  if (std::abs(di) < 1e-12) throw PreconditionError("initial coefficient matrix is singular");
  auto const mf = real_coefficient_matrix(scatter({process, kin, initial}).final, "final");

  RealMatrix2 const inv{{{mi[1][1] / di, -mi[0][1] / di}, {-mi[1][0] / di, mi[0][0] / di}}};
  TransformationCheck out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.t[i][j] = mf[i][0] * inv[0][j] + mf[i][1] * inv[1][j];
    }
  }
  double defect2 = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      double const g = out.t[0][i] * out.t[0][j] + out.t[1][i] * out.t[1][j];
      double const e = g - (i == j ? 1.0 : 0.0);
      defect2 += e * e;
    }
  }
  out.orthogonality_defect = std::sqrt(defect2);
  out.det = det(out.t);
  return out;
}

}  // namespace qedccr
