#include "qedccr/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "qedccr/errors.hpp"

namespace qedccr {

Coefficients scattered_coefficients(AmplitudeSet const& m, TwoQubitState const& initial) {
  Coefficients out{};
  for (std::size_t rs = 0; rs < 4; ++rs) {
    Complex sum = 0.0;
    for (std::size_t zk = 0; zk < 4; ++zk) sum += initial[zk] * m.at(zk, rs);
    out[rs] = sum;
  }
  return out;
}

ScatteringOutcome scatter(ScatteringInput const& input) {
  auto const m = amplitude_set(input.process, input.kin);
  auto const raw = scattered_coefficients(m, input.initial);
  double n2 = 0.0;
  for (auto const& z : raw) n2 += std::norm(z);
  double const raw_norm = std::sqrt(n2);
  if (!(raw_norm >= kDegenerateNorm)) {
    throw DegenerateOutcomeError("all outgoing amplitudes cancel (raw norm " +
                                 std::to_string(raw_norm) + ")");
  }
  auto final = TwoQubitState::normalize(raw).canonical_phase();
  return {final, raw_norm, ccr_report(input.initial), ccr_report(final)};
}

std::vector<TwoQubitState> iterate_scatter(ScatteringInput const& input, std::size_t passes) {
  std::vector<TwoQubitState> out;
  out.reserve(passes);
  TwoQubitState current = input.initial;
  for (std::size_t i = 0; i < passes; ++i) {
    current = scatter({input.process, input.kin, current}).final;
    out.push_back(current);
  }
  return out;
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::DomainError: return "domain_error";
    case RowStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

std::vector<double> uniform_theta_grid(std::size_t count, double lo, double hi) {
  std::vector<double> grid(count);
  double const step = (hi - lo) / static_cast<double>(count + 1);
  for (std::size_t k = 0; k < count; ++k) grid[k] = lo + static_cast<double>(k + 1) * step;
  return grid;
}

std::vector<double> uniform_theta_grid(std::size_t count) {
  return uniform_theta_grid(count, 0.0, 2.0 * std::numbers::pi);
}

namespace {

ScanRow scan_row(Process process, TwoQubitState const& initial, double mu, double lambda,
                 double theta) {
  ScanRow row;
  row.theta = theta;
  try {
    auto const out = scatter({process, Kinematics(mu, theta, lambda), initial});
    auto const& r = out.final_report;
    row.c2 = r.concurrence * r.concurrence;
    row.pa2 = r.a.predictability * r.a.predictability;
    row.pb2 = r.b.predictability * r.b.predictability;
    row.va2 = r.a.visibility * r.a.visibility;
    row.vb2 = r.b.visibility * r.b.visibility;
    row.raw_norm = out.raw_norm;
    row.residual_a = r.a.triality_residual;
    row.residual_b = r.b.triality_residual;
  } catch (DomainError const&) {
    row.status = RowStatus::DomainError;
  } catch (DegenerateOutcomeError const&) {
    row.status = RowStatus::Degenerate;
  }
  if (row.status != RowStatus::Ok) {
    double const nan = std::numeric_limits<double>::quiet_NaN();
    row.c2 = row.pa2 = row.pb2 = row.va2 = row.vb2 = nan;
    row.raw_norm = row.residual_a = row.residual_b = nan;
  }
  return row;
}

}  // namespace

ScanResult ccr_scan(Process process, TwoQubitState const& initial, double mu, double lambda,
                    std::span<double const> theta_grid, ScanOptions const& opts) {
  // Validate the grid-independent parameters once.
  Kinematics(mu, std::numbers::pi / 2, lambda);

  ScanResult result;
  result.process = process;
  result.mu = mu;
  result.lambda = lambda;
  result.initial = initial;
  result.rows.resize(theta_grid.size());

  std::size_t const n = theta_grid.size();
  std::size_t const workers = std::clamp<std::size_t>(opts.threads, 1, std::max<std::size_t>(n, 1));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      result.rows[i] = scan_row(process, initial, mu, lambda, theta_grid[i]);
    }
  };
  if (workers == 1) {
    work(0, n);
    return result;
  }
  {
    std::vector<std::jthread> pool;
    std::size_t const chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t const begin = w * chunk;
      std::size_t const end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }  // joins
  return result;
}

}  // namespace qedccr
