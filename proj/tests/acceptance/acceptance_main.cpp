// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qedccr/bell.hpp"
#include "qedccr/errors.hpp"
#include "qedccr/limits.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/regime.hpp"
#include "qedccr/resource.hpp"
#include "qedccr/scattering.hpp"

using namespace qedccr;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(char const* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Coefficients c{};
  for (auto& z : c) z = {g(rng), g(rng)};
  return TwoQubitState::normalize(c);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

double random_theta(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(1e-6, 2 * pi - 1e-6)(rng);
}

// Shared sample for criteria 1 and 2: 10⁴ random states plus post-scattering
// states of every process on a 10 x 10 (μ, θ) grid.
std::vector<TwoQubitState> const& sample() {
  static std::vector<TwoQubitState> states = [] {
    std::mt19937_64 rng(kSeed);
    std::vector<TwoQubitState> v;
    for (int i = 0; i < 10000; ++i) v.push_back(random_state(rng));
    for (auto p : kAllProcesses) {
      for (int i = 0; i < 10; ++i) {
        double const mu = std::pow(10.0, -1.0 + 4.0 * i / 9.0);
        for (int j = 0; j < 10; ++j) {
          double const theta = 2 * pi * (j + 0.5) / 10.0;
          v.push_back(scatter({p, Kinematics(mu, theta), random_state(rng)}).final);
        }
      }
    }
    return v;
  }();
  return states;
}

Outcome criterion1() {
  double worst = 0.0;
  for (auto const& s : sample()) worst = std::max(worst, ccr_report(s).max_residual());
  return {worst < 1e-10, "states=" + std::to_string(sample().size()) +
                             " max_residual=" + fmt("%.3e", worst)};
}

Outcome criterion2() {
  double hs = 0.0, vn = 0.0, doubled = 0.0;
  for (auto const& s : sample()) {
    double const c = concurrence(s);
    for (auto k : {Subsystem::A, Subsystem::B}) {
      auto const h = hs_triplet(s, k);
      hs = std::max(hs, std::abs(h.sum() - 0.5));
      vn = std::max(vn, std::abs(entropic_triplet(s, k).sum() - 1.0));
      double const p = predictability(s, k);
      double const v = visibility(s, k);
      doubled = std::max({doubled, std::abs(2 * h.predictability - p * p),
                          std::abs(2 * h.coherence - v * v), std::abs(2 * h.nonlocal - c * c)});
    }
  }
  return {hs < 1e-10 && vn < 1e-10 && doubled < 1e-10,
          "hs_sum_dev=" + fmt("%.3e", hs) + " vn_sum_dev=" + fmt("%.3e", vn) +
              " doubled_dev=" + fmt("%.3e", doubled)};
}

Outcome criterion3() {
  std::mt19937_64 rng(kSeed + 3);
  int fermionic_bad = 0, gg_pattern_bad = 0, gg_phi_minus_bad = 0, compton_bad = 0;
  double worst_sin2r = 0.0, worst_cos2r = 0.0, compton_max_c = 0.0;
  for (int n = 0; n < 20; ++n) {
    Kinematics const kin(log_uniform(rng, 0.1, 1e3), random_theta(rng));
    for (auto p : kAllProcesses) {
      if (p == Process::Moller && kin.theta() == pi) continue;
      auto const rows = bell_table(p, kin);
      if (is_fermionic(p)) {
        for (auto const& r : rows) {
          if (std::abs(r.concurrence - 1.0) > 1e-9) ++fermionic_bad;
        }
      } else if (p == Process::EeToGammaGamma) {
        auto const& phi_p = rows[0];
        bool ok = phi_p.classification == BellMapping::Relabel &&
                  phi_p.support[static_cast<std::size_t>(BellLabel::PhiMinus)] &&
                  std::abs(phi_p.concurrence - 1.0) <= 1e-9;
        for (std::size_t i : {2u, 3u}) {
          ok = ok && rows[i].classification == BellMapping::Self &&
               std::abs(rows[i].concurrence - 1.0) <= 1e-9;
        }
        if (!ok) ++gg_pattern_bad;
        auto const& phi_m = rows[1];
        double const r = phi_m.mixing ? phi_m.mixing->angle : std::nan("");
        double const d_sin = std::abs(phi_m.concurrence - std::abs(std::sin(2 * r)));
        double const d_cos = std::abs(phi_m.concurrence - std::abs(std::cos(2 * r)));
        worst_sin2r = std::max(worst_sin2r, std::isnan(d_sin) ? 1.0 : d_sin);
        worst_cos2r = std::max(worst_cos2r, std::isnan(d_cos) ? 1.0 : d_cos);
        if (!(d_sin <= 1e-9)) ++gg_phi_minus_bad;
      } else {
        for (auto const& r : rows) {
          compton_max_c = std::max(compton_max_c, r.concurrence);
          if (!(r.concurrence < 1.0 - 1e-6 && r.classification == BellMapping::Generic)) {
            ++compton_bad;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << "fermionic_bad_rows=" << fermionic_bad << " gg_pattern_bad=" << gg_pattern_bad
    << " gg_phi-_sin2r_bad=" << gg_phi_minus_bad << " (max|C-|sin2r||=" << fmt("%.3e", worst_sin2r)
    << ", max|C-|cos2r||=" << fmt("%.3e", worst_cos2r) << ") compton_bad_rows=" << compton_bad
    << "/80 compton_max_C=" << fmt("%.12f", compton_max_c);
  return {fermionic_bad == 0 && gg_pattern_bad == 0 && gg_phi_minus_bad == 0 && compton_bad == 0,
          d.str()};
}

Outcome criterion4() {
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  double worst_c = 0.0, worst_defect = 0.0, worst_det = 0.0;
  int checked = 0, degenerate = 0;
  for (auto p : kAllProcesses) {
    if (!is_fermionic(p)) continue;
    for (int n = 0; n < 100; ++n) {
      double const t = u(rng);
      double const sign = u(rng) < pi ? 1.0 : -1.0;
      double const r = 1.0 / std::sqrt(2.0);
      auto const s = TwoQubitState::exact({r * std::cos(t), -sign * r * std::sin(t),
                                           r * std::sin(t), sign * r * std::cos(t)});
      Kinematics const kin(log_uniform(rng, 0.1, 1e3), random_theta(rng));
      try {
        auto const out = scatter({p, kin, s});
        auto const tc = transformation_orthogonality(p, kin, s);
        worst_c = std::max(worst_c, std::abs(out.final_report.concurrence - 1.0));
        worst_defect = std::max(worst_defect, tc.orthogonality_defect);
        worst_det = std::max(worst_det, std::abs(std::abs(tc.det) - 1.0));
        ++checked;
      } catch (DegenerateOutcomeError const&) {
        ++degenerate;
      }
    }
  }
  return {worst_c <= 1e-9 && worst_defect < 1e-10 && worst_det <= 1e-10 && checked > 0,
          "checked=" + std::to_string(checked) + " degenerate=" + std::to_string(degenerate) +
              " max|C-1|=" + fmt("%.3e", worst_c) + " max_defect=" + fmt("%.3e", worst_defect) +
              " max||det|-1|=" + fmt("%.3e", worst_det)};
}

Outcome criterion5() {
  auto gap = [](double mu) {
    auto const m = amplitude_set(Process::Bhabha, Kinematics(mu, pi));
    return std::abs(m.at(0, 0)) - std::abs(m.at(0, 3));
  };
  double lo = 0.1, hi = 1.0;
  if (gap(lo) * gap(hi) > 0) return {false, "no sign change in the bracket"};
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double const mid = 0.5 * (lo + hi);
    (gap(lo) * gap(mid) <= 0 ? hi : lo) = mid;
  }
  double const root = 0.5 * (lo + hi);
  double const closed = 0.5 * std::sqrt(-3.0 + std::sqrt(17.0));
  double const c = scatter({Process::Bhabha, Kinematics(closed, pi),
                            TwoQubitState::basis(Helicity::R, Helicity::R)})
                       .final_report.concurrence;
  return {std::abs(root - closed) < 1e-12 && std::abs(c - 1.0) <= 1e-9,
          "root=" + fmt("%.15f", root) + " closed_form=" + fmt("%.15f", closed) +
              " C_f=" + fmt("%.15f", c)};
}

Outcome criterion6() {
  std::vector<double> alphas, betas;
  for (int i = 0; i < 50; ++i) {
    alphas.push_back(pi * i / 50.0);
    betas.push_back(-pi / 2 + pi * (i + 0.5) / 50.0);
  }
  auto const thetas = uniform_theta_grid(36);
  auto const cmp = compare_with_engine(alphas, betas, thetas);
  return {cmp.max_deviation < 1e-4 && cmp.max_residual <= 1e-12,
          "points=" + std::to_string(cmp.points) + " max_dev=" + fmt("%.3e", cmp.max_deviation) +
              " max_residual=" + fmt("%.3e", cmp.max_residual)};
}

Outcome criterion7() {
  auto const rl = TwoQubitState::basis(Helicity::R, Helicity::L);
  ThetaDomain const d(pi / 2 - pi / 20, pi / 2 + pi / 20);
  std::vector<double> mus;
  for (int i = 0; i <= 30; ++i) mus.push_back(10.0 * std::pow(1e3, i / 30.0));
  std::ostringstream detail;
  bool any_match = false;
  for (bool sw : {false, true}) {
    AverageOptions o;
    o.sin_weight = sw;
    bool monotone = true;
    double prev = -1.0, lo = 1.0, hi = 0.0;
    for (double mu : mus) {
      double const c2 = weighted_average(Process::Bhabha, mu, kMuonElectronMassRatio, rl, d, o).c2_bar;
      if (c2 <= prev) monotone = false;
      prev = c2;
      if (mu >= 500.0) {
        lo = std::min(lo, c2);
        hi = std::max(hi, c2);
      }
    }
    bool const in_band = lo >= 0.75 && hi <= 0.85;
    any_match = any_match || (monotone && in_band);
    detail << (sw ? " sin_weight:" : "no_sin_weight:") << " monotone=" << (monotone ? "yes" : "no")
           << " c2_bar(mu>=500) in [" << fmt("%.6f", lo) << ", " << fmt("%.6f", hi) << "]"
           << (in_band ? " in band" : " outside [0.75,0.85]") << ";";
  }
  return {any_match, detail.str()};
}

Outcome criterion8() {
  auto const grid = uniform_theta_grid(kDefaultRegimeGrid);
  double const lam = kMuonElectronMassRatio;
  bool ok = true;
  std::ostringstream d;
  for (double a : {pi / 16, pi / 8, 3 * pi / 16}) {
    auto const p = classify(Process::Bhabha, 1.0, lam, FamilyState{Family::PhiPlus, a}, grid);
    auto const m = classify(Process::Bhabha, 1.0, lam, FamilyState{Family::PhiMinus, a}, grid);
    ok = ok && p.regime == Regime::Entanglophilus && m.regime == Regime::Entanglophobus;
    d << "phi+(" << fmt("%.4f", a) << ")=" << to_string(p.regime) << " phi-=" << to_string(m.regime)
      << " ";
  }
  auto const psi = classify(Process::Bhabha, 1.0, lam, FamilyState{Family::PsiPlus, pi / 8}, grid);
  ok = ok && psi.regime == Regime::Mixed;
  d << "psi+(pi/8)=" << to_string(psi.regime);

  auto const a = TwoQubitState::general(pi / 4, pi / 6, pi / 2);
  auto const b = TwoQubitState::general(pi / 3, pi / 6, 0.0);
  double const ca = concurrence(a);
  double const cb = concurrence(b);
  double min_gain_a = INFINITY, max_gain_b = -INFINITY, min_cb = INFINITY;
  int zeros_b = 0;
  double prev = 0.0;
  for (double th : grid) {
    auto const fa = scatter({Process::Bhabha, Kinematics(1.0, th), a}).final;
    auto const fb = scatter({Process::Bhabha, Kinematics(1.0, th), b}).final;
    min_gain_a = std::min(min_gain_a, concurrence(fa) - ca);
    max_gain_b = std::max(max_gain_b, concurrence(fb) - cb);
    min_cb = std::min(min_cb, concurrence(fb));
    double const det = (fb.a() * fb.d() - fb.b() * fb.c()).real();
    if (prev != 0.0 && (det > 0) != (prev > 0)) ++zeros_b;
    prev = det;
  }
  ok = ok && min_gain_a > 0.0 && max_gain_b < 0.0 && zeros_b > 0;
  d << " A:min(Cf-Ci)=" << fmt("%.3e", min_gain_a) << " B:max(Cf-Ci)=" << fmt("%.3e", max_gain_b)
    << " B:zeros=" << zeros_b << " B:min_Cf=" << fmt("%.2e", min_cb);
  return {ok, d.str()};
}

Outcome criterion9() {
  auto const rl = TwoQubitState::basis(Helicity::R, Helicity::L);
  auto const grid = uniform_theta_grid(720);
  double sym = 0.0, v_rel = 0.0, v_low = 0.0;
  for (double mu : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    auto const scan = ccr_scan(Process::Bhabha, rl, mu, kMuonElectronMassRatio, grid);
    for (auto const& r : scan.rows) {
      sym = std::max({sym, std::abs(std::sqrt(r.pa2) - std::sqrt(r.pb2)),
                      std::abs(std::sqrt(r.va2) - std::sqrt(r.vb2))});
      if (mu == 1000.0) v_rel = std::max(v_rel, r.va2);
      if (mu == 1.0) v_low = std::max(v_low, r.va2);
    }
  }
  return {sym < 1e-10 && v_rel < 1e-4 && v_low > 0.01,
          "max|A-B|=" + fmt("%.3e", sym) + " maxV2(mu=1000)=" + fmt("%.3e", v_rel) +
              " maxV2(mu=1)=" + fmt("%.4f", v_low)};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    double budget_s;
    std::function<Outcome()> fn;
  };
  std::vector<Entry> const entries = {
      {1, 10, criterion1}, {2, 10, criterion2}, {3, 5, criterion3},  {4, 0, criterion4},
      {5, 0, criterion5},  {6, 60, criterion6}, {7, 30, criterion7}, {8, 0, criterion8},
      {9, 0, criterion9},
  };
  int failures = 0;
  for (auto const& e : entries) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (std::exception const& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool const in_time = e.budget_s == 0 || secs < e.budget_s;
    bool const pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", e.id, o.detail.c_str(),
                secs, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failures,
              entries.size());
  return failures == 0 ? 0 : 1;
}
