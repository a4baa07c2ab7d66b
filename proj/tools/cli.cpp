#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "qedccr/bell.hpp"
#include "qedccr/errors.hpp"
#include "qedccr/limits.hpp"
#include "qedccr/measures.hpp"
#include "qedccr/regime.hpp"
#include "qedccr/resource.hpp"
#include "qedccr/scattering.hpp"
#include "qedccr/serialization.hpp"

namespace qedccr::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto const pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> parse_angles(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_angle(part));
  return out;
}

Helicity parse_helicity(char c) {
  if (c == 'R') return Helicity::R;
  if (c == 'L') return Helicity::L;
  throw ConfigError(std::string("helicity must be R or L, got '") + c + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
  text = trim(text);
  auto const pos = text.find("pi");
  if (pos == std::string_view::npos) return parse_real(text);

  auto prefix = trim(text.substr(0, pos));
  auto suffix = trim(text.substr(pos + 2));
  double factor = 1.0;
  if (prefix == "-") {
    factor = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    if (prefix.back() == '*') prefix.remove_suffix(1);
    factor = parse_real(prefix);
  }
  if (!suffix.empty()) {
    if (suffix.front() != '/') throw ConfigError("bad angle '" + std::string(text) + "'");
    double const den = parse_real(suffix.substr(1));
    if (den == 0.0) throw ConfigError("division by zero in angle '" + std::string(text) + "'");
    factor /= den;
  }
  return factor * std::numbers::pi;
}

TwoQubitState parse_initial_state(std::string_view text) {
  text = trim(text);
  if (text.size() == 2 && text.find(',') == std::string_view::npos) {
    return TwoQubitState::basis(parse_helicity(text[0]), parse_helicity(text[1]));
  }
  auto const colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto const kind = text.substr(0, colon);
    auto const rest = text.substr(colon + 1);
    if (kind == "bell") {
      try {
        return bell_state(parse_bell_label(trim(rest)));
      } catch (Error const& e) {
        throw ConfigError(e.what());
      }
    }
    if (kind == "family") {
      auto const sep = rest.find(':');
      if (sep == std::string_view::npos) {
        throw ConfigError("family state needs 'family:<name>:<angle>'");
      }
      try {
        return FamilyState{parse_family(trim(rest.substr(0, sep))),
                           parse_angle(rest.substr(sep + 1))}.state();
      } catch (Error const& e) {
        throw ConfigError(e.what());
      }
    }
    auto const v = parse_angles(rest);
    if (kind == "product") {
      if (v.size() != 2 && v.size() != 4) {
        throw ConfigError("product state needs alpha,beta[,xi,eta]");
      }
      return v.size() == 2 ? TwoQubitState::product(v[0], v[1])
                           : TwoQubitState::product(v[0], v[1], v[2], v[3]);
    }
    if (kind == "general") {
      if (v.size() != 3 && v.size() != 6) {
        throw ConfigError("general state needs alpha,beta,chi[,xi,eta,tau]");
      }
      return v.size() == 3 ? TwoQubitState::general(v[0], v[1], v[2])
                           : TwoQubitState::general(v[0], v[1], v[2], v[3], v[4], v[5]);
    }
    throw ConfigError("unknown initial-state kind '" + std::string(kind) + "'");
  }
  auto const parts = split(text, ',');
  if (parts.size() != 8) {
    throw ConfigError("initial state: expected a label, a kind:args spec or 8 reals, got '" +
                      std::string(text) + "'");
  }
  Coefficients c{};
  for (std::size_t i = 0; i < 4; ++i) {
    c[i] = {parse_real(parts[2 * i]), parse_real(parts[2 * i + 1])};
  }
  return TwoQubitState::normalize(c);
}

std::vector<double> parse_log_sweep(std::string_view text) {
  auto const parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("sweep must be start:stop:count");
  double const start = parse_real(parts[0]);
  double const stop = parse_real(parts[1]);
  double const count_d = parse_real(parts[2]);
  if (!(start > 0.0 && stop > 0.0)) throw ConfigError("log sweep bounds must be positive");
  if (count_d < 1.0 || count_d != std::floor(count_d)) throw ConfigError("bad sweep count");
  auto const count = static_cast<std::size_t>(count_d);
  std::vector<double> out;
  if (count == 1) return {start};
  double const l0 = std::log(start);
  double const l1 = std::log(stop);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(std::exp(l0 + (l1 - l0) * static_cast<double>(k) / static_cast<double>(count - 1)));
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto const hash = line.find('#');
    std::string_view s = trim(std::string_view(line).substr(0, hash));
    if (s.empty()) continue;
    auto const eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    auto key = std::string(trim(s.substr(0, eq)));
    auto value = std::string(trim(s.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    kv.emplace_back(std::move(key), std::move(value));
  }
  return kv;
}

namespace {

// Merge "--config file" entries into the argument list; explicit flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;

  auto given = [&](std::string const& key) {
    std::string const flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](std::string const& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  for (auto const& [key, value] : read_config_file(*path)) {
    if (key == "command") {
      if (args.empty() || args.front().rfind("-", 0) == 0) args.insert(args.begin(), value);
      continue;
    }
    if (given(key)) continue;
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

struct Common {
  std::string process = "bhabha";
  double mu = 1.0;
  double lambda = kMuonElectronMassRatio;
  std::string output;
  std::string format = "csv";
};

void add_common(CLI::App* sub, Common& c, bool with_process = true) {
  if (with_process) {
    sub->add_option("--process", c.process, "bhabha|moller|eemumu|emu|eegg|compton")
        ->check(CLI::IsMember({"bhabha", "moller", "eemumu", "emu", "eegg", "compton"}));
  }
  sub->add_option("--mu", c.mu, "p/m of the lighter particle");
  sub->add_option("--lambda", c.lambda, "M/m mass ratio (muon processes)");
  sub->add_option("--output", c.output, "output file (default stdout)");
  sub->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

void emit(Table const& t, Common const& c, std::ostream& out) {
  auto const fmt = parse_format(c.format);
  if (c.output.empty()) {
    write_table(out, t, fmt);
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw ConfigError("cannot open output file '" + c.output + "'");
  write_table(file, t, fmt);
}

void common_meta(Table& t, Common const& c, std::string const& command) {
  t.meta["command"] = command;
  t.meta["process"] = c.process;
  t.meta["mu"] = c.mu;
  t.meta["lambda"] = c.lambda;
}

std::string support_string(std::array<bool, 4> const& support) {
  std::string s;
  for (auto b : kBellLabels) {
    if (!support[static_cast<std::size_t>(b)]) continue;
    if (!s.empty()) s += '|';
    s += to_string(b);
  }
  return s.empty() ? "none" : s;
}

// ---- ccr ------------------------------------------------------------------

struct CcrOpts {
  Common common;
  std::string initial = "RL";
  std::size_t grid = 720;
  std::string theta_lo = "0";
  std::string theta_hi = "2pi";
  std::size_t threads = 1;
};

int run_ccr(CcrOpts const& o, std::ostream& out) {
  auto const process = parse_process(o.common.process);
  auto const initial = parse_initial_state(o.initial);
  double const lo = parse_angle(o.theta_lo);
  double const hi = parse_angle(o.theta_hi);
  if (!(lo >= 0.0 && lo < hi && hi <= 2.0 * std::numbers::pi)) {
    throw DomainError("theta range must satisfy 0 <= lo < hi <= 2pi");
  }
  if (o.grid == 0) throw DomainError("grid must contain at least one angle");
  auto const grid = uniform_theta_grid(o.grid, lo, hi);
  ScanOptions so;
  so.threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  auto const scan = ccr_scan(process, initial, o.common.mu, o.common.lambda, grid, so);

  auto t = scan_table(scan);
  t.meta["grid"] = o.grid;
  t.meta["theta_lo"] = lo;
  t.meta["theta_hi"] = hi;
  emit(t, o.common, out);

  bool const ok = std::all_of(scan.rows.begin(), scan.rows.end(), [](ScanRow const& r) {
    return r.status != RowStatus::Ok ||
           (r.residual_a <= kTrialityTolerance && r.residual_b <= kTrialityTolerance);
  });
  return ok ? kOk : kVerificationFailure;
}

// ---- bell-table -----------------------------------------------------------

struct BellOpts {
  Common common;
  std::string theta;
};

int run_bell(BellOpts const& o, std::ostream& out) {
  auto const process = parse_process(o.common.process);
  Kinematics const kin(o.common.mu, parse_angle(o.theta), o.common.lambda);
  auto const rows = bell_table(process, kin);

  Table t;
  common_meta(t, o.common, "bell-table");
  t.meta["theta"] = kin.theta();
  t.columns = {"initial",     "classification", "support",   "first",     "second",
               "mixing_angle", "concurrence",   "transparent", "distinct", "det_T",
               "orthogonality_defect", "a_re", "a_im", "b_re", "b_im", "c_re", "c_im",
               "d_re", "d_im"};
  double const nan = std::numeric_limits<double>::quiet_NaN();
  for (auto const& r : rows) {
    std::vector<Cell> row;
    row.emplace_back(std::string(to_string(r.initial)));
    row.emplace_back(std::string(to_string(r.classification)));
    row.emplace_back(support_string(r.support));
    if (r.mixing) {
      row.emplace_back(std::string(to_string(r.mixing->first)));
      row.emplace_back(std::string(to_string(r.mixing->second)));
      row.emplace_back(r.mixing->angle);
    } else {
      row.emplace_back(std::string("-"));
      row.emplace_back(std::string("-"));
      row.emplace_back(nan);
    }
    row.emplace_back(r.concurrence);
    row.emplace_back(std::string(r.transparent ? "true" : "false"));
    row.emplace_back(std::string(r.distinct_coefficients ? "true" : "false"));
    try {
      auto const tc = transformation_orthogonality(process, kin, bell_state(r.initial));
      row.emplace_back(tc.det);
      row.emplace_back(tc.orthogonality_defect);
    } catch (Error const&) {
      row.emplace_back(nan);
      row.emplace_back(nan);
    }
    for (auto const& z : r.final.coefficients()) {
      row.emplace_back(z.real());
      row.emplace_back(z.imag());
    }
    t.rows.push_back(std::move(row));
  }
  emit(t, o.common, out);
  return kOk;
}

// ---- regime ---------------------------------------------------------------

struct RegimeOpts {
  Common common;
  std::string family;
  std::string angle;
  std::string angle_sweep;
  std::size_t grid = kDefaultRegimeGrid;
  bool theta_rows = false;
};

std::vector<double> parse_linear_sweep(std::string_view text) {
  auto const parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("sweep must be start:stop:count");
  double const a = parse_angle(parts[0]);
  double const b = parse_angle(parts[1]);
  double const n = parse_real(parts[2]);
  if (n < 1.0 || n != std::floor(n)) throw ConfigError("bad sweep count");
  auto const count = static_cast<std::size_t>(n);
  if (count == 1) return {a};
  std::vector<double> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return out;
}

int run_regime(RegimeOpts const& o, std::ostream& out) {
  auto const process = parse_process(o.common.process);
  Family family;
  try {
    family = parse_family(o.family);
  } catch (Error const& e) {
    throw ConfigError(e.what());
  }
  if (o.angle.empty() == o.angle_sweep.empty()) {
    throw ConfigError("regime needs exactly one of --angle or --angle-sweep");
  }
  if (o.grid == 0) throw DomainError("grid must contain at least one angle");
  auto const angles = o.angle.empty() ? parse_linear_sweep(o.angle_sweep)
                                      : std::vector<double>{parse_angle(o.angle)};
  auto const grid = uniform_theta_grid(o.grid);

  Table t;
  common_meta(t, o.common, "regime");
  t.meta["family"] = std::string(to_string(family));
  t.meta["grid"] = o.grid;
  if (o.theta_rows) {
    if (angles.size() != 1) throw ConfigError("--theta-rows needs a single --angle");
    auto const dc = delta_c_scan(process, o.common.mu, o.common.lambda,
                                 FamilyState{family, angles[0]}.state(), grid);
    t.meta["angle"] = angles[0];
    t.columns = {"theta", "delta_C"};
    for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], dc[i]});
  } else {
    t.columns = {"family", "angle", "regime", "min_delta_C", "max_delta_C", "grid"};
    for (double a : angles) {
      auto const v = classify(process, o.common.mu, o.common.lambda, FamilyState{family, a}, grid);
      t.rows.push_back({std::string(to_string(family)), a, std::string(to_string(v.regime)),
                        v.min_dc, v.max_dc, static_cast<double>(v.theta_grid_size)});
    }
  }
  emit(t, o.common, out);
  return kOk;
}

// ---- average --------------------------------------------------------------

struct AverageCliOpts {
  Common common;
  std::string initial = "RL";
  std::string domain;
  std::string mu_sweep;
  std::size_t points = 32;
  bool sin_weight = false;
  double rel_tol = 1e-8;
};

int run_average(AverageCliOpts const& o, CLI::App const& sub, std::ostream& out) {
  auto const process = parse_process(o.common.process);
  auto const initial = parse_initial_state(o.initial);
  auto const bounds = parse_angles(o.domain);
  if (bounds.size() != 2) throw ConfigError("--domain needs lo,hi");
  ThetaDomain const domain(bounds[0], bounds[1]);
  if (!o.mu_sweep.empty() && sub.count("--mu") > 0) {
    throw ConfigError("--mu and --mu-sweep are mutually exclusive");
  }
  auto const mus = o.mu_sweep.empty() ? std::vector<double>{o.common.mu}
                                      : parse_log_sweep(o.mu_sweep);
  AverageOptions ao;
  ao.quadrature_points = o.points;
  ao.sin_weight = o.sin_weight;
  ao.rel_tol = o.rel_tol;

  Table t;
  common_meta(t, o.common, "average");
  t.meta["domain"] = {domain.lo(), domain.hi()};
  t.meta["sin_weight"] = o.sin_weight;
  t.meta["points"] = o.points;
  t.meta["initial"] = coefficients_json(initial);
  t.columns = {"mu",      "C2_bar",  "PA2_bar",    "PB2_bar",    "VA2_bar",
               "VB2_bar", "N",       "residual_A", "residual_B", "panels"};
  bool ok = true;
  for (double mu : mus) {
    auto const w = weighted_average(process, mu, o.common.lambda, initial, domain, ao);
    ok = ok && w.residual_a() <= 1e-8 && w.residual_b() <= 1e-8;
    t.rows.push_back({mu, w.c2_bar, w.pa2_bar, w.pb2_bar, w.va2_bar, w.vb2_bar, w.n_weight,
                      w.residual_a(), w.residual_b(), static_cast<double>(w.panels)});
  }
  emit(t, o.common, out);
  return ok ? kOk : kVerificationFailure;
}

// ---- limit-check ----------------------------------------------------------

struct LimitOpts {
  Common common;
  std::string alpha;
  std::string beta;
  std::size_t grid = 64;
  std::string reading = "corrected";
  double tolerance = 1e-4;
};

int run_limit(LimitOpts const& o, std::ostream& out) {
  LimitReading reading;
  if (o.reading == "corrected") {
    reading = LimitReading::Corrected;
  } else if (o.reading == "literal") {
    reading = LimitReading::Literal;
  } else {
    throw ConfigError("--reading must be corrected or literal");
  }
  auto const alphas = parse_angles(o.alpha);
  auto const betas = parse_angles(o.beta);
  if (o.grid == 0) throw DomainError("grid must contain at least one angle");
  auto const grid = uniform_theta_grid(o.grid);

  Table t;
  t.meta["command"] = "limit-check";
  t.meta["mu"] = o.common.mu;
  t.meta["reading"] = o.reading;
  t.meta["grid"] = o.grid;
  t.columns = {"alpha",    "beta",     "theta",    "C_limit",  "C_engine", "PA_limit",
               "PA_engine", "PB_limit", "PB_engine", "VA_limit", "VA_engine", "VB_limit",
               "VB_engine", "max_deviation", "residual_limit"};
  double worst = 0.0;
  double worst_residual = 0.0;
  for (double a : alphas) {
    for (double b : betas) {
      auto const initial = TwoQubitState::product(a, b);
      for (double theta : grid) {
        auto const lim = ccr_limit_case2({a, b}, theta, reading);
        auto const r =
            scatter({Process::Bhabha, Kinematics(o.common.mu, theta), initial}).final_report;
        double const dev = std::max({std::abs(lim.c - r.concurrence),
                                     std::abs(lim.pa - r.a.predictability),
                                     std::abs(lim.pb - r.b.predictability),
                                     std::abs(lim.va - r.a.visibility),
                                     std::abs(lim.vb - r.b.visibility)});
        double const res = std::max(lim.residual_a(), lim.residual_b());
        worst = std::max(worst, dev);
        worst_residual = std::max(worst_residual, res);
        t.rows.push_back({a, b, theta, lim.c, r.concurrence, lim.pa, r.a.predictability, lim.pb,
                          r.b.predictability, lim.va, r.a.visibility, lim.vb, r.b.visibility, dev,
                          res});
      }
    }
  }
  t.meta["max_deviation"] = worst;
  t.meta["max_residual"] = worst_residual;
  emit(t, o.common, out);
  return worst <= o.tolerance ? kOk : kVerificationFailure;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
  Common common;
  std::uint64_t seed = 20240101;
  std::size_t samples = 10000;
};

int run_verify(VerifyOpts const& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  double triality = 0.0;
  double hs = 0.0;
  double vn = 0.0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    Coefficients c{};
    for (auto& z : c) z = {gauss(rng), gauss(rng)};
    auto const s = TwoQubitState::normalize(c);
    auto const rep = ccr_report(s);
    triality = std::max(triality, rep.max_residual());
    for (auto k : {Subsystem::A, Subsystem::B}) {
      hs = std::max(hs, std::abs(rep[k].hs.sum() - 0.5));
      vn = std::max(vn, std::abs(rep[k].vn.sum() - 1.0));
    }
  }

  double conservation = 0.0;
  std::size_t scattered = 0;
  for (auto p : kAllProcesses) {
    if (!is_fermionic(p)) continue;
    for (std::size_t i = 0; i < o.samples / 10 + 1; ++i) {
      double const mu = std::exp(std::log(0.1) + uni(rng) * std::log(1e4));
      double const theta = 2.0 * std::numbers::pi * (1e-6 + (1.0 - 2e-6) * uni(rng));
      auto const label = kBellLabels[static_cast<std::size_t>(uni(rng) * 4.0) % 4];
      try {
        auto const r = scatter({p, Kinematics(mu, theta, o.common.lambda), bell_state(label)});
        conservation = std::max(conservation, std::abs(1.0 - r.final_report.concurrence));
        ++scattered;
      } catch (DegenerateOutcomeError const&) {
      } catch (DomainError const&) {
      }
    }
  }

  Table t;
  t.meta["command"] = "verify";
  t.meta["seed"] = o.seed;
  t.meta["samples"] = o.samples;
  t.columns = {"check", "samples", "max_residual", "tolerance", "status"};
  bool all = true;
  auto add = [&](std::string name, std::size_t n, double v, double tol) {
    bool const pass = v <= tol;
    all = all && pass;
    t.rows.push_back({std::move(name), static_cast<double>(n), v, tol,
                      std::string(pass ? "pass" : "fail")});
  };
  add("triality", o.samples, triality, kTrialityTolerance);
  add("hilbert_schmidt_sum", o.samples, hs, 1e-10);
  add("entropic_sum", o.samples, vn, 1e-10);
  add("bell_conservation", scattered, conservation, 1e-10);
  emit(t, o.common, out);
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete complementarity relations in tree-level QED scattering", "qedccr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CcrOpts ccr;
  auto* s_ccr = app.add_subcommand("ccr", "CCR terms over a theta grid");
  add_common(s_ccr, ccr.common);
  s_ccr->add_option("--initial", ccr.initial, "initial state");
  s_ccr->add_option("--grid", ccr.grid, "number of interior theta points");
  s_ccr->add_option("--theta-lo", ccr.theta_lo, "lower theta bound (exclusive)");
  s_ccr->add_option("--theta-hi", ccr.theta_hi, "upper theta bound (exclusive)");
  s_ccr->add_option("--threads", ccr.threads, "worker threads, 0 = all cores");

  BellOpts bell;
  auto* s_bell = app.add_subcommand("bell-table", "Bell-state mapping at one angle");
  add_common(s_bell, bell.common);
  s_bell->add_option("--theta", bell.theta, "scattering angle")->required();

  RegimeOpts regime;
  auto* s_regime = app.add_subcommand("regime", "entanglophilus/entanglophobus classification");
  add_common(s_regime, regime.common);
  s_regime->add_option("--family", regime.family, "phi+|phi-|psi+|psi-")->required();
  s_regime->add_option("--angle", regime.angle, "family angle");
  s_regime->add_option("--angle-sweep", regime.angle_sweep, "start:stop:count (linear)");
  s_regime->add_option("--grid", regime.grid, "theta grid size");
  s_regime->add_flag("--theta-rows", regime.theta_rows, "emit delta_C per theta");

  AverageCliOpts avg;
  auto* s_avg = app.add_subcommand("average", "cross-section weighted averages");
  add_common(s_avg, avg.common);
  s_avg->add_option("--initial", avg.initial, "initial state");
  s_avg->add_option("--domain", avg.domain, "lo,hi")->required();
  s_avg->add_option("--mu-sweep", avg.mu_sweep, "start:stop:count (geometric)");
  s_avg->add_option("--points", avg.points, "Gauss-Legendre nodes per panel (>= 16)");
  s_avg->add_flag("--sin-weight", avg.sin_weight, "include the sin(theta) Jacobian");
  s_avg->add_option("--rel-tol", avg.rel_tol, "adaptive quadrature tolerance");

  LimitOpts lim;
  lim.common.mu = kLimitMu;
  auto* s_lim = app.add_subcommand("limit-check", "closed-form large-mu limits vs engine");
  add_common(s_lim, lim.common, false);
  s_lim->add_option("--alpha", lim.alpha, "comma-separated alpha values")->required();
  s_lim->add_option("--beta", lim.beta, "comma-separated beta values")->required();
  s_lim->add_option("--grid", lim.grid, "theta grid size");
  s_lim->add_option("--reading", lim.reading, "corrected|literal")
      ->check(CLI::IsMember({"corrected", "literal"}));
  s_lim->add_option("--tolerance", lim.tolerance, "maximum allowed deviation");

  VerifyOpts ver;
  auto* s_ver = app.add_subcommand("verify", "randomized identity checks");
  add_common(s_ver, ver.common, false);
  s_ver->add_option("--seed", ver.seed, "RNG seed");
  s_ver->add_option("--samples", ver.samples, "number of random states");

  try {
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  } catch (ConfigError const& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (s_ccr->parsed()) return run_ccr(ccr, out);
    if (s_bell->parsed()) return run_bell(bell, out);
    if (s_regime->parsed()) return run_regime(regime, out);
    if (s_avg->parsed()) return run_average(avg, *s_avg, out);
    if (s_lim->parsed()) return run_limit(lim, out);
    if (s_ver->parsed()) return run_verify(ver, out);
  } catch (ConfigError const& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kConfigError;
}

}  // namespace qedccr::cli
