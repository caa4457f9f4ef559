#include "tempus/experiments.hpp"

#include "tempus/clock_model.hpp"
#include "tempus/error.hpp"
#include "tempus/loschmidt_demon.hpp"
#include "tempus/parallel.hpp"
#include "tempus/relativistic_bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace tempus {

namespace {

constexpr double kSolarMass = 1.989e30;  // kg

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolation, what);
}

bool uses_system(Subcommand s) {
  return s == Subcommand::Quench || s == Subcommand::Echo || s == Subcommand::Demon;
}

long system_dim(const RunConfig& c) {
  return c.ensemble == Ensemble::SpinChain ? (c.sites >= 0 && c.sites < 62 ? 1L << c.sites : -1)
                                           : c.dim;
}

ResultTable start_table(const RunConfig& config, std::vector<std::string> columns) {
  ResultTable table(std::move(columns));
  table.set_meta("schema_version", std::to_string(kSchemaVersion));
  table.set_meta("code_version", std::string(kCodeVersion));
  table.set_meta("subcommand", std::string(to_string(config.subcommand)));
  if (uses_system(config.subcommand)) {
    table.set_meta("ensemble", std::string(to_string(config.ensemble)));
    if (config.ensemble == Ensemble::SpinChain) {
      table.set_meta("sites", std::to_string(config.sites));
      table.set_meta("coupling", config.coupling);
      table.set_meta("transverse_field", config.transverse_field);
      table.set_meta("longitudinal_field", config.longitudinal_field);
    } else {
      table.set_meta("dim", std::to_string(config.dim));
      table.set_meta("seed", std::to_string(config.seed));
    }
    table.set_meta("initial_index", std::to_string(config.initial_index));
    table.set_meta("initial_state", config.eigenstate_initial ? "eigenstate" : "basis");
  }
  return table;
}

void add_energy_meta(ResultTable& table, const QuenchSetup& setup) {
  table.set_meta("energy_mean", setup.stats().mean);
  table.set_meta("energy_width", setup.stats().width);
  table.set_meta("tau_B", setup.stats().boltzmann_time);
  table.set_meta("zero_width", setup.stats().zero_width ? "1" : "0");
}

}  // namespace

Grid Grid::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) {
    throw Error(ErrorKind::InvalidConfig,
                "grid '" + std::string(text) + "' is not of the form min:max:count:scale");
  }
  Grid grid;
  try {
    grid.min = parse_number(parts[0]);
    grid.max = parse_number(parts[1]);
    const double count = parse_number(parts[2]);
    if (!(count >= 1.0) || count != std::floor(count) || count > 1e7) {
      throw Error(ErrorKind::InvalidConfig, "grid count must be a positive integer");
    }
    grid.count = static_cast<std::size_t>(count);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidConfig, "grid '" + std::string(text) + "': " + e.what());
  }
  if (parts[3] == "log") {
    grid.scale = GridScale::Log;
  } else if (parts[3] == "linear" || parts[3] == "lin") {
    grid.scale = GridScale::Linear;
  } else {
    throw Error(ErrorKind::InvalidConfig, "grid scale must be linear or log");
  }
  return grid;
}

std::string Grid::to_string() const {
  return format_number(min) + ":" + format_number(max) + ":" + std::to_string(count) + ":" +
         (scale == GridScale::Log ? "log" : "linear");
}

std::vector<double> Grid::values() const {
  return scale == GridScale::Log ? log_spaced(min, max, count) : linear_spaced(min, max, count);
}

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::Quench: return "quench";
    case Subcommand::Echo: return "echo";
    case Subcommand::Clock: return "clock";
    case Subcommand::Demon: return "demon";
    case Subcommand::Bounds: return "bounds";
  }
  return "unknown";
}

std::string_view to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Gue: return "gue";
    case Ensemble::Goe: return "goe";
    case Ensemble::SpinChain: return "spin-chain";
  }
  return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view text) noexcept {
  for (auto s : {Subcommand::Quench, Subcommand::Echo, Subcommand::Clock, Subcommand::Demon,
                 Subcommand::Bounds}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<Ensemble> parse_ensemble(std::string_view text) noexcept {
  for (auto e : {Ensemble::Gue, Ensemble::Goe, Ensemble::SpinChain}) {
    if (to_string(e) == text) return e;
  }
  return std::nullopt;
}

Grid effective_grid(const RunConfig& config) {
  if (config.grid) return *config.grid;
  switch (config.subcommand) {
    case Subcommand::Quench: return {0.1, 1e4, 61, GridScale::Log};
    case Subcommand::Echo: return {-3.0, 3.0, 121, GridScale::Linear};
    case Subcommand::Clock: {
      const auto n = static_cast<std::size_t>(std::max(config.clock_n, 0));
      return {0.0, static_cast<double>(n), 4 * n + 1, GridScale::Linear};
    }
    case Subcommand::Demon:
    case Subcommand::Bounds: break;
  }
  return {};
}

std::vector<std::string> validate(const RunConfig& c) {
  std::vector<std::string> problems;
  auto need = [&problems](bool ok, std::string message) {
    if (!ok) problems.push_back(std::move(message));
  };

  if (uses_system(c.subcommand)) {
    if (c.ensemble == Ensemble::SpinChain) {
      need(c.sites >= 2 && c.sites <= 14, "--sites must be in [2, 14]");
    } else {
      need(c.dim >= 2 && c.dim <= 16384, "--dim must be in [2, 16384]");
    }
    const long d = system_dim(c);
    need(c.initial_index >= 0 && (d < 0 || c.initial_index < d),
         "--initial must index a state of the system");
    need(std::isfinite(c.coupling) && std::isfinite(c.transverse_field) &&
             std::isfinite(c.longitudinal_field),
         "spin-chain couplings must be finite");
  }

  if (c.grid) {
    const Grid& g = *c.grid;
    need(std::isfinite(g.min) && std::isfinite(g.max) && g.max >= g.min,
         "grid needs finite min <= max");
    need(g.scale != GridScale::Log || g.min > 0.0, "log grid needs min > 0");
    need(c.subcommand != Subcommand::Quench || g.min > 0.0, "quench times must be positive");
    need(c.subcommand != Subcommand::Quench || g.count == 1 || g.max > g.min,
         "quench times must be strictly ascending");
    need(c.subcommand != Subcommand::Echo || g.count >= 3, "echo grid needs at least 3 points");
  }

  switch (c.subcommand) {
    case Subcommand::Quench:
      if (c.fit_window) {
        need(c.fit_window->first > 0.0 && c.fit_window->second > c.fit_window->first,
             "--fit needs 0 < lo < hi");
        need(c.fit_samples >= 8, "--fit-samples must be at least 8");
      }
      break;
    case Subcommand::Echo:
      break;
    case Subcommand::Clock:
      need(c.clock_n >= 2 && c.clock_n <= 4096, "--clock-n must be in [2, 4096]");
      need(c.clock_tau > 0.0 && std::isfinite(c.clock_tau), "--clock-tau must be positive");
      if (c.clock_t_run) {
        need(*c.clock_t_run > 0.0 && *c.clock_t_run <= c.clock_n,
             "--clock-t-run must be in (0, clock-n] ticks");
      }
      break;
    case Subcommand::Demon: {
      need(!c.demon_taus.empty(), "--taus must list at least one resolution");
      bool ok = true;
      for (std::size_t i = 0; i < c.demon_taus.size(); ++i) {
        ok = ok && c.demon_taus[i] >= 0.0 && std::isfinite(c.demon_taus[i]) &&
             (i == 0 || c.demon_taus[i] > c.demon_taus[i - 1]);
      }
      need(ok, "--taus must be non-negative and strictly ascending");
      need(c.demon_t_run > 0.0 && std::isfinite(c.demon_t_run), "--t-run must be positive");
      need(c.demon_samples >= 1, "--samples must be at least 1");
      break;
    }
    case Subcommand::Bounds:
      need(c.masses.min > 0.0 && c.masses.max >= c.masses.min && std::isfinite(c.masses.max),
           "--masses needs 0 < min <= max");
      break;
  }
  return problems;
}

void require_valid(const RunConfig& config) {
  const auto problems = validate(config);
  if (problems.empty()) return;
  std::string message = "invalid configuration:";
  for (const auto& p : problems) message += " " + p + ";";
  message.pop_back();
  throw Error(ErrorKind::InvalidConfig, message);
}

HermitianOperator build_hamiltonian(const RunConfig& config) {
  switch (config.ensemble) {
    case Ensemble::Gue: return build_gue(config.dim, config.seed);
    case Ensemble::Goe: return build_goe(config.dim, config.seed);
    case Ensemble::SpinChain:
      return build_spin_chain(config.sites, config.coupling, config.transverse_field,
                              config.longitudinal_field);
  }
  throw Error(ErrorKind::InvalidConfig, "unknown ensemble");
}

QuenchSetup build_setup(const RunConfig& config) {
  SpectralDecomposition spec = diagonalize(build_hamiltonian(config));
  const Eigen::Index k = config.initial_index;
  if (k < 0 || k >= spec.dim()) throw Error(ErrorKind::IndexOutOfRange, "initial index out of range");
  const QuantumState psi0 =
      config.eigenstate_initial
          ? QuantumState::normalized(spec.eigenvectors().col(k))
          : QuantumState::basis(spec.dim(), k);
  return QuenchSetup(std::move(spec), psi0);
}

ResultTable run_quench(const RunConfig& config) {
  require_valid(config);
  const QuenchSetup setup = build_setup(config);
  const Grid grid = effective_grid(config);
  const EnergyStatistics& stats = setup.stats();

  // Times are in units of tau_B unless the state is stationary.
  const double unit = stats.zero_width ? 1.0 : stats.boltzmann_time;
  std::vector<double> times = grid.values();
  for (double& t : times) t *= unit;

  const EntropyCurve curve = entropy_curve(setup, times, config.threads);
  const double s_diag = diagonal_entropy(setup.occupations());

  ResultTable table = start_table(config, {"t", "t_over_tauB", "S_dt", "S_diag", "bound_gap"});
  table.set_meta("times", grid.to_string());
  table.set_meta("time_unit", stats.zero_width ? "absolute" : "tau_B");
  add_energy_meta(table, setup);
  table.set_meta("S_diag", s_diag);

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double s = curve.entropies[i];
    check(s >= 0.0 && s <= s_diag + 1e-9, "S_d(t) left [0, S_diag] at t = " + format_number(times[i]));
    table.add_row({times[i], times[i] / stats.boltzmann_time, s, s_diag, s_diag - s});
  }

  if (config.fit_window) {
    if (stats.zero_width) throw Error(ErrorKind::ZeroWidth, "log-growth fit needs a nonzero energy width");
    const double lo = config.fit_window->first * stats.boltzmann_time;
    const double hi = config.fit_window->second * stats.boltzmann_time;
    const std::vector<double> fit_times = log_spaced(lo, hi, config.fit_samples);
    const LogFit fit =
        log_growth_fit(entropy_curve(setup, fit_times, config.threads), stats.boltzmann_time, lo, hi);
    table.set_meta("fit_window_tauB",
                   format_number(config.fit_window->first) + ":" + format_number(config.fit_window->second));
    table.set_meta("fit_samples", std::to_string(config.fit_samples));
    table.set_meta("fit_slope", fit.slope);
    table.set_meta("fit_intercept", fit.intercept);
    table.set_meta("fit_r2", fit.r_squared);
  }
  return table;
}

ResultTable run_echo(const RunConfig& config) {
  require_valid(config);
  const QuenchSetup setup = build_setup(config);
  if (setup.stats().zero_width) {
    throw Error(ErrorKind::ZeroWidth, "the echo of an eigenstate is identically 1");
  }
  const double tau_b = setup.stats().boltzmann_time;
  const Grid grid = effective_grid(config);
  std::vector<double> deltas = grid.values();
  for (double& d : deltas) d *= tau_b;

  const EchoCurve curve = echo_curve(setup, deltas, config.threads);

  ResultTable table = start_table(config, {"delta", "delta_over_tauB", "fidelity"});
  table.set_meta("deltas", grid.to_string());
  add_energy_meta(table, setup);
  table.set_meta("curvature", echo_curvature(setup));
  try {
    const double hw = half_width(curve);
    table.set_meta("half_width", hw);
    table.set_meta("half_width_over_tauB", hw / tau_b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotBracketed) throw;
    table.set_meta("half_width", "not_bracketed");
  }

  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double f = curve.fidelities[i];
    check(f >= 0.0 && f <= 1.0 + 1e-12, "echo fidelity outside [0, 1]");
    if (deltas[i] == 0.0) check(std::abs(f - 1.0) <= 1e-12, "echo fidelity at delta = 0 is not 1");
    table.add_row({deltas[i], deltas[i] / tau_b, f});
  }
  return table;
}

ResultTable run_clock(const RunConfig& config) {
  require_valid(config);
  const ClockSpec spec(config.clock_n, config.clock_tau);
  const Grid grid = effective_grid(config);

  std::vector<std::string> columns = {"t"};
  for (int m = 0; m < spec.n(); ++m) columns.push_back("q" + std::to_string(m));
  ResultTable table = start_table(config, std::move(columns));
  table.set_meta("clock_n", std::to_string(spec.n()));
  table.set_meta("clock_tau", spec.tau());
  table.set_meta("period", spec.period());
  table.set_meta("times_over_tau", grid.to_string());
  const double t_run = config.clock_t_run.value_or(static_cast<double>(spec.n())) * spec.tau();
  table.set_meta("t_run", t_run);
  table.set_meta("record_entropy", record_entropy(spec, t_run));

  const std::vector<double> ticks = grid.values();
  std::vector<std::vector<double>> rows(ticks.size());
  parallel_for(ticks.size(), config.threads, [&](std::size_t i) {
    const double t = ticks[i] * spec.tau();
    std::vector<double> q = readout_distribution(spec, clock_state(spec, t));
    rows[i].reserve(q.size() + 1);
    rows[i].push_back(t);
    rows[i].insert(rows[i].end(), q.begin(), q.end());
  });
  for (auto& row : rows) {
    double total = 0.0;
    for (std::size_t j = 1; j < row.size(); ++j) total += row[j];
    check(std::abs(total - 1.0) <= 1e-12, "clock readout probabilities do not sum to 1");
    table.add_row(std::move(row));
  }
  return table;
}

ResultTable run_demon(const RunConfig& config) {
  require_valid(config);
  const QuenchSetup setup = build_setup(config);
  if (setup.stats().zero_width) {
    throw Error(ErrorKind::ZeroWidth, "an eigenstate has no dynamics to reverse");
  }
  const double tau_b = setup.stats().boltzmann_time;
  const double t_run = config.demon_t_run * tau_b;

  ResultTable table = start_table(config, {"tau_over_tauB", "mean_fidelity", "fidelity_sem",
                                           "S_system", "S_record", "residual_entropy"});
  add_energy_meta(table, setup);
  table.set_meta("taus_over_tauB", join_numbers(config.demon_taus));
  table.set_meta("t_run_over_tauB", config.demon_t_run);
  table.set_meta("samples", std::to_string(config.demon_samples));
  table.set_meta("S_diag", diagonal_entropy(setup.occupations()));

  for (const double ratio : config.demon_taus) {
    DemonOptions options;
    options.samples = config.demon_samples;
    options.seed = config.seed;
    options.perfect_clock = ratio == 0.0;
    options.workers = config.threads;
    const DemonLedger ledger = demon_experiment(setup, ratio * tau_b, t_run, options);
    check(ledger.mean_recovered_fidelity >= 0.0 && ledger.mean_recovered_fidelity <= 1.0,
          "mean fidelity outside [0, 1]");
    check(ledger.system_entropy_at_reversal >= 0.0 && ledger.residual_entropy >= 0.0 &&
              ledger.clock_record_entropy >= 0.0,
          "negative entropy in the demon ledger");
    table.add_row({ratio, ledger.mean_recovered_fidelity, ledger.fidelity_standard_error,
                   ledger.system_entropy_at_reversal, ledger.clock_record_entropy,
                   ledger.residual_entropy});
  }
  return table;
}

ResultTable run_bounds(const RunConfig& config) {
  require_valid(config);
  std::vector<double> masses = config.masses.values();
  const double m_p = bounds::planck_mass();
  masses.push_back(m_p);
  masses.push_back(kSolarMass);
  std::sort(masses.begin(), masses.end());
  masses.erase(std::unique(masses.begin(), masses.end()), masses.end());

  ResultTable table = start_table(
      config, {"mass", "mass_over_planck", "schwarzschild_radius", "resolution",
               "resolution_over_planck_time", "hawking_temperature", "hawking_temperature_literal",
               "entropy_exact", "ticks_order_of_magnitude", "mass_bound_ticks",
               "consistency_ratio", "thermodynamic_ticks", "evaporation_time"});
  table.set_meta("masses", config.masses.to_string());
  table.set_meta("extra_masses", "planck," + format_number(kSolarMass));
  table.set_meta("c", bounds::PhysicalConstants::c);
  table.set_meta("G", bounds::PhysicalConstants::G);
  table.set_meta("hbar", bounds::PhysicalConstants::hbar);
  table.set_meta("k_B", bounds::PhysicalConstants::k_B);
  table.set_meta("planck_mass", m_p);
  table.set_meta("planck_time", bounds::planck_time());
  table.set_meta("units", "SI (kg, m, s, K); ticks and entropies dimensionless");

  const double t_p = bounds::planck_time();
  for (const double m : masses) {
    const bounds::BlackHoleClock bh = bounds::black_hole_clock(m);
    const bounds::BoundConsistency bridge = bounds::bound_consistency(m);
    const double c2 = bounds::PhysicalConstants::c * bounds::PhysicalConstants::c;
    const double thermo = bounds::thermodynamic_tick_bound(m * c2, bh.hawking_temperature);
    check(std::abs(bridge.ratio - 2.0) <= 2e-12, "mass-bound bridge ratio is not 2");
    std::vector<double> row = {m,
                               m / m_p,
                               bh.schwarzschild_radius,
                               bh.resolution,
                               bh.resolution / t_p,
                               bh.hawking_temperature,
                               bh.hawking_temperature_literal,
                               bh.entropy_exact,
                               bh.ticks_order_of_magnitude,
                               bridge.mass_bound_ticks,
                               bridge.ratio,
                               thermo,
                               bounds::evaporation_time(m)};
    for (const double v : row) check(std::isfinite(v) && v > 0.0, "non-finite bound output");
    table.add_row(std::move(row));
  }
  return table;
}

ResultTable run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  switch (config.subcommand) {
    case Subcommand::Quench: table = run_quench(config); break;
    case Subcommand::Echo: table = run_echo(config); break;
    case Subcommand::Clock: table = run_clock(config); break;
    case Subcommand::Demon: table = run_demon(config); break;
    case Subcommand::Bounds: table = run_bounds(config); break;
  }
  if (config.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    table.set_meta("wall_clock_seconds", elapsed.count());
  }
  return table;
}

}  // namespace tempus
