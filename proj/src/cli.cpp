#include "tempus/cli.hpp"

#include "tempus/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>

namespace tempus {

namespace {

struct RawOptions {
  RunConfig config;
  std::string ensemble = "gue";
  std::string times;
  std::string deltas;
  std::string fit;
  std::string taus;
  std::string masses;
  std::string format = "csv";
  double clock_t_run = 0.0;
};

void configure(CLI::App& app, RawOptions& raw) {
  RunConfig& c = raw.config;
  app.description(
      "Quench entropy, Loschmidt echo, quantum clock and tick-bound experiments.\n"
      "Results are CSV (default) or JSON tables with a metadata header.");
  app.set_config("--config", "", "Read options from a key=value file; flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_subcommand("quench", "Entropy of the time-averaged state after a quench");
  app.add_subcommand("echo", "Loschmidt echo fidelity versus timing error");
  app.add_subcommand("clock", "Pointer-state readout of the n-level clock");
  app.add_subcommand("demon", "Reversal ledger for clocks of varying resolution");
  app.add_subcommand("bounds", "Relativistic and thermodynamic tick bounds (SI units)");

  app.add_option("--ensemble", raw.ensemble, "gue, goe or spin-chain")->capture_default_str();
  app.add_option("--dim", c.dim, "Matrix dimension for gue/goe")->capture_default_str();
  app.add_option("--sites", c.sites, "Spin-chain length L (dimension 2^L)")->capture_default_str();
  app.add_option("--coupling", c.coupling, "Spin-chain ZZ coupling J")->capture_default_str();
  app.add_option("--transverse-field", c.transverse_field, "Spin-chain field g along x")
      ->capture_default_str();
  app.add_option("--longitudinal-field", c.longitudinal_field, "Spin-chain field h along z")
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--initial", c.initial_index, "Index of the initial basis state")
      ->capture_default_str();
  app.add_flag("--eigenstate", c.eigenstate_initial,
               "Start in eigenstate --initial instead of a basis state");
  app.add_option("--times", raw.times,
                 "min:max:count:scale; quench in units of tau_B, clock in units of tau");
  app.add_option("--deltas", raw.deltas, "Echo offsets min:max:count:scale in units of tau_B");
  app.add_option("--fit", raw.fit, "Quench log-growth fit window lo:hi in units of tau_B");
  app.add_option("--fit-samples", c.fit_samples, "Log-spaced samples in the fit window")
      ->capture_default_str();
  app.add_option("--clock-n", c.clock_n, "Clock dimension n")->capture_default_str();
  app.add_option("--clock-tau", c.clock_tau, "Clock resolution tau")->capture_default_str();
  app.add_option("--clock-t-run", raw.clock_t_run, "Clock run time in ticks (default: n)");
  app.add_option("--taus", raw.taus, "Demon clock resolutions in units of tau_B, comma separated");
  app.add_option("--t-run", c.demon_t_run, "Demon run time in units of tau_B")
      ->capture_default_str();
  app.add_option("--samples", c.demon_samples, "Monte-Carlo samples per clock resolution")
      ->capture_default_str();
  app.add_option("--masses", raw.masses, "Mass sweep min:max:count:scale in kg");
  app.add_option("--format", raw.format, "csv or json")->capture_default_str();
  app.add_option("--out", c.out_path, "Output path (default: stdout)");
  app.add_option("--threads", c.threads, "Worker threads; 0 uses TEMPUS_THREADS or all cores")
      ->capture_default_str();
  app.add_flag("--timing", c.timing, "Record wall-clock time in the metadata");
}

RunConfig finish(const CLI::App& app, RawOptions& raw) {
  RunConfig c = raw.config;
  std::vector<std::string> problems;

  for (const auto* sub : app.get_subcommands()) {
    if (auto s = parse_subcommand(sub->get_name())) c.subcommand = *s;
  }
  if (auto e = parse_ensemble(raw.ensemble)) {
    c.ensemble = *e;
  } else {
    problems.push_back("--ensemble must be gue, goe or spin-chain");
  }

  auto grid_option = [&problems](const std::string& text) -> std::optional<Grid> {
    if (text.empty()) return std::nullopt;
    try {
      return Grid::parse(text);
    } catch (const Error& e) {
      problems.emplace_back(e.what());
      return std::nullopt;
    }
  };
  if (!raw.times.empty() && !raw.deltas.empty()) {
    problems.push_back("--times and --deltas are mutually exclusive");
  }
  if (auto g = grid_option(raw.times)) c.grid = g;
  if (auto g = grid_option(raw.deltas)) c.grid = g;
  if (auto g = grid_option(raw.masses)) c.masses = *g;

  if (!raw.fit.empty()) {
    const auto colon = raw.fit.find(':');
    try {
      if (colon == std::string::npos) throw Error(ErrorKind::InvalidConfig, "");
      c.fit_window = std::pair{parse_number(std::string_view(raw.fit).substr(0, colon)),
                               parse_number(std::string_view(raw.fit).substr(colon + 1))};
    } catch (const Error&) {
      problems.push_back("--fit must be lo:hi");
    }
  }
  if (app.count("--clock-t-run") > 0) c.clock_t_run = raw.clock_t_run;

  if (!raw.taus.empty()) {
    c.demon_taus.clear();
    std::string_view rest = raw.taus;
    try {
      while (true) {
        const auto comma = rest.find(',');
        c.demon_taus.push_back(parse_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } catch (const Error&) {
      problems.push_back("--taus must be a comma-separated list of numbers");
    }
  }

  if (raw.format == "csv") {
    c.format = OutputFormat::Csv;
  } else if (raw.format == "json") {
    c.format = OutputFormat::Json;
  } else {
    problems.push_back("--format must be csv or json");
  }

  for (auto& p : validate(c)) problems.push_back(std::move(p));
  if (!problems.empty()) {
    std::string message = "invalid configuration:";
    for (const auto& p : problems) message += " " + p + ";";
    message.pop_back();
    throw Error(ErrorKind::InvalidConfig, message);
  }
  return c;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfig: return 2;
    case ErrorKind::InvariantViolation: return 4;
    case ErrorKind::Io: return 5;
    default: return 3;
  }
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"tempus"};
  RawOptions raw;
  configure(app, raw);
  app.parse(argc, argv);
  return finish(app, raw);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tempus"};
  RawOptions raw;
  configure(app, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "tempus: error [" << to_string(ErrorKind::InvalidConfig) << "]: " << e.what() << '\n';
    return exit_code(ErrorKind::InvalidConfig);
  }

  try {
    const RunConfig config = finish(app, raw);
    const std::string text = run(config).render(config.format);
    if (config.out_path.empty()) {
      out << text;
      out.flush();
    } else {
      std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
      file << text;
      file.close();
      if (!file) throw Error(ErrorKind::Io, "could not write " + config.out_path);
    }
    return 0;
  } catch (const Error& e) {
    err << "tempus: error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "tempus: error [" << to_string(ErrorKind::InvariantViolation) << "]: " << e.what()
        << '\n';
    return exit_code(ErrorKind::InvariantViolation);
  }
}

}  // namespace tempus
