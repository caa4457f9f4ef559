#pragma once

// Experiment drivers behind the command-line subcommands. Each run_* function
// validates its config, computes, checks the invariants of its outputs and
// returns a ResultTable whose bytes depend only on the config.

#include "tempus/quench_entropy.hpp"
#include "tempus/result_table.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tempus {

inline constexpr std::string_view kCodeVersion = "tempus 1.0.0";

enum class Subcommand { Quench, Echo, Clock, Demon, Bounds };
enum class Ensemble { Gue, Goe, SpinChain };
enum class GridScale { Linear, Log };

/// min:max:count:scale
struct Grid {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  GridScale scale = GridScale::Linear;

  /// Throws InvalidConfig on malformed text.
  static Grid parse(std::string_view text);
  std::string to_string() const;
  std::vector<double> values() const;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Quench;

  Ensemble ensemble = Ensemble::Gue;
  long dim = 64;
  int sites = 8;
  double coupling = 1.0;
  double transverse_field = 0.9045;
  double longitudinal_field = 0.809;
  std::uint64_t seed = 1;
  /// Original-basis index of the initial state, or eigenvector index when
  /// eigenstate_initial is set.
  long initial_index = 0;
  bool eigenstate_initial = false;

  /// quench: t / tau_B; echo: delta / tau_B; clock: t / tau.
  std::optional<Grid> grid;
  /// quench: fit window in units of tau_B.
  std::optional<std::pair<double, double>> fit_window;
  std::size_t fit_samples = 32;

  int clock_n = 8;
  double clock_tau = 1.0;
  /// Clock run time in units of tau; defaults to one full period.
  std::optional<double> clock_t_run;

  /// Clock resolutions in units of tau_B; 0 selects a perfect clock.
  std::vector<double> demon_taus = {0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  double demon_t_run = 50.0;
  std::size_t demon_samples = 256;

  Grid masses = {1e-10, 1e40, 51, GridScale::Log};

  OutputFormat format = OutputFormat::Csv;
  std::string out_path;
  std::size_t threads = 0;
  /// Adds wall-clock time to the metadata, which breaks byte reproducibility.
  bool timing = false;
};

std::string_view to_string(Subcommand s) noexcept;
std::string_view to_string(Ensemble e) noexcept;
std::optional<Subcommand> parse_subcommand(std::string_view text) noexcept;
std::optional<Ensemble> parse_ensemble(std::string_view text) noexcept;

/// Every problem with the config, empty when valid.
std::vector<std::string> validate(const RunConfig& config);
/// Throws a single InvalidConfig error listing every problem.
void require_valid(const RunConfig& config);

/// The grid the subcommand will use, with per-subcommand defaults applied.
Grid effective_grid(const RunConfig& config);

HermitianOperator build_hamiltonian(const RunConfig& config);
QuenchSetup build_setup(const RunConfig& config);

ResultTable run_quench(const RunConfig& config);
ResultTable run_echo(const RunConfig& config);
ResultTable run_clock(const RunConfig& config);
ResultTable run_demon(const RunConfig& config);
ResultTable run_bounds(const RunConfig& config);
ResultTable run(const RunConfig& config);

}  // namespace tempus
