#pragma once

#include "tempus/quench_entropy.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tempus {

struct EchoCurve {
  std::vector<double> deltas;
  std::vector<double> fidelities;
};

/// Outcome of one reversal attempt with an imperfect clock.
struct DemonLedger {
  double t_run = 0.0;
  double tau_clock = 0.0;
  /// S_d(t_run) of the time-averaged state.
  double system_entropy_at_reversal = 0.0;
  /// max(0, ln(t_run / tau_clock)); +infinity for a perfect clock.
  double clock_record_entropy = 0.0;
  double mean_recovered_fidelity = 0.0;
  /// Standard error of the mean fidelity over the samples.
  double fidelity_standard_error = 0.0;
  /// Entropy of the sample average of the post-reversal states.
  double residual_entropy = 0.0;
  std::size_t samples = 0;
};

struct DemonOptions {
  std::size_t samples = 256;
  std::uint64_t seed = 0;
  /// Forces every timing error to zero (the tau_clock -> 0 limit).
  bool perfect_clock = false;
  std::size_t workers = 0;
};

/// F(delta) = |sum_n p_n exp(-i eps_n delta)|^2: fidelity with the initial
/// state after evolving forward for t and backward for t - delta.
double echo_fidelity(const QuenchSetup& setup, double delta);

/// -F''(0) = 2 dE^2. Throws ZeroWidth for an eigenstate.
double echo_curvature(const QuenchSetup& setup);

EchoCurve echo_curve(const QuenchSetup& setup, std::span<const double> deltas,
                     std::size_t workers = 0);

/// Smallest |delta| at which the fidelity first drops through 1/2 on either
/// side of the peak, by linear interpolation. Throws NotBracketed if the
/// curve does not cross 1/2 on both sides.
double half_width(const EchoCurve& curve);

/// Timing offset for one sample, uniform on [-tau/2, tau/2), from a
/// generator derived from (seed, sample).
double timing_error(std::uint64_t seed, std::size_t sample, double tau_clock);

DemonLedger demon_experiment(const QuenchSetup& setup, double tau_clock, double t_run,
                             const DemonOptions& options = {});

}  // namespace tempus
