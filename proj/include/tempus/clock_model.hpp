#pragma once

// The n-level Salecker-Wigner clock. Energy levels k = 1..n are stored at
// vector index k - 1. The phases advance as exp(-i 2 pi k t / (n tau)), so
// the clock has period n tau and passes through n orthogonal pointer states,
// one every tau.

#include "tempus/quantum_core.hpp"

#include <vector>

namespace tempus {

class ClockSpec {
 public:
  /// Throws OutOfRange unless n >= 2 and tau > 0.
  ClockSpec(int n, double tau);

  int n() const noexcept { return n_; }
  double tau() const noexcept { return tau_; }
  double period() const noexcept { return period_; }

 private:
  int n_;
  double tau_;
  double period_;
};

/// A clock wave function in the energy basis; norm 1 within 1e-12.
class ClockState {
 public:
  explicit ClockState(ComplexVector amplitudes);

  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// (1/sqrt n) sum_k exp(-i 2 pi k t / period) |k>
ClockState clock_state(const ClockSpec& spec, double t);

/// (1/sqrt n) sum_k exp(-i 2 pi k m / n) |k>, for 0 <= m < n.
ClockState pointer_state(const ClockSpec& spec, int m);

/// q_m = |<pointer m|state>|^2 for every pointer outcome m.
std::vector<double> readout_distribution(const ClockSpec& spec, const ClockState& state);

/// ln(round(t_run / tau)): Shannon entropy of a uniform record over the
/// ticks the clock passed. Requires 0 < t_run <= period.
double record_entropy(const ClockSpec& spec, double t_run);

/// |<C(t)|C(t + delta)>|^2, independent of t.
double autocorrelation(const ClockSpec& spec, double delta);

}  // namespace tempus
