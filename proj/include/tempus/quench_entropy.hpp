#pragma once

#include "tempus/quantum_core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tempus {

/// A prepared state expressed in the eigenbasis of its Hamiltonian.
class QuenchSetup {
 public:
  QuenchSetup(SpectralDecomposition spec, const QuantumState& psi0);

  const SpectralDecomposition& spectrum() const noexcept { return spec_; }
  const RealVector& energies() const noexcept { return spec_.eigenvalues(); }
  Eigen::Index dim() const noexcept { return spec_.dim(); }
  /// c_n = <n|psi0>
  const ComplexVector& amplitudes() const noexcept { return c_; }
  /// p_n = |c_n|^2
  const RealVector& occupations() const noexcept { return p_; }
  const EnergyStatistics& stats() const noexcept { return stats_; }

 private:
  SpectralDecomposition spec_;
  ComplexVector c_;
  RealVector p_;
  EnergyStatistics stats_;
};

enum class Basis { Energy, Original };

struct EntropyCurve {
  std::vector<double> times;
  std::vector<double> entropies;
};

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// -sum p ln p with 0 ln 0 = 0. Throws NotAProbabilityVector if an entry is
/// negative or the sum is off by more than 1e-10.
double diagonal_entropy(std::span<const double> p);
double diagonal_entropy(const RealVector& p);

/// Time-averaging kernel K(x) = (1 - e^{-ix}) / (ix), K(0) = 1.
Complex averaging_kernel(double x);

/// (1/t) integral_0^t rho(t') dt' for t > 0, evaluated in closed form as
/// c_n conj(c_m) K((eps_n - eps_m) t). Throws NonPositiveTime for t <= 0.
DensityMatrix time_averaged_density_matrix(const QuenchSetup& setup, double t,
                                           Basis basis = Basis::Energy);

/// The t -> 0+ limit of the time average: the initial projector.
DensityMatrix initial_density_matrix(const QuenchSetup& setup, Basis basis = Basis::Energy);

/// von Neumann entropy of the time-averaged state at each time.
/// `times` must be positive and ascending.
EntropyCurve entropy_curve(const QuenchSetup& setup, std::span<const double> times,
                           std::size_t workers = 0);

/// Least-squares fit of S against ln(t / tau_B) over samples with
/// t_lo <= t <= t_hi. Needs at least 8 samples in the window.
LogFit log_growth_fit(const EntropyCurve& curve, double boltzmann_time, double t_lo, double t_hi);

/// `count` points between lo and hi (inclusive), log or linearly spaced.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
std::vector<double> linear_spaced(double lo, double hi, std::size_t count);

}  // namespace tempus
