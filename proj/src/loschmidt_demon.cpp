#include "tempus/loschmidt_demon.hpp"

#include "tempus/error.hpp"
#include "tempus/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace tempus {

double echo_fidelity(const QuenchSetup& setup, double delta) {
  const RealVector& eps = setup.energies();
  const RealVector& p = setup.occupations();
  // Shifting by the mean energy only changes a global phase; it keeps the
  // arguments small so the small-delta expansion is resolved accurately.
  const double mean = setup.stats().mean;
  double re = 0.0;
  double im = 0.0;
  for (Eigen::Index n = 0; n < eps.size(); ++n) {
    const double phase = (eps(n) - mean) * delta;
    re += p(n) * std::cos(phase);
    im -= p(n) * std::sin(phase);
  }
  return re * re + im * im;
}

double echo_curvature(const QuenchSetup& setup) {
  if (setup.stats().zero_width) {
    throw Error(ErrorKind::ZeroWidth, "echo curvature is zero for an eigenstate");
  }
  const double width = setup.stats().width;
  return 2.0 * width * width;
}

EchoCurve echo_curve(const QuenchSetup& setup, std::span<const double> deltas,
                     std::size_t workers) {
  EchoCurve curve;
  curve.deltas.assign(deltas.begin(), deltas.end());
  curve.fidelities.resize(deltas.size());
  parallel_for(deltas.size(), workers,
               [&](std::size_t i) { curve.fidelities[i] = echo_fidelity(setup, deltas[i]); });
  return curve;
}

double half_width(const EchoCurve& curve) {
  const auto& x = curve.deltas;
  const auto& f = curve.fidelities;
  if (x.size() != f.size() || x.size() < 3) {
    throw Error(ErrorKind::NotBracketed, "echo curve needs at least three samples");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw Error(ErrorKind::NotBracketed, "echo curve deltas must ascend");
  }
  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
  if (!(f[peak] > 0.5)) throw Error(ErrorKind::NotBracketed, "echo peak does not exceed 1/2");

  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double t = (0.5 - f[inside]) / (f[outside] - f[inside]);
    return x[inside] + t * (x[outside] - x[inside]);
  };

  double right = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = peak + 1; i < x.size(); ++i) {
    if (f[i] <= 0.5) {
      right = crossing(i - 1, i);
      break;
    }
  }
  double left = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = peak; i-- > 0;) {
    if (f[i] <= 0.5) {
      left = crossing(i + 1, i);
      break;
    }
  }
  if (std::isnan(right) || std::isnan(left)) {
    throw Error(ErrorKind::NotBracketed, "echo curve does not cross 1/2 on both sides of its peak");
  }
  return std::min(std::abs(right), std::abs(left));
}

double timing_error(std::uint64_t seed, std::size_t sample, double tau_clock) {
  const auto s = static_cast<std::uint64_t>(sample);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  std::mt19937_64 gen(seq);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return tau_clock * (u - 0.5);
}

DemonLedger demon_experiment(const QuenchSetup& setup, double tau_clock, double t_run,
                             const DemonOptions& options) {
  if (!(t_run > 0.0) || options.samples < 1 ||
      !(options.perfect_clock ? tau_clock >= 0.0 : tau_clock > 0.0)) {
    throw Error(ErrorKind::NonPositiveInputs,
                "demon experiment needs t_run > 0, tau_clock > 0 and at least one sample");
  }
  const std::size_t count = options.samples;
  std::vector<double> deltas(count, 0.0);
  if (!options.perfect_clock) {
    for (std::size_t s = 0; s < count; ++s) deltas[s] = timing_error(options.seed, s, tau_clock);
  }
  std::vector<double> fidelities(count);
  parallel_for(count, options.workers,
               [&](std::size_t s) { fidelities[s] = echo_fidelity(setup, deltas[s]); });

  DemonLedger ledger;
  ledger.t_run = t_run;
  ledger.tau_clock = tau_clock;
  ledger.samples = count;

  double sum = 0.0;
  for (const double f : fidelities) sum += f;
  const double n = static_cast<double>(count);
  ledger.mean_recovered_fidelity = std::clamp(sum / n, 0.0, 1.0);
  if (count > 1) {
    double ss = 0.0;
    for (const double f : fidelities) ss += (f - sum / n) * (f - sum / n);
    ledger.fidelity_standard_error = std::sqrt(ss / (n - 1.0) / n);
  }

  ledger.system_entropy_at_reversal =
      von_neumann_entropy(time_averaged_density_matrix(setup, t_run));
  ledger.clock_record_entropy = options.perfect_clock
                                    ? std::numeric_limits<double>::infinity()
                                    : std::max(0.0, std::log(t_run / tau_clock));

  // Post-reversal state for sample s is exp(-i H delta_s)|psi0>. The mixture
  // A A^dagger and the Gram matrix A^dagger A share their nonzero spectrum,
  // so the smaller of the two is diagonalized.
  const ComplexVector& c = setup.amplitudes();
  const RealVector& eps = setup.energies();
  const Eigen::Index d = setup.dim();
  const auto cols = static_cast<Eigen::Index>(count);
  ComplexMatrix a(d, cols);
  const double weight = 1.0 / std::sqrt(n);
  for (Eigen::Index s = 0; s < cols; ++s) {
    const double delta = deltas[static_cast<std::size_t>(s)];
    for (Eigen::Index k = 0; k < d; ++k) {
      a(k, s) = weight * c(k) * std::polar(1.0, -eps(k) * delta);
    }
  }
  const ComplexMatrix mixture = cols <= d ? ComplexMatrix(a.adjoint() * a)
                                          : ComplexMatrix(a * a.adjoint());
  ledger.residual_entropy = von_neumann_entropy(DensityMatrix(mixture));
  return ledger;
}

}  // namespace tempus
