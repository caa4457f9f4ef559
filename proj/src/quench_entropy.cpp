#include "tempus/quench_entropy.hpp"

#include "tempus/error.hpp"
#include "tempus/parallel.hpp"

#include <cmath>
#include <string>

namespace tempus {

QuenchSetup::QuenchSetup(SpectralDecomposition spec, const QuantumState& psi0)
    : spec_(std::move(spec)) {
  if (spec_.dim() != psi0.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "initial state does not match the Hamiltonian");
  }
  c_ = spec_.to_eigenbasis(psi0.amplitudes());
  p_ = c_.cwiseAbs2();
  stats_ = energy_statistics(spec_.eigenvalues(), p_);
}

double diagonal_entropy(std::span<const double> p) {
  double total = 0.0;
  double entropy = 0.0;
  for (const double x : p) {
    if (!(x >= 0.0)) {
      throw Error(ErrorKind::NotAProbabilityVector, "negative or NaN probability " + std::to_string(x));
    }
    total += x;
    if (x > 0.0) entropy -= x * std::log(x);
  }
  if (p.empty() || !(std::abs(total - 1.0) <= 1e-10)) {
    throw Error(ErrorKind::NotAProbabilityVector, "probabilities sum to " + std::to_string(total));
  }
  return entropy;
}

double diagonal_entropy(const RealVector& p) {
  return diagonal_entropy(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
}

Complex averaging_kernel(double x) {
  // e^{-ix/2} sin(x/2) / (x/2); the series branch avoids 0/0 near x = 0.
  const double half = 0.5 * x;
  double sinc = 1.0;
  if (std::abs(half) < 1e-4) {
    const double h2 = half * half;
    sinc = 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
  } else {
    sinc = std::sin(half) / half;
  }
  return std::polar(sinc, -half);
}

DensityMatrix time_averaged_density_matrix(const QuenchSetup& setup, double t, Basis basis) {
  if (!(t > 0.0)) {
    throw Error(ErrorKind::NonPositiveTime, "time average needs t > 0, got " + std::to_string(t));
  }
  const ComplexVector& c = setup.amplitudes();
  const RealVector& eps = setup.energies();
  const Eigen::Index d = setup.dim();
  ComplexMatrix rho(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    rho(m, m) = setup.occupations()(m);
    for (Eigen::Index n = 0; n < m; ++n) {
      const Complex value = c(n) * std::conj(c(m)) * averaging_kernel((eps(n) - eps(m)) * t);
      rho(n, m) = value;
      rho(m, n) = std::conj(value);
    }
  }
  if (basis == Basis::Original) rho = setup.spectrum().to_original_basis(rho);
  return DensityMatrix(std::move(rho));
}

DensityMatrix initial_density_matrix(const QuenchSetup& setup, Basis basis) {
  const ComplexVector& c = setup.amplitudes();
  ComplexMatrix rho = c * c.adjoint();
  if (basis == Basis::Original) rho = setup.spectrum().to_original_basis(rho);
  return DensityMatrix(std::move(rho));
}

EntropyCurve entropy_curve(const QuenchSetup& setup, std::span<const double> times,
                           std::size_t workers) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0)) throw Error(ErrorKind::NonPositiveTime, "entropy curve times must be positive");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw Error(ErrorKind::OutOfRange, "entropy curve times must be strictly ascending");
    }
  }
  EntropyCurve curve;
  curve.times.assign(times.begin(), times.end());
  curve.entropies.resize(times.size());
  parallel_for(times.size(), workers, [&](std::size_t i) {
    curve.entropies[i] = von_neumann_entropy(time_averaged_density_matrix(setup, times[i]));
  });
  return curve;
}

LogFit log_growth_fit(const EntropyCurve& curve, double boltzmann_time, double t_lo, double t_hi) {
  if (!(boltzmann_time > 0.0) || !std::isfinite(boltzmann_time)) {
    throw Error(ErrorKind::ZeroWidth, "log-growth fit needs a finite positive Boltzmann time");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    const double t = curve.times[i];
    if (t >= t_lo && t <= t_hi) {
      xs.push_back(std::log(t / boltzmann_time));
      ys.push_back(curve.entropies[i]);
    }
  }
  if (xs.size() < 8) {
    throw Error(ErrorKind::InsufficientSamples,
                "fit window holds " + std::to_string(xs.size()) + " samples, need 8");
  }
  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw Error(ErrorKind::InsufficientSamples, "fit window has no spread in t");

  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw Error(ErrorKind::OutOfRange, "log grid needs 0 < lo <= hi");
  std::vector<double> out(count);
  if (count == 0) return out;
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(a + step * static_cast<double>(i));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_spaced(double lo, double hi, std::size_t count) {
  if (!(hi >= lo)) throw Error(ErrorKind::OutOfRange, "linear grid needs lo <= hi");
  std::vector<double> out(count);
  if (count == 0) return out;
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  // Weighted form keeps grids symmetric about zero exactly symmetric.
  const double span = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double w = static_cast<double>(i);
    out[i] = ((span - w) * lo + w * hi) / span;
  }
  return out;
}

}  // namespace tempus
