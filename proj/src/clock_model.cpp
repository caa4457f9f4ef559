#include "tempus/clock_model.hpp"

#include "tempus/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tempus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Phase of level k at a fractional tick position; reduced modulo one turn so
// that large t keeps full precision.
Complex level_phase(int k, double ticks, int n) {
  const double turns = std::fmod(static_cast<double>(k) * ticks, static_cast<double>(n));
  return std::polar(1.0, -kTwoPi * turns / static_cast<double>(n));
}

}  // namespace

ClockSpec::ClockSpec(int n, double tau) : n_(n), tau_(tau), period_(static_cast<double>(n) * tau) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "clock needs n >= 2, got " + std::to_string(n));
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorKind::OutOfRange, "clock resolution must be positive");
  }
}

ClockState::ClockState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (!(std::abs(amplitudes_.norm() - 1.0) <= 1e-12)) {
    throw Error(ErrorKind::NotNormalized, "clock state is not normalized");
  }
}

ClockState clock_state(const ClockSpec& spec, double t) {
  const int n = spec.n();
  const double ticks = t / spec.tau();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector v(n);
  for (int k = 1; k <= n; ++k) v(k - 1) = amp * level_phase(k, ticks, n);
  return ClockState(std::move(v));
}

ClockState pointer_state(const ClockSpec& spec, int m) {
  const int n = spec.n();
  if (m < 0 || m >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "pointer index " + std::to_string(m) + " outside [0, " + std::to_string(n) + ")");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector v(n);
  for (int k = 1; k <= n; ++k) {
    // k m mod n is exact in integers
    const long long turns = (static_cast<long long>(k) * m) % n;
    v(k - 1) = amp * std::polar(1.0, -kTwoPi * static_cast<double>(turns) / n);
  }
  return ClockState(std::move(v));
}

std::vector<double> readout_distribution(const ClockSpec& spec, const ClockState& state) {
  const int n = spec.n();
  if (state.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "clock state dimension does not match the clock");
  }
  // <pointer m|psi> = (1/sqrt n) sum_k exp(+i 2 pi k m / n) psi_k
  std::vector<Complex> twiddle(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    twiddle[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * j / n);
  }
  const ComplexVector& a = state.amplitudes();
  const double nn = static_cast<double>(n);
  std::vector<double> q(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    Complex overlap = 0.0;
    long long index = m % n;
    for (int k = 1; k <= n; ++k) {
      overlap += twiddle[static_cast<std::size_t>(index)] * a(k - 1);
      index += m;
      if (index >= n) index -= n;
    }
    q[static_cast<std::size_t>(m)] = std::norm(overlap) / nn;
  }
  return q;
}

double record_entropy(const ClockSpec& spec, double t_run) {
  if (!(t_run > 0.0)) throw Error(ErrorKind::OutOfRange, "run time must be positive");
  if (t_run > spec.period() * (1.0 + 1e-12)) {
    throw Error(ErrorKind::OutOfRange, "run time exceeds one clock period; the record would wrap");
  }
  const double ticks = std::max(1.0, std::round(t_run / spec.tau()));
  return std::log(ticks);
}

double autocorrelation(const ClockSpec& spec, double delta) {
  const int n = spec.n();
  const double ticks = delta / spec.tau();
  Complex sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += level_phase(k, ticks, n);
  const double nn = static_cast<double>(n);
  return std::min(1.0, std::norm(sum) / (nn * nn));
}

}  // namespace tempus
