#include "doctest.h"

#include "oracles.hpp"
#include "tempus/error.hpp"
#include "tempus/quench_entropy.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace tempus;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a tempus::Error");
  return ErrorKind::Io;
}

QuenchSetup two_level(double omega) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(1, 1) = omega;
  ComplexVector v(2);
  v << 1.0, 1.0;
  return QuenchSetup(diagonalize(HermitianOperator(h)), QuantumState::normalized(v));
}

QuenchSetup gue_quench(Eigen::Index dim, std::uint64_t seed) {
  return QuenchSetup(diagonalize(build_gue(dim, seed)), QuantumState::basis(dim, 0));
}

double max_off_diagonal(const ComplexMatrix& m) {
  ComplexMatrix off = m;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("diagonal entropy") {
  const std::vector<double> indicator = {0.0, 1.0, 0.0};
  CHECK(diagonal_entropy(indicator) == 0.0);
  const std::vector<double> uniform(7, 1.0 / 7.0);
  CHECK(diagonal_entropy(uniform) == doctest::Approx(std::log(7.0)));
  const std::vector<double> p = {0.5, 0.25, 0.25};
  CHECK(diagonal_entropy(p) == doctest::Approx(1.0397).epsilon(1e-4));

  const std::vector<double> negative = {1.2, -0.2};
  CHECK(kind_of([&] { diagonal_entropy(negative); }) == ErrorKind::NotAProbabilityVector);
  const std::vector<double> short_sum = {0.5, 0.4};
  CHECK(kind_of([&] { diagonal_entropy(short_sum); }) == ErrorKind::NotAProbabilityVector);
}

TEST_CASE("averaging kernel") {
  CHECK(averaging_kernel(0.0) == Complex(1.0, 0.0));
  CHECK(std::abs(averaging_kernel(2.0 * std::numbers::pi)) <= 1e-16);
  // series branch and the sinc form agree across the switch-over
  for (double x : {1e-9, 1e-5, 1.9e-4, 2.1e-4, 0.3, 7.0, -4.0}) {
    const Complex sinc_form = std::polar(1.0, -0.5 * x) * (std::sin(0.5 * x) / (0.5 * x));
    CHECK(std::abs(averaging_kernel(x) - sinc_form) <= 1e-15);
  }
}

TEST_CASE("time-averaged density matrix: closed form") {
  SUBCASE("t -> 0+ is the initial projector") {
    const auto setup = gue_quench(16, 4);
    const DensityMatrix rho0 = initial_density_matrix(setup);
    const ComplexVector& c = setup.amplitudes();
    CHECK((rho0.entries() - c * c.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    const DensityMatrix tiny = time_averaged_density_matrix(setup, 1e-9);
    CHECK((tiny.entries() - rho0.entries()).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(von_neumann_entropy(rho0) == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("full period of a two-level system dephases completely") {
    const double omega = 1.3;
    const auto setup = two_level(omega);
    const DensityMatrix rho = time_averaged_density_matrix(setup, 2.0 * std::numbers::pi / omega);
    CHECK(std::abs(rho.entries()(0, 1)) <= 1e-15);
    CHECK(rho.entries()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rho.entries()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("non-positive time is rejected") {
    const auto setup = two_level(1.0);
    CHECK(kind_of([&] { time_averaged_density_matrix(setup, 0.0); }) == ErrorKind::NonPositiveTime);
    CHECK(kind_of([&] { time_averaged_density_matrix(setup, -1.0); }) == ErrorKind::NonPositiveTime);
  }
  SUBCASE("degenerate levels keep their coherence") {
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    h(2, 2) = 1.0;
    ComplexVector v(3);
    v << 1.0, 1.0, 1.0;
    const QuenchSetup setup(diagonalize(HermitianOperator(h)), QuantumState::normalized(v));
    const DensityMatrix rho = time_averaged_density_matrix(setup, 1e6);
    CHECK(std::abs(rho.entries()(0, 1)) == doctest::Approx(std::abs(setup.amplitudes()(0) *
                                                                    setup.amplitudes()(1))));
  }
}

TEST_CASE("time-averaged density matrix matches trapezoidal quadrature (GUE 64 seed 11, t = 3)") {
  const auto h = build_gue(64, 11);
  const QuenchSetup setup(diagonalize(h), QuantumState::basis(64, 0));
  const DensityMatrix closed = time_averaged_density_matrix(setup, 3.0, Basis::Original);
  const ComplexMatrix quad =
      oracle::trapezoid_time_average(h.entries(), QuantumState::basis(64, 0).amplitudes(), 3.0, 20000);
  CHECK((closed.entries() - quad).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("property: diagonal pinning, PSD and the diagonal-entropy bound") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> log_t(std::log(0.05), std::log(1e5));
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = trial % 2 ? 24 : 40;
    const QuenchSetup setup(diagonalize(build_gue(d, 500 + trial)),
                            QuantumState(oracle::random_state(d, rng)));
    const double t = std::exp(log_t(rng)) * setup.stats().boltzmann_time;
    const DensityMatrix rho = time_averaged_density_matrix(setup, t);
    const RealVector diag = rho.entries().diagonal().real();
    CHECK((diag - setup.occupations()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(rho.eigenvalues().minCoeff() >= -1e-10);
    CHECK(von_neumann_entropy(rho) <= diagonal_entropy(setup.occupations()) + 1e-9);
  }
}

TEST_CASE("property: coherences decay inside the 2 / (|omega| t) envelope") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto setup = gue_quench(64, seed);
    const double tau_b = setup.stats().boltzmann_time;
    const ComplexVector& c = setup.amplitudes();
    const RealVector& e = setup.energies();
    double previous = 0.0;
    for (double factor : {1e3, 1e4}) {
      const double t = factor * tau_b;
      const ComplexMatrix rho = time_averaged_density_matrix(setup, t).entries();
      for (Eigen::Index n = 0; n < 64; ++n) {
        for (Eigen::Index m = 0; m < n; ++m) {
          const double envelope = 2.0 * std::abs(c(n) * c(m)) / (std::abs(e(n) - e(m)) * t);
          CHECK(std::abs(rho(n, m)) <= envelope * (1.0 + 1e-9));
        }
      }
      const double current = max_off_diagonal(rho);
      if (previous > 0.0) CHECK(current < 10.0 * previous);
      previous = current;
    }
  }
}

TEST_CASE("entropy curve") {
  SUBCASE("eigenstate stays at zero entropy") {
    const auto spec = diagonalize(build_gue(32, 6));
    const QuenchSetup setup(spec, QuantumState::normalized(spec.eigenvectors().col(7)));
    const auto times = log_spaced(0.1, 1e4, 12);
    for (double s : entropy_curve(setup, times).entropies) CHECK(s == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("two-level full period reaches the diagonal entropy") {
    const double omega = 0.8;
    const auto setup = two_level(omega);
    const std::vector<double> times = {2.0 * std::numbers::pi / omega};
    CHECK(entropy_curve(setup, times).entropies[0] ==
          doctest::Approx(diagonal_entropy(setup.occupations())).epsilon(1e-12));
  }
  SUBCASE("results do not depend on the worker count") {
    const auto setup = gue_quench(48, 12);
    const auto times = log_spaced(0.1, 100.0, 17);
    CHECK(entropy_curve(setup, times, 1).entropies == entropy_curve(setup, times, 4).entropies);
  }
  SUBCASE("times must be positive and ascending") {
    const auto setup = two_level(1.0);
    const std::vector<double> bad_order = {2.0, 1.0};
    const std::vector<double> zero = {0.0, 1.0};
    CHECK(kind_of([&] { entropy_curve(setup, bad_order); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([&] { entropy_curve(setup, zero); }) == ErrorKind::NonPositiveTime);
  }
}

TEST_CASE("log growth fit") {
  const double tau_b = 0.37;
  const auto times = log_spaced(5 * tau_b, 50 * tau_b, 32);
  SUBCASE("recovers an exact logarithm") {
    EntropyCurve curve{times, {}};
    for (double t : times) curve.entropies.push_back(std::log(t / tau_b));
    const LogFit fit = log_growth_fit(curve, tau_b, 5 * tau_b, 50 * tau_b);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(fit.intercept) <= 1e-9);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("constant curve has zero slope") {
    EntropyCurve curve{times, std::vector<double>(times.size(), 2.5)};
    const LogFit fit = log_growth_fit(curve, tau_b, 5 * tau_b, 50 * tau_b);
    CHECK(std::abs(fit.slope) <= 1e-12);
    CHECK(fit.intercept == doctest::Approx(2.5));
  }
  SUBCASE("too few samples in the window") {
    EntropyCurve curve{times, std::vector<double>(times.size(), 1.0)};
    CHECK(kind_of([&] { log_growth_fit(curve, tau_b, 5 * tau_b, 6 * tau_b); }) ==
          ErrorKind::InsufficientSamples);
  }
  SUBCASE("GUE 512 seed 4 grows logarithmically between 5 and 50 tau_B") {
    const auto setup = gue_quench(512, 4);
    const double tb = setup.stats().boltzmann_time;
    const auto fit_times = log_spaced(5 * tb, 50 * tb, 32);
    const LogFit fit = log_growth_fit(entropy_curve(setup, fit_times), tb, 5 * tb, 50 * tb);
    CHECK(fit.slope >= 0.5);
    CHECK(fit.slope <= 1.5);
    CHECK(fit.r_squared > 0.9);
  }
}

TEST_CASE("long-time saturation (GUE 256 seed 2)") {
  const auto setup = gue_quench(256, 2);
  const double s_diag = diagonal_entropy(setup.occupations());
  const std::vector<double> times = {1e4 * setup.stats().boltzmann_time};
  const double s = entropy_curve(setup, times).entropies[0];
  CHECK(s <= s_diag + 1e-9);
  CHECK(std::abs(s - s_diag) <= 0.05 * s_diag);
}

TEST_CASE("grids") {
  const auto lin = linear_spaced(-3.0, 3.0, 121);
  CHECK(lin[60] == 0.0);
  for (std::size_t i = 0; i < lin.size(); ++i) CHECK(lin[i] == -lin[120 - i]);
  const auto lg = log_spaced(1.0, 1e4, 5);
  CHECK(lg.front() == 1.0);
  CHECK(lg.back() == 1e4);
  CHECK(lg[2] == doctest::Approx(100.0));
}
