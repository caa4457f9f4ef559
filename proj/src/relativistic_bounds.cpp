#include "tempus/relativistic_bounds.hpp"

#include "tempus/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tempus::bounds {

namespace {

using K = PhysicalConstants;
constexpr double kPi = std::numbers::pi;

void require_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw Error(ErrorKind::NonPositiveMass, "mass must be positive and finite");
  }
}

double require_positive(const std::optional<double>& value, const char* name) {
  if (!value) throw Error(ErrorKind::MissingField, std::string("clock budget lacks ") + name);
  if (!(*value > 0.0)) {
    throw Error(ErrorKind::NonPositiveInputs, std::string(name) + " must be positive");
  }
  return *value;
}

// G M^2 / (hbar c) written as (M / m_P)^2, which is exactly 1 at M = m_P.
double ticks_literal(double mass) {
  const double x = mass / planck_mass();
  return x * x;
}

}  // namespace

double planck_mass() { return std::sqrt(K::hbar * K::c / K::G); }

double planck_time() { return std::sqrt(K::hbar * K::G / (K::c * K::c * K::c * K::c * K::c)); }

double one_tick_mass(double resolution) { return K::hbar / (K::c * K::c * resolution); }

double max_ticks_mass_bound(const ClockBudget& budget) {
  const double mass = require_positive(budget.mass, "mass");
  const double tau = require_positive(budget.resolution, "resolution");
  return mass / one_tick_mass(tau);
}

BlackHoleClock black_hole_clock(double mass) {
  require_mass(mass);
  BlackHoleClock bh;
  bh.mass = mass;
  bh.schwarzschild_radius = 2.0 * K::G * mass / (K::c * K::c);
  bh.resolution = bh.schwarzschild_radius / K::c;
  const double c3 = K::c * K::c * K::c;
  bh.hawking_temperature_literal = K::hbar * c3 / (K::G * mass * K::k_B);
  bh.hawking_temperature = bh.hawking_temperature_literal / (8.0 * kPi);
  bh.ticks_order_of_magnitude = ticks_literal(mass);
  bh.entropy_exact = 4.0 * kPi * bh.ticks_order_of_magnitude;
  return bh;
}

double thermodynamic_tick_bound(double energy, double temperature) {
  if (!(energy > 0.0) || !(temperature > 0.0)) {
    throw Error(ErrorKind::NonPositiveInputs, "energy and temperature must be positive");
  }
  return energy / (K::k_B * temperature);
}

BoundConsistency bound_consistency(double mass) {
  require_mass(mass);
  const BlackHoleClock bh = black_hole_clock(mass);
  BoundConsistency report;
  report.mass = mass;
  report.resolution = bh.resolution;
  ClockBudget budget;
  budget.mass = mass;
  budget.resolution = bh.resolution;
  report.mass_bound_ticks = max_ticks_mass_bound(budget);
  report.ticks_order_of_magnitude = bh.ticks_order_of_magnitude;
  report.ratio = report.mass_bound_ticks / report.ticks_order_of_magnitude;
  return report;
}

PlanckClock planck_clock() {
  const double mass = planck_mass();
  return {.mass = mass, .time = planck_time(), .ticks = ticks_literal(mass)};
}

double evaporation_time(double mass) {
  require_mass(mass);
  const double c4 = K::c * K::c * K::c * K::c;
  return 5120.0 * kPi * K::G * K::G * mass * mass * mass / (K::hbar * c4);
}

}  // namespace tempus::bounds
