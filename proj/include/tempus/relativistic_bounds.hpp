#pragma once

// SI-unit tick budgets for clocks limited by quantum diffusion, black-hole
// formation and detector temperature.
//
// Two channels are exposed side by side. The "order of magnitude" channel
// keeps the unit prefactors dropped, e.g. n ~ G M^2 / (hbar c) and
// k_B T_H ~ hbar c^3 / (G M). The "exact" channel uses the Schwarzschild
// conventions: S_BH / k_B = 4 pi G M^2 / (hbar c),
// T_H = hbar c^3 / (8 pi G M k_B), t_evap = 5120 pi G^2 M^3 / (hbar c^4).

#include <optional>

namespace tempus::bounds {

/// CODATA 2018 recommended values (c, hbar and k_B are exact in the 2019 SI).
struct PhysicalConstants {
  static constexpr double c = 299792458.0;          // m s^-1
  static constexpr double G = 6.67430e-11;          // m^3 kg^-1 s^-2
  static constexpr double hbar = 1.054571817e-34;   // J s
  static constexpr double k_B = 1.380649e-23;       // J K^-1
};

/// Inputs to the tick bounds; absent fields are simply not set.
struct ClockBudget {
  std::optional<double> mass;         // kg
  std::optional<double> resolution;   // s
  std::optional<double> run_time;     // s
  std::optional<double> energy;       // J
  std::optional<double> temperature;  // K
};

struct BlackHoleClock {
  double mass = 0.0;                          // kg
  double schwarzschild_radius = 0.0;          // m
  double resolution = 0.0;                    // s, r_S / c
  double hawking_temperature = 0.0;           // K, exact convention
  double hawking_temperature_literal = 0.0;   // K, hbar c^3 / (G M k_B)
  double entropy_exact = 0.0;                 // S_BH / k_B
  double ticks_order_of_magnitude = 0.0;      // G M^2 / (hbar c)
};

struct BoundConsistency {
  double mass = 0.0;
  double resolution = 0.0;              // r_S / c
  double mass_bound_ticks = 0.0;        // M c^2 tau / hbar at tau = r_S / c
  double ticks_order_of_magnitude = 0.0;
  double ratio = 0.0;                   // always 2
};

struct PlanckClock {
  double mass = 0.0;   // kg
  double time = 0.0;   // s
  double ticks = 0.0;
};

double planck_mass();
double planck_time();

/// hbar / (c^2 tau): the mass-energy of a single quantum hbar / tau.
double one_tick_mass(double resolution);

/// M c^2 tau / hbar, evaluated as M / one_tick_mass(tau).
/// Throws MissingField without mass or resolution, NonPositiveInputs if a
/// provided field is not positive.
double max_ticks_mass_bound(const ClockBudget& budget);

/// Throws NonPositiveMass for M <= 0.
BlackHoleClock black_hole_clock(double mass);

/// E / (k_B T). Throws NonPositiveInputs.
double thermodynamic_tick_bound(double energy, double temperature);

BoundConsistency bound_consistency(double mass);

PlanckClock planck_clock();

/// 5120 pi G^2 M^3 / (hbar c^4).
double evaporation_time(double mass);

}  // namespace tempus::bounds
