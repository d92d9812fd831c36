#include "surfchem/synthetic.hpp"

#include <cmath>

#include "surfchem/constants.hpp"
#include "surfchem/errors.hpp"
#include "surfchem/rng.hpp"
#include "surfchem/species.hpp"

namespace surfchem {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

// Atomic-nitrogen mass fraction of the nitrogen budget. Grows with
// altitude: at 20 km the post-shock gas has recombined almost all N, at
// 40 km a couple percent survive to the surface. The growth length is
// kept gentle so the scenario family stays smooth in altitude.
double nitrogen_dissociation(double altitude_km) {
  return 2.0e-4 * std::exp((altitude_km - 20.0) / 4.5);
}

// Atomic-oxygen fraction of the oxygen budget; rises with local raw
// temperature and altitude.
double oxygen_dissociation(double raw_t, double altitude_km) {
  const double f = 0.08 + 0.85 * sigmoid((raw_t - 2650.0) / 400.0) +
                   0.012 * (altitude_km - 20.0);
  return clamp(f, 0.05, 0.98);
}

}  // namespace

bool is_calibration_altitude(double altitude_km) {
  return altitude_km == 20.0 || altitude_km == 30.0 || altitude_km == 40.0;
}

Scenario generate_synthetic_scenario(std::uint64_t seed, double altitude_km) {
  if (!(altitude_km > 0.0)) {
    throw DomainError("altitude must be positive");
  }
  // Stream the RNG by altitude so each scenario depends only on
  // (seed, altitude), not on the position in the requested list.
  const auto stream =
      static_cast<std::uint64_t>(std::llround(altitude_km * 1000.0));
  Rng rng(seed, stream);

  const double rel = altitude_km - 20.0;
  // Stagnation-region peak and far-field floor of the raw temperature
  // profile; both drop with altitude. The seedwise jitter is kept to a
  // few tenths of a percent so distinct seeds stay inside the modeled
  // envelope and the altitude family stays smooth.
  const double t_peak =
      (3950.0 - 70.0 * rel) * (1.0 + 0.005 * rng.uniform(-1.0, 1.0));
  const double t_floor =
      (2600.0 - 37.5 * rel) * (1.0 + 0.005 * rng.uniform(-1.0, 1.0));
  const double len_t = 0.05 * (1.0 + 0.03 * rng.uniform(-1.0, 1.0));
  // Surface pressure level decays exponentially with altitude.
  const double p_peak = 9.0e4 * std::exp(-rel / 7.2) *
                        (1.0 + 0.01 * rng.uniform(-1.0, 1.0));
  const double len_p = 0.07;

  const double alpha_n = nitrogen_dissociation(altitude_km);

  Scenario s;
  s.altitude_km = altitude_km;
  s.label = is_calibration_altitude(altitude_km) ? "calibration" : "validation";
  s.seed = seed;
  s.points.reserve(kScenarioPoints);
  for (int i = 0; i < kScenarioPoints; ++i) {
    const double x =
        kSurfaceLength * static_cast<double>(i) / (kScenarioPoints - 1);
    ScenarioPoint p;
    p.altitude_km = altitude_km;
    p.x_m = x;
    p.raw_temperature = t_floor + (t_peak - t_floor) * std::exp(-x / len_t);
    p.total_pressure = p_peak * (0.35 + 0.65 * std::exp(-x / len_p));

    const double alpha_o = oxygen_dissociation(p.raw_temperature, altitude_km);
    // Mass budget: 22.5% oxygen-bearing, 76% nitrogen-bearing, 1.5% NO.
    const double w_o = 0.225 * alpha_o;
    const double w_o2 = 0.225 * (1.0 - alpha_o);
    const double w_n = 0.76 * alpha_n;
    const double w_n2 = 0.76 * (1.0 - alpha_n);
    const double w_no = 0.015;
    const double inv_m_mix = w_o / molar_mass(Species::O) +
                             w_o2 / molar_mass(Species::O2) +
                             w_n / molar_mass(Species::N) +
                             w_n2 / molar_mass(Species::N2) +
                             w_no / molar_mass(Species::NO);
    const double rho_total =
        p.total_pressure /
        (constants::gas_constant * p.raw_temperature * inv_m_mix);
    p.rho_o = w_o * rho_total;
    p.rho_o2 = w_o2 * rho_total;
    p.rho_n = w_n * rho_total;
    p.rho_n2 = w_n2 * rho_total;
    p.rho_no = w_no * rho_total;
    s.points.push_back(p);
  }
  validate_scenario(s);
  return s;
}

std::vector<Scenario> generate_synthetic_scenarios(
    std::uint64_t seed, const std::vector<double>& altitudes) {
  if (altitudes.empty()) {
    throw DomainError("altitude list is empty");
  }
  std::vector<Scenario> out;
  out.reserve(altitudes.size());
  for (double a : altitudes) {
    out.push_back(generate_synthetic_scenario(seed, a));
  }
  return out;
}

}  // namespace surfchem
