#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "surfchem/scenario.hpp"

namespace surfchem {

/// Altitudes of the standard trajectory sweep, km.
inline constexpr std::array<double, 5> kStandardAltitudes = {20.0, 25.0,
                                                             30.0, 35.0,
                                                             40.0};

/// Altitudes whose scenarios feed calibration; the rest are held out.
bool is_calibration_altitude(double altitude_km);

/// Builds one synthetic flow-field extraction. Profiles are smooth
/// parametric curves (stagnation-point temperature peak decaying along
/// the arc, pressure decaying with altitude and arc position, species
/// densities following dissociation trends: hotter flows carry more
/// atomic O, higher altitudes carry more atomic N). The seed perturbs
/// peak levels and decay lengths a few percent so distinct seeds give
/// distinct but envelope-respecting scenarios: every shifted temperature
/// stays within [800, 3500] K.
Scenario generate_synthetic_scenario(std::uint64_t seed, double altitude_km);

/// One scenario per requested altitude; deterministic in (seed, altitude)
/// so subsets and orderings do not change individual scenarios.
std::vector<Scenario> generate_synthetic_scenarios(
    std::uint64_t seed, const std::vector<double>& altitudes);

}  // namespace surfchem
