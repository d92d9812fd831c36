#pragma once

#include <array>
#include <string_view>

namespace surfchem {

/// Gas-phase species. The first three are the model reactants; the rest
/// appear as products or only contribute to mixture mole fractions.
enum class Species { O, N, O2, N2, NO, CO, CO2, CN };

inline constexpr std::array<Species, 8> kAllSpecies = {
    Species::O,  Species::N,  Species::O2, Species::N2,
    Species::NO, Species::CO, Species::CO2, Species::CN};

/// Molar mass in kg/mol.
double molar_mass(Species s);

/// Mass of a single particle in kg (molar mass over Avogadro's number).
double particle_mass(Species s);

std::string_view species_name(Species s);

/// Inverse of species_name. Throws DomainError for unknown names.
Species species_from_name(std::string_view name);

/// Adsorbed surface species tracked by the models.
/// WeakO and StrongO are the two oxygen adsorption sites (the strongly
/// bonded one has the higher desorption barrier). Placeholder is the
/// lumped site of the enriched model.
enum class Site { WeakO, StrongO, Nitrogen, Placeholder };

std::string_view site_name(Site s);
Site site_from_name(std::string_view name);

/// Gas-phase atom released when a Site desorbs or recombines.
Species site_atom(Site s);

/// Surface coverages in mol/m^2, one slot per Site.
struct Coverages {
  double weak_o = 0.0;
  double strong_o = 0.0;
  double nitrogen = 0.0;
  double placeholder = 0.0;

  double sum() const { return weak_o + strong_o + nitrogen + placeholder; }
};

}  // namespace surfchem
