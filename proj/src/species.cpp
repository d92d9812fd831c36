#include "surfchem/species.hpp"

#include <string>

#include "surfchem/constants.hpp"
#include "surfchem/errors.hpp"

namespace surfchem {

namespace {

struct SpeciesRecord {
  std::string_view name;
  double molar_mass;  // kg/mol
};

// Order matches the Species enum.
constexpr std::array<SpeciesRecord, 8> kRegistry = {{
    {"O", 15.999e-3},
    {"N", 14.007e-3},
    {"O2", 31.998e-3},
    {"N2", 28.014e-3},
    {"NO", 30.006e-3},
    {"CO", 28.010e-3},
    {"CO2", 44.009e-3},
    {"CN", 26.017e-3},
}};

constexpr std::array<std::string_view, 4> kSiteNames = {"O(s)", "O*(s)",
                                                        "N(s)", "P(s)"};

}  // namespace

double molar_mass(Species s) {
  return kRegistry[static_cast<std::size_t>(s)].molar_mass;
}

double particle_mass(Species s) {
  return molar_mass(s) / constants::avogadro;
}

std::string_view species_name(Species s) {
  return kRegistry[static_cast<std::size_t>(s)].name;
}

Species species_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRegistry.size(); ++i) {
    if (kRegistry[i].name == name) return static_cast<Species>(i);
  }
  throw DomainError("unknown species name: " + std::string(name));
}

std::string_view site_name(Site s) {
  return kSiteNames[static_cast<std::size_t>(s)];
}

Site site_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSiteNames.size(); ++i) {
    if (kSiteNames[i] == name) return static_cast<Site>(i);
  }
  throw DomainError("unknown site name: " + std::string(name));
}

Species site_atom(Site s) {
  switch (s) {
    case Site::WeakO:
    case Site::StrongO:
      return Species::O;
    case Site::Nitrogen:
      return Species::N;
    case Site::Placeholder:
      break;
  }
  throw DomainError("placeholder site has no single underlying atom");
}

}  // namespace surfchem
