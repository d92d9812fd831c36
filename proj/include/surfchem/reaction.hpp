#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "surfchem/species.hpp"

namespace surfchem {

enum class ReactionKind {
  Adsorption,
  Desorption,
  EleyRideal,
  LangmuirHinshelwood,
  Pseudo,  // rate supplied externally, no fixed parameters
};

std::string_view reaction_kind_name(ReactionKind k);
ReactionKind reaction_kind_from_name(std::string_view name);

/// One row of a surface reaction table.
///
/// `gas` is the species whose mass enters the rate law: the impinging
/// reactant for adsorption and Eley-Rideal rows, the released species for
/// desorption rows, and the adsorbed atom for Langmuir-Hinshelwood rows.
/// It is absent for the fixed-prefactor nitrogen recombination row and for
/// the pseudo reaction.
struct Reaction {
  std::string id;
  ReactionKind kind = ReactionKind::Pseudo;
  std::optional<Species> gas;
  std::string surface;   // surface-side reactants, e.g. "O*(s)" or "2(s)"
  std::string products;  // e.g. "CO+O+(s)"
  double s_or_gamma = 0.0;  // sticking coefficient or reaction efficiency
  double e_over_r = 0.0;    // activation temperature, K
  int site_order = 1;       // empty-site exponent of the adsorption law

  /// True for the first-order N(s) consumption row whose rate constant is
  /// s_or_gamma * exp(-e_over_r / T) with no flux prefactor.
  bool fixed_prefactor = false;
};

/// Full 20-reaction air-carbon ablation set.
const std::vector<Reaction>& aca_reactions();

/// 6-reaction reduction keeping only the strongly bonded oxygen site.
const std::vector<Reaction>& reduced_reactions();

/// Reduced set plus the three placeholder rows of the enriched model.
const std::vector<Reaction>& enriched_reactions();

/// Looks up a reaction by id. Throws DomainError when absent.
const Reaction& find_reaction(const std::vector<Reaction>& set,
                              std::string_view id);

/// Reaction table file format: a `# surfchem-reactions v1` tag line, a
/// header, then one CSV row per reaction.
void write_reaction_csv(const std::vector<Reaction>& set,
                        const std::filesystem::path& path);
std::vector<Reaction> read_reaction_csv(const std::filesystem::path& path);

}  // namespace surfchem
