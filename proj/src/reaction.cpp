#include "surfchem/reaction.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "surfchem/errors.hpp"
#include "surfchem/format.hpp"

namespace surfchem {

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {
    "adsorption", "desorption", "eley_rideal", "langmuir_hinshelwood",
    "pseudo"};

Reaction row(std::string id, ReactionKind kind, std::optional<Species> gas,
             std::string surface, std::string products, double s_or_gamma,
             double e_over_r, int site_order = 1,
             bool fixed_prefactor = false) {
  Reaction r;
  r.id = std::move(id);
  r.kind = kind;
  r.gas = gas;
  r.surface = std::move(surface);
  r.products = std::move(products);
  r.s_or_gamma = s_or_gamma;
  r.e_over_r = e_over_r;
  r.site_order = site_order;
  r.fixed_prefactor = fixed_prefactor;
  return r;
}

std::vector<Reaction> build_aca() {
  using enum ReactionKind;
  const auto O = Species::O;
  const auto N = Species::N;
  const auto O2 = Species::O2;
  std::vector<Reaction> t;
  t.push_back(row("1", Adsorption, O, "(s)", "O(s)", 0.3, 0.0));
  t.push_back(row("2", Desorption, O, "O(s)", "O+(s)", 1.0, 44277.0));
  t.push_back(row("3", EleyRideal, O, "O(s)", "CO+O+(s)", 100.0, 4000.0));
  t.push_back(row("4", EleyRideal, O, "O(s)", "CO2+(s)", 1.0, 500.0));
  t.push_back(row("5", Adsorption, O, "(s)", "O*(s)", 0.7, 0.0));
  t.push_back(row("6", Desorption, O, "O*(s)", "O+(s)", 1.0, 96500.0));
  t.push_back(row("7", EleyRideal, O, "O*(s)", "CO+O+(s)", 1000.0, 4000.0));
  t.push_back(row("8", LangmuirHinshelwood, O, "O*(s)+O*(s)", "O2+2(s)",
                  1e-3, 15000.0));
  t.push_back(row("9", LangmuirHinshelwood, O, "O(s)+O(s)", "O2+2(s)", 5e-5,
                  15000.0));
  t.push_back(row("10", Adsorption, N, "(s)", "N(s)", 1.0, 2500.0));
  t.push_back(row("11", Desorption, N, "N(s)", "N+(s)", 1.0, 73971.0));
  t.push_back(row("12", EleyRideal, N, "N(s)", "CN+N+(s)", 1.5, 7000.0));
  t.push_back(row("13", EleyRideal, N, "N(s)", "N2+(s)", 0.5, 2000.0));
  t.push_back(row("14", LangmuirHinshelwood, N, "N(s)+N(s)", "N2+2(s)", 0.1,
                  21000.0));
  t.push_back(row("15", EleyRideal, std::nullopt, "N(s)", "CN+(s)", 1e8,
                  20676.0, 1, true));
  t.push_back(row("16", Adsorption, O2, "2(s)", "2O(s)", 1.0, 8000.0, 2));
  t.push_back(row("17", EleyRideal, O2, "O(s)", "CO+O2+(s)", 100.0, 4000.0));
  t.push_back(row("18", EleyRideal, O2, "O(s)", "CO2+O+(s)", 1.0, 500.0));
  t.push_back(row("19", Adsorption, O2, "2(s)", "2O*(s)", 1.0, 8000.0, 2));
  t.push_back(row("20", EleyRideal, O2, "O*(s)", "CO+O2+(s)", 1000.0,
                  4000.0));
  return t;
}

std::vector<Reaction> build_reduced() {
  const auto& full = build_aca();
  std::vector<Reaction> t;
  for (const char* id : {"5", "6", "7", "8", "19", "20"}) {
    t.push_back(find_reaction(full, id));
  }
  return t;
}

std::vector<Reaction> build_enriched() {
  using enum ReactionKind;
  std::vector<Reaction> t = build_reduced();
  t.push_back(row("1p", Adsorption, Species::O, "(s)", "P(s)", 0.3, 0.0));
  t.push_back(row("2p", Adsorption, Species::N, "(s)", "P(s)", 1.0, 2500.0));
  t.push_back(row("3p", Pseudo, std::nullopt, "P(s)", "CO+(s)", 0.0, 0.0));
  return t;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line,
                    std::size_t column) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad numeric field '" + s + "'", line, column);
  }
  return v;
}

constexpr std::string_view kReactionTag = "# surfchem-reactions v1";
constexpr std::string_view kReactionHeader =
    "id,kind,gas,surface,products,s_or_gamma,e_over_r,site_order";

}  // namespace

std::string_view reaction_kind_name(ReactionKind k) {
  return kKindNames[static_cast<std::size_t>(k)];
}

ReactionKind reaction_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<ReactionKind>(i);
  }
  throw DomainError("unknown reaction kind: " + std::string(name));
}

const std::vector<Reaction>& aca_reactions() {
  static const std::vector<Reaction> t = build_aca();
  return t;
}

const std::vector<Reaction>& reduced_reactions() {
  static const std::vector<Reaction> t = build_reduced();
  return t;
}

const std::vector<Reaction>& enriched_reactions() {
  static const std::vector<Reaction> t = build_enriched();
  return t;
}

const Reaction& find_reaction(const std::vector<Reaction>& set,
                              std::string_view id) {
  for (const auto& r : set) {
    if (r.id == id) return r;
  }
  throw DomainError("no reaction with id " + std::string(id));
}

void write_reaction_csv(const std::vector<Reaction>& set,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << kReactionTag << '\n' << kReactionHeader << '\n';
  const auto& fmt = format_double;
  for (const auto& r : set) {
    out << r.id << ',' << reaction_kind_name(r.kind) << ','
        << (r.gas ? species_name(*r.gas) : std::string_view{}) << ','
        << r.surface << ',' << r.products << ',';
    if (r.kind == ReactionKind::Pseudo) {
      out << ",";  // no fixed parameters
    } else {
      out << fmt(r.s_or_gamma) << ',' << fmt(r.e_over_r);
    }
    out << ',' << r.site_order << '\n';
  }
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

std::vector<Reaction> read_reaction_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kReactionTag) {
    throw ParseError(
        "missing schema tag '" + std::string(kReactionTag) +
            "', refusing to read unversioned reaction table",
        1, 1);
  }
  if (!std::getline(in, line) || line != kReactionHeader) {
    throw ParseError("unexpected reaction table header", 2, 1);
  }
  std::vector<Reaction> out;
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_fields(line);
    if (f.size() != 8) {
      throw ParseError("expected 8 fields, got " + std::to_string(f.size()),
                       lineno, f.size());
    }
    Reaction r;
    r.id = f[0];
    // Name lookups throw DomainError; in a file context that is a parse
    // failure, so rewrap with the offending location.
    try {
      r.kind = reaction_kind_from_name(f[1]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno, 2);
    }
    try {
      if (!f[2].empty()) r.gas = species_from_name(f[2]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno, 3);
    }
    r.surface = f[3];
    r.products = f[4];
    if (r.kind == ReactionKind::Pseudo) {
      if (!f[5].empty() || !f[6].empty()) {
        throw ParseError("pseudo reaction must not carry fixed parameters",
                         lineno, 6);
      }
    } else {
      r.s_or_gamma = parse_double(f[5], lineno, 6);
      r.e_over_r = parse_double(f[6], lineno, 7);
    }
    r.site_order = static_cast<int>(parse_double(f[7], lineno, 8));
    if (r.site_order != 1 && r.site_order != 2) {
      throw ParseError("site_order must be 1 or 2", lineno, 8);
    }
    r.fixed_prefactor =
        r.kind == ReactionKind::EleyRideal && !r.gas.has_value();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace surfchem
