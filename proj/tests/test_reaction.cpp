#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "surfchem/errors.hpp"
#include "surfchem/reaction.hpp"

using namespace surfchem;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SURFCHEM_DATA_DIR;

void check_equal(const std::vector<Reaction>& a,
                 const std::vector<Reaction>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].id);
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].gas == b[i].gas);
    CHECK(a[i].surface == b[i].surface);
    CHECK(a[i].products == b[i].products);
    CHECK(a[i].s_or_gamma == b[i].s_or_gamma);
    CHECK(a[i].e_over_r == b[i].e_over_r);
    CHECK(a[i].site_order == b[i].site_order);
    CHECK(a[i].fixed_prefactor == b[i].fixed_prefactor);
  }
}

fs::path temp_csv(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "surfchem_reaction_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("builtin tables have the expected shape") {
  const auto& aca = aca_reactions();
  const auto& red = reduced_reactions();
  const auto& enr = enriched_reactions();
  CHECK(aca.size() == 20);
  CHECK(red.size() == 6);
  CHECK(enr.size() == 9);

  // The reduction is a subset of the full set, row for row.
  for (const Reaction& r : red) {
    const Reaction& full = find_reaction(aca, r.id);
    CHECK(full.kind == r.kind);
    CHECK(full.s_or_gamma == r.s_or_gamma);
    CHECK(full.e_over_r == r.e_over_r);
  }
  // The enriched set is the reduction plus three placeholder rows.
  for (const Reaction& r : red) CHECK_NOTHROW(find_reaction(enr, r.id));
  CHECK(find_reaction(enr, "1p").kind == ReactionKind::Adsorption);
  CHECK(find_reaction(enr, "2p").kind == ReactionKind::Adsorption);
  CHECK(find_reaction(enr, "3p").kind == ReactionKind::Pseudo);
  CHECK(find_reaction(enr, "1p").gas == Species::O);
  CHECK(find_reaction(enr, "2p").gas == Species::N);
  CHECK(find_reaction(enr, "2p").e_over_r == 2500.0);

  // Second-order site dependence appears exactly twice, on the molecular
  // oxygen and nitrogen adsorption rows.
  int second_order = 0;
  for (const Reaction& r : aca) {
    if (r.site_order == 2) {
      ++second_order;
      CHECK((r.id == "16" || r.id == "19"));
    }
  }
  CHECK(second_order == 2);

  // The fixed-prefactor nitrogen consumption row carries no gas species.
  const Reaction& r15 = find_reaction(aca, "15");
  CHECK(r15.fixed_prefactor);
  CHECK_FALSE(r15.gas.has_value());
  CHECK(r15.s_or_gamma == 1e8);
  CHECK(r15.e_over_r == 20676.0);

  CHECK_THROWS_AS(find_reaction(red, "15"), DomainError);
}

TEST_CASE("checked-in tables match the builtin sets") {
  check_equal(read_reaction_csv(kDataDir / "reactions_aca.csv"),
              aca_reactions());
  check_equal(read_reaction_csv(kDataDir / "reactions_reduced.csv"),
              reduced_reactions());
  check_equal(read_reaction_csv(kDataDir / "reactions_enriched.csv"),
              enriched_reactions());
}

TEST_CASE("reaction tables round-trip through CSV") {
  const fs::path p = temp_csv("roundtrip.csv");
  write_reaction_csv(enriched_reactions(), p);
  check_equal(read_reaction_csv(p), enriched_reactions());
}

TEST_CASE("reaction reader rejects malformed files") {
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_reaction_csv(temp_csv("absent.csv")), IoError);
  }
  SUBCASE("missing format tag") {
    const fs::path p = temp_csv("untagged.csv");
    std::ofstream out(p);
    out << "id,kind,gas,surface,products,s_or_gamma,e_over_r,site_order\n";
    out.close();
    CHECK_THROWS_AS(read_reaction_csv(p), ParseError);
  }
  SUBCASE("unknown kind") {
    const fs::path p = temp_csv("badkind.csv");
    write_reaction_csv(reduced_reactions(), p);
    std::ifstream in(p);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    const auto pos = text.find("desorption");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "dissolving");
    std::ofstream out(p);
    out << text;
    out.close();
    CHECK_THROWS_AS(read_reaction_csv(p), ParseError);
  }
  SUBCASE("bad site order") {
    const fs::path p = temp_csv("badorder.csv");
    std::ofstream out(p);
    out << "# surfchem-reactions v1\n"
        << "id,kind,gas,surface,products,s_or_gamma,e_over_r,site_order\n"
        << "1,adsorption,O,(s),O(s),0.3,0,3\n";
    out.close();
    CHECK_THROWS_AS(read_reaction_csv(p), ParseError);
  }
  SUBCASE("unparsable number") {
    const fs::path p = temp_csv("badnum.csv");
    std::ofstream out(p);
    out << "# surfchem-reactions v1\n"
        << "id,kind,gas,surface,products,s_or_gamma,e_over_r,site_order\n"
        << "1,adsorption,O,(s),O(s),zero,0,1\n";
    out.close();
    CHECK_THROWS_AS(read_reaction_csv(p), ParseError);
  }
}
