#include "surfchem/scenario.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "surfchem/errors.hpp"
#include "surfchem/format.hpp"
#include "surfchem/species.hpp"

namespace surfchem {

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kScenarioHeader =
    "altitude_km,x_m,T_raw_K,P_total_Pa,rho_O,rho_O2,rho_N,rho_N2,rho_NO";

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
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad numeric field '" + s + "'", line, column);
  }
}

void check_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) {
    throw DomainError(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

PartialPressures densities_to_partial_pressures(const ScenarioPoint& p) {
  check_nonnegative(p.rho_o, "rho_O");
  check_nonnegative(p.rho_o2, "rho_O2");
  check_nonnegative(p.rho_n, "rho_N");
  check_nonnegative(p.rho_n2, "rho_N2");
  check_nonnegative(p.rho_no, "rho_NO");
  if (!(p.total_pressure > 0.0)) {
    throw DomainError("total pressure must be positive");
  }
  const double c_o = p.rho_o / molar_mass(Species::O);
  const double c_o2 = p.rho_o2 / molar_mass(Species::O2);
  const double c_n = p.rho_n / molar_mass(Species::N);
  const double c_n2 = p.rho_n2 / molar_mass(Species::N2);
  const double c_no = p.rho_no / molar_mass(Species::NO);
  const double total = c_o + c_o2 + c_n + c_n2 + c_no;
  if (total <= 0.0) {
    throw DegenerateMixtureError(
        "all species densities are zero, mole fractions undefined");
  }
  PartialPressures out;
  out.o = c_o / total * p.total_pressure;
  out.o2 = c_o2 / total * p.total_pressure;
  out.n = c_n / total * p.total_pressure;
  out.n2 = c_n2 / total * p.total_pressure;
  out.no = c_no / total * p.total_pressure;
  return out;
}

GasState build_gas_state(const ScenarioPoint& p) {
  const double t = p.raw_temperature - kTemperatureShift;
  if (!(t > 0.0)) {
    throw DomainError("shifted temperature is not positive");
  }
  const PartialPressures pp = densities_to_partial_pressures(p);
  return make_gas_state(t, p.total_pressure, pp.o, pp.n, pp.o2);
}

InputVector build_input_vector(const ScenarioPoint& p) {
  const GasState g = build_gas_state(p);
  InputVector v;
  v.altitude_km = p.altitude_km;
  v.x_m = p.x_m;
  v.temperature = g.temperature;
  v.total_pressure = g.total_pressure;
  v.flux_o = g.flux_o;
  v.flux_n = g.flux_n;
  v.flux_o2 = g.flux_o2;
  v.conc_o = g.conc_o;
  v.conc_n = g.conc_n;
  v.conc_o2 = g.conc_o2;
  return v;
}

void validate_scenario(const Scenario& s) {
  if (s.points.size() != static_cast<std::size_t>(kScenarioPoints)) {
    throw DomainError("scenario must have exactly " +
                      std::to_string(kScenarioPoints) + " points, got " +
                      std::to_string(s.points.size()));
  }
  if (s.label != "calibration" && s.label != "validation") {
    throw DomainError("scenario label must be calibration or validation");
  }
  double prev_x = -1.0;
  for (const ScenarioPoint& p : s.points) {
    if (p.altitude_km != s.altitude_km) {
      throw DomainError("scenario point altitude differs from scenario");
    }
    if (!(p.x_m >= 0.0 && p.x_m <= kSurfaceLength)) {
      throw DomainError("arc position outside the surface");
    }
    if (!(p.x_m > prev_x)) {
      throw DomainError("arc positions must increase strictly");
    }
    prev_x = p.x_m;
    if (!(p.raw_temperature > kTemperatureShift)) {
      throw DomainError("raw temperature must exceed the shift");
    }
    check_nonnegative(p.total_pressure, "total pressure");
    check_nonnegative(p.rho_o, "rho_O");
    check_nonnegative(p.rho_o2, "rho_O2");
    check_nonnegative(p.rho_n, "rho_N");
    check_nonnegative(p.rho_n2, "rho_N2");
    check_nonnegative(p.rho_no, "rho_NO");
  }
}

void write_scenario(const Scenario& s, const std::filesystem::path& csv_path) {
  validate_scenario(s);
  std::ofstream out(csv_path);
  if (!out) {
    throw IoError("cannot open " + csv_path.string() + " for writing");
  }
  out << kScenarioHeader << '\n';
  for (const ScenarioPoint& p : s.points) {
    out << format_double(p.altitude_km) << ',' << format_double(p.x_m) << ','
        << format_double(p.raw_temperature) << ','
        << format_double(p.total_pressure) << ',' << format_double(p.rho_o)
        << ',' << format_double(p.rho_o2) << ',' << format_double(p.rho_n)
        << ',' << format_double(p.rho_n2) << ',' << format_double(p.rho_no)
        << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("failed writing " + csv_path.string());
  }

  nlohmann::json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["altitude_km"] = s.altitude_km;
  meta["label"] = s.label;
  meta["seed"] = s.seed;
  meta["points"] = static_cast<int>(s.points.size());
  std::ofstream mout(csv_path.string() + ".meta.json");
  if (!mout) {
    throw IoError("cannot open sidecar for " + csv_path.string());
  }
  mout << meta.dump(2) << '\n';
}

Scenario read_scenario(const std::filesystem::path& csv_path) {
  const std::filesystem::path meta_path(csv_path.string() + ".meta.json");
  std::ifstream min(meta_path);
  if (!min) {
    throw IoError("missing sidecar " + meta_path.string() +
                "; refusing to read an unversioned scenario");
  }
  nlohmann::json meta;
  try {
    min >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad sidecar " + meta_path.string() + ": " + e.what());
  }
  if (!meta.contains("schema_version")) {
    throw IoError("sidecar " + meta_path.string() +
                " lacks schema_version; legacy files are not supported");
  }
  if (meta["schema_version"].get<int>() != kSchemaVersion) {
    throw IoError("unsupported scenario schema version in " +
                meta_path.string());
  }

  std::ifstream in(csv_path);
  if (!in) {
    throw IoError("cannot open " + csv_path.string());
  }
  Scenario s;
  s.altitude_km = meta.at("altitude_km").get<double>();
  s.label = meta.at("label").get<std::string>();
  s.seed = meta.at("seed").get<std::uint64_t>();

  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty scenario file", 1, 1);
  }
  const auto header = split_fields(line);
  const auto expected = split_fields(kScenarioHeader);
  if (header.size() != expected.size()) {
    throw ParseError("scenario header has " + std::to_string(header.size()) +
                         " columns, expected " +
                         std::to_string(expected.size()),
                     1, 1);
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (header[i] != expected[i]) {
      throw ParseError("expected column '" + expected[i] + "', found '" +
                           header[i] + "'",
                       1, i + 1);
    }
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != expected.size()) {
      throw ParseError("expected " + std::to_string(expected.size()) +
                           " fields, found " + std::to_string(f.size()),
                       lineno, 1);
    }
    ScenarioPoint p;
    p.altitude_km = parse_double(f[0], lineno, 1);
    p.x_m = parse_double(f[1], lineno, 2);
    p.raw_temperature = parse_double(f[2], lineno, 3);
    p.total_pressure = parse_double(f[3], lineno, 4);
    p.rho_o = parse_double(f[4], lineno, 5);
    p.rho_o2 = parse_double(f[5], lineno, 6);
    p.rho_n = parse_double(f[6], lineno, 7);
    p.rho_n2 = parse_double(f[7], lineno, 8);
    p.rho_no = parse_double(f[8], lineno, 9);
    s.points.push_back(p);
  }
  validate_scenario(s);
  return s;
}

void write_table(const NumericTable& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw IoError("table row width differs from header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

NumericTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  NumericTable t;
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty table", 1, 1);
  }
  for (auto& name : split_fields(line)) t.columns.push_back(std::move(name));
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != t.columns.size()) {
      throw ParseError("expected " + std::to_string(t.columns.size()) +
                           " fields, found " + std::to_string(f.size()),
                       lineno, 1);
    }
    std::vector<double> row;
    row.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      row.push_back(parse_double(f[i], lineno, i + 1));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace surfchem
