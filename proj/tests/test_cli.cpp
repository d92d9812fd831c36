#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfchem/scenario.hpp"

using namespace surfchem;
namespace fs = std::filesystem;

namespace {

const char* kCliBin = SURFCHEM_CLI_BIN;

struct Workspace {
  fs::path root;
  fs::path config;
  fs::path out;
  fs::path log;

  explicit Workspace(const std::string& name) {
    root = fs::temp_directory_path() / ("surfchem_cli_" + name);
    fs::remove_all(root);
    fs::create_directories(root);
    out = root / "out";
    log = root / "last.log";
    config = root / "config.json";
    nlohmann::json j;
    j["seed"] = 31206;
    j["calibration_altitudes"] = {30.0};
    j["validation_altitudes"] = {25.0};
    j["sample_count"] = 12;
    j["output_dir"] = out.string();
    std::ofstream cfg(config);
    cfg << j.dump(2) << '\n';
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string("'") + kCliBin + "' --config '" +
                            config.string() + "' " + args + " > '" +
                            log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
  }

  std::string last_log() const {
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("full command workflow") {
  const Workspace ws("workflow");

  REQUIRE(ws.run("generate") == 0);
  CHECK(fs::exists(ws.out / "scenarios" / "scenario_25km.csv"));
  CHECK(fs::exists(ws.out / "scenarios" / "scenario_30km.csv"));
  CHECK(fs::exists(ws.out / "scenarios" / "scenario_30km.csv.meta.json"));

  // Refusal to overwrite without --force.
  CHECK(ws.run("generate") == 4);
  CHECK(ws.last_log().find("--force") != std::string::npos);
  CHECK(ws.run("generate --force") == 0);

  REQUIRE(ws.run("simulate --model hifi") == 0);
  REQUIRE(ws.run("simulate --model lofi") == 0);
  CHECK(fs::exists(ws.out / "results" / "hifi_30km.csv"));

  REQUIRE(ws.run("calibrate") == 0);
  CHECK(fs::exists(ws.out / "model" / "artifact.json"));
  CHECK(fs::exists(ws.out / "model" / "pointwise_fits.csv"));
  {
    std::ifstream diag(ws.out / "model" / "diagnostics.json");
    REQUIRE(diag.good());
    nlohmann::json j;
    diag >> j;
    CHECK(j.contains("calibration_band_coverage"));
    CHECK(j.contains("validation_band_coverage"));
    CHECK(j.contains("training_digest"));
    CHECK(j["pointwise_converged_fraction"].get<double>() >= 0.95);
  }

  REQUIRE(ws.run("simulate --model enriched") == 0);
  CHECK(fs::exists(ws.out / "results" / "enriched_25km.csv"));

  // Switching the placeholder reactions off reduces the enriched model to
  // the low-fidelity one: the result files must match byte for byte.
  REQUIRE(ws.run("simulate --model enriched --no-placeholder-adsorption "
                 "--force") == 0);
  for (const char* alt : {"25", "30"}) {
    const std::string lofi =
        slurp(ws.out / "results" / ("lofi_" + std::string(alt) + "km.csv"));
    const std::string enriched = slurp(
        ws.out / "results" / ("enriched_" + std::string(alt) + "km.csv"));
    CHECK(lofi == enriched);
  }

  REQUIRE(ws.run("propagate") == 0);
  CHECK(fs::exists(ws.out / "qoi" / "summary.csv"));
  {
    const NumericTable summary =
        read_table(ws.out / "qoi" / "summary.csv");
    CHECK(summary.rows.size() == 2);
    const NumericTable ratios =
        read_table(ws.out / "qoi" / "ratios_30km.csv");
    CHECK(ratios.rows.size() == 12);
  }

  REQUIRE(ws.run("report") == 0);
  const NumericTable merged =
      read_table(ws.out / "report" / "results_30km.csv");
  const std::vector<std::string> expected = {"altitude_km",
                                             "x_m",
                                             "f_CO_hifi",
                                             "f_CO_lofi",
                                             "f_CO_enriched_mean",
                                             "f_CO_enriched_q05",
                                             "f_CO_enriched_q95",
                                             "cov_weak_O_hifi",
                                             "cov_strong_O_hifi",
                                             "cov_N_hifi",
                                             "free_sites_hifi"};
  CHECK(merged.columns == expected);
  CHECK(merged.rows.size() == 72);
  CHECK(slurp(ws.out / "report" / "ratio_summary.csv") ==
        slurp(ws.out / "qoi" / "summary.csv"));
}

TEST_CASE("scenario generation is reproducible across runs") {
  const Workspace ws("repro");
  const fs::path other = ws.root / "out2";
  REQUIRE(ws.run("generate") == 0);
  REQUIRE(ws.run("generate --out '" + other.string() + "'") == 0);
  CHECK(slurp(ws.out / "scenarios" / "scenario_30km.csv") ==
        slurp(other / "scenarios" / "scenario_30km.csv"));
  CHECK(slurp(ws.out / "scenarios" / "scenario_25km.csv") ==
        slurp(other / "scenarios" / "scenario_25km.csv"));
}

TEST_CASE("verification mode passes on the bisection solvers") {
  const Workspace ws("verify");
  REQUIRE(ws.run("generate") == 0);
  REQUIRE(ws.run("simulate --model lofi --verify") == 0);
  CHECK(ws.last_log().find("max relative coverage deviation") !=
        std::string::npos);
}

TEST_CASE("constant pseudo rate bypasses the artifact") {
  const Workspace ws("k3p");
  REQUIRE(ws.run("generate") == 0);
  CHECK(ws.run("simulate --model enriched --k3p 5e5") == 0);
  CHECK(fs::exists(ws.out / "results" / "enriched_30km.csv"));
}

TEST_CASE("missing prerequisites exit with the file error code") {
  const Workspace ws("missing");

  CHECK(ws.run("simulate --model hifi") == 4);
  CHECK(ws.last_log().find("run the generate command first") !=
        std::string::npos);

  CHECK(ws.run("propagate") == 4);
  CHECK(ws.last_log().find("run the calibrate command first") !=
        std::string::npos);

  REQUIRE(ws.run("generate") == 0);
  CHECK(ws.run("calibrate") == 4);
  CHECK(ws.last_log().find("run the simulate command") != std::string::npos);

  CHECK(ws.run("simulate --model enriched") == 4);
  CHECK(ws.last_log().find("--k3p") != std::string::npos);
}

TEST_CASE("broken config and usage errors") {
  const Workspace ws("badconfig");
  {
    std::ofstream cfg(ws.config);
    cfg << "{\"seed\": oops\n";
  }
  CHECK(ws.run("generate") == 4);
  CHECK(ws.last_log().find("not valid JSON") != std::string::npos);

  const Workspace ok("usage");
  CHECK(ok.run("simulate --model bogus") != 0);
  CHECK(ok.run("") != 0);  // a subcommand is required
}
