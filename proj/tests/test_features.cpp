#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "surfchem/errors.hpp"
#include "surfchem/features.hpp"
#include "surfchem/synthetic.hpp"

using namespace surfchem;

namespace {

std::vector<InputVector> sample_inputs() {
  std::vector<InputVector> inputs;
  for (const Scenario& s : generate_synthetic_scenarios(11, {20.0, 40.0})) {
    for (const ScenarioPoint& p : s.points) {
      inputs.push_back(build_input_vector(p));
    }
  }
  return inputs;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("raw feature names cover the input vector") {
  const auto& names = raw_feature_names();
  CHECK(names.size() == 10);
  for (const char* expected :
       {"altitude_km", "x_m", "temperature", "total_pressure", "flux_o",
        "flux_n", "flux_o2", "conc_o", "conc_n", "conc_o2"}) {
    CHECK(contains(names, expected));
  }
}

TEST_CASE("feature values and log features") {
  InputVector v;
  v.altitude_km = 25.0;
  v.x_m = 0.125;
  v.temperature = 1600.0;
  v.total_pressure = 2e4;
  v.conc_n = 0.25;
  CHECK(feature_value(v, "altitude_km") == 25.0);
  CHECK(feature_value(v, "temperature") == 1600.0);
  CHECK(feature_value(v, "log_temperature") == std::log(1600.0));
  CHECK(feature_value(v, "log_conc_n") == std::log(0.25));
  CHECK_THROWS_AS(feature_value(v, "enthalpy"), DomainError);
  // x_m is zero at the first station; its log is out of domain.
  v.x_m = 0.0;
  CHECK_THROWS_AS(feature_value(v, "log_x_m"), DomainError);
}

TEST_CASE("candidate set logs only strictly positive columns") {
  const auto inputs = sample_inputs();
  const auto cand = candidate_feature_names(inputs);
  // All raw features are always candidates.
  for (const auto& n : raw_feature_names()) CHECK(contains(cand, n));
  CHECK(contains(cand, "log_temperature"));
  CHECK(contains(cand, "log_total_pressure"));
  CHECK(contains(cand, "log_conc_n"));
  // The first station sits at x = 0, so log_x_m must not be offered.
  CHECK_FALSE(contains(cand, "log_x_m"));
}

TEST_CASE("feature matrix layout") {
  const auto inputs = sample_inputs();
  const std::vector<std::string> names = {"temperature", "log_conc_o"};
  const Eigen::MatrixXd m = feature_matrix(inputs, names);
  REQUIRE(m.rows() == static_cast<Eigen::Index>(inputs.size()));
  REQUIRE(m.cols() == 2);
  CHECK(m(3, 0) == inputs[3].temperature);
  CHECK(m(3, 1) == std::log(inputs[3].conc_o));
}

TEST_CASE("standardizer centers and scales") {
  Eigen::MatrixXd x(4, 3);
  x << 1.0, 10.0, 5.0,
       2.0, 10.0, 7.0,
       3.0, 10.0, 9.0,
       4.0, 10.0, 11.0;
  const Standardizer st = Standardizer::fit(x);
  const Eigen::MatrixXd z = st.transform(x);
  for (int j = 0; j < 3; ++j) {
    CHECK(z.col(j).mean() == doctest::Approx(0.0).epsilon(1e-14));
  }
  // Population variance 1 for non-constant columns.
  CHECK(z.col(0).squaredNorm() / 4.0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.col(2).squaredNorm() / 4.0 == doctest::Approx(1.0).epsilon(1e-12));
  // Constant column keeps scale 1 so the map stays invertible.
  CHECK(st.scale(1) == 1.0);
  CHECK(z.col(1).isZero(0.0));

  const Eigen::MatrixXd back = st.inverse(z);
  CHECK((back - x).cwiseAbs().maxCoeff() <= 1e-12);
}
