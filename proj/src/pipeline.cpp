#include "surfchem/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "surfchem/errors.hpp"
#include "surfchem/parallel.hpp"
#include "surfchem/steady.hpp"

namespace surfchem {

namespace {

constexpr int kArtifactSchemaVersion = 1;

nlohmann::json pointwise_options_to_json(const PointwiseFitOptions& o) {
  nlohmann::json j;
  j["simplex_lo"] = o.simplex_lo;
  j["simplex_hi"] = o.simplex_hi;
  j["max_evaluations"] = o.max_evaluations;
  j["simplex_tolerance"] = o.simplex_tolerance;
  return j;
}

PointwiseFitOptions pointwise_options_from_json(const nlohmann::json& j) {
  PointwiseFitOptions o;
  o.simplex_lo = j.value("simplex_lo", o.simplex_lo);
  o.simplex_hi = j.value("simplex_hi", o.simplex_hi);
  o.max_evaluations = j.value("max_evaluations", o.max_evaluations);
  o.simplex_tolerance = j.value("simplex_tolerance", o.simplex_tolerance);
  return o;
}

std::vector<double> vector_to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd vector_from_std(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(
      v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

void PipelineConfig::validate() const {
  for (double c : calibration_altitudes) {
    for (double v : validation_altitudes) {
      if (c == v) {
        throw DomainError(
            "calibration and validation altitudes must be disjoint");
      }
    }
  }
  if (calibration_altitudes.empty()) {
    throw DomainError("at least one calibration altitude is required");
  }
  if (sample_count < 1) throw DomainError("sample count must be at least 1");
  if (!(noise_variance > 0.0)) {
    throw DomainError("noise variance must be positive");
  }
  if (!(site_density > 0.0)) {
    throw DomainError("site density must be positive");
  }
}

nlohmann::json PipelineConfig::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["calibration_altitudes"] = calibration_altitudes;
  j["validation_altitudes"] = validation_altitudes;
  j["sample_count"] = sample_count;
  j["noise_variance"] = noise_variance;
  j["site_density"] = site_density;
  j["pointwise"] = pointwise_options_to_json(pointwise);
  j["output_dir"] = output_dir;
  return j;
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j) {
  PipelineConfig c;
  c.seed = j.value("seed", c.seed);
  c.calibration_altitudes =
      j.value("calibration_altitudes", c.calibration_altitudes);
  c.validation_altitudes =
      j.value("validation_altitudes", c.validation_altitudes);
  c.sample_count = j.value("sample_count", c.sample_count);
  c.noise_variance = j.value("noise_variance", c.noise_variance);
  c.site_density = j.value("site_density", c.site_density);
  if (j.contains("pointwise")) {
    c.pointwise = pointwise_options_from_json(j.at("pointwise"));
  }
  c.output_dir = j.value("output_dir", c.output_dir);
  c.validate();
  return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("config file " + path.string() + " is not valid JSON: " +
                  e.what());
  }
  return PipelineConfig::from_json(j);
}

Eigen::RowVectorXd TrainedModel::gp_row(const InputVector& v) const {
  Eigen::MatrixXd raw(1, static_cast<Eigen::Index>(gp_feature_names.size()));
  for (std::size_t c = 0; c < gp_feature_names.size(); ++c) {
    raw(0, static_cast<Eigen::Index>(c)) =
        feature_value(v, gp_feature_names[c]);
  }
  return standardizer.transform(raw).row(0);
}

std::pair<double, double> TrainedModel::predict_log_k3p(
    const InputVector& v) const {
  const auto [residual_mean, std_dev] = gp.predict(gp_row(v));
  return {detrend.evaluate(v) + residual_mean, std_dev};
}

Eigen::MatrixXd TrainedModel::sample_log_k3p(
    const std::vector<InputVector>& inputs, int count, Rng& rng) const {
  if (inputs.empty()) throw DomainError("no inputs to sample at");
  Eigen::MatrixXd raw(static_cast<Eigen::Index>(inputs.size()),
                      static_cast<Eigen::Index>(gp_feature_names.size()));
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    for (std::size_t c = 0; c < gp_feature_names.size(); ++c) {
      raw(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          feature_value(inputs[r], gp_feature_names[c]);
    }
  }
  Eigen::MatrixXd samples =
      gp.sample_joint(standardizer.transform(raw), count, rng);
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    samples.col(static_cast<Eigen::Index>(j)).array() +=
        detrend.evaluate(inputs[j]);
  }
  return samples;
}

nlohmann::json TrainedModel::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kArtifactSchemaVersion;
  j["gp_feature_names"] = gp_feature_names;
  j["standardizer"]["mean"] = vector_to_std(standardizer.mean);
  j["standardizer"]["scale"] = vector_to_std(standardizer.scale);
  j["detrend"]["intercept"] = detrend.intercept;
  j["detrend"]["coefficients"] = std::vector<double>(
      detrend.coefficients.data(), detrend.coefficients.data() + 3);
  j["gp"] = gp.to_json();
  j["selection"]["chosen_lambda"] = selection.chosen_lambda;
  j["selection"]["selected"] = selection.selected;
  j["selection"]["dropped"] = selection.dropped;
  j["training_digest"] = training_digest;
  return j;
}

TrainedModel TrainedModel::from_json(const nlohmann::json& j) {
  const int version = j.value("schema_version", 0);
  if (version != kArtifactSchemaVersion) {
    throw IoError("model artifact has unsupported schema version " +
                  std::to_string(version));
  }
  TrainedModel m;
  m.gp_feature_names =
      j.at("gp_feature_names").get<std::vector<std::string>>();
  m.standardizer.mean = vector_from_std(
      j.at("standardizer").at("mean").get<std::vector<double>>());
  m.standardizer.scale = vector_from_std(
      j.at("standardizer").at("scale").get<std::vector<double>>());
  m.detrend.intercept = j.at("detrend").at("intercept").get<double>();
  const auto coeffs =
      j.at("detrend").at("coefficients").get<std::vector<double>>();
  if (coeffs.size() != 3) {
    throw IoError("model artifact detrend coefficients must have size 3");
  }
  m.detrend.coefficients = Eigen::Vector3d(coeffs[0], coeffs[1], coeffs[2]);
  m.gp = GpModel::from_json(j.at("gp"));
  if (j.contains("selection")) {
    m.selection.chosen_lambda =
        j.at("selection").value("chosen_lambda", 0.0);
    m.selection.selected = j.at("selection")
                               .value("selected", std::vector<std::string>{});
    m.selection.dropped = j.at("selection")
                              .value("dropped", std::vector<std::string>{});
  }
  m.training_digest = j.value("training_digest", std::string());
  return m;
}

void TrainedModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write model artifact " + path.string());
  }
  out << to_json().dump(2) << '\n';
}

TrainedModel TrainedModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open model artifact " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("model artifact " + path.string() +
                  " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

std::vector<double> hifi_co_fluxes(const Scenario& scenario,
                                   double site_density) {
  std::vector<double> co(scenario.points.size());
  for (std::size_t i = 0; i < scenario.points.size(); ++i) {
    co[i] =
        solve_hifi(build_gas_state(scenario.points[i]), site_density)
            .fluxes.co;
  }
  return co;
}

CalibrationResult run_calibration(
    const std::vector<Scenario>& calibration,
    const std::vector<std::vector<double>>& reference_co,
    const PipelineConfig& config) {
  config.validate();
  if (calibration.empty()) {
    throw DomainError("no calibration scenarios supplied");
  }
  if (reference_co.size() != calibration.size()) {
    throw DomainError("one reference flux list per scenario is required");
  }

  std::vector<InputVector> inputs;
  std::vector<GasState> gases;
  std::vector<double> refs;
  for (std::size_t s = 0; s < calibration.size(); ++s) {
    const Scenario& scenario = calibration[s];
    validate_scenario(scenario);
    const bool listed =
        std::find(config.calibration_altitudes.begin(),
                  config.calibration_altitudes.end(),
                  scenario.altitude_km) != config.calibration_altitudes.end();
    if (!listed) {
      throw DomainError("scenario altitude " +
                        std::to_string(scenario.altitude_km) +
                        " km is not in the calibration split");
    }
    if (reference_co[s].size() != scenario.points.size()) {
      throw DomainError("reference flux count does not match scenario size");
    }
    for (std::size_t p = 0; p < scenario.points.size(); ++p) {
      inputs.push_back(build_input_vector(scenario.points[p]));
      gases.push_back(build_gas_state(scenario.points[p]));
      refs.push_back(reference_co[s][p]);
    }
  }

  CalibrationResult result;
  result.fits.resize(inputs.size());
  parallel_for(inputs.size(), [&](std::size_t i) {
    result.fits[i] = fit_pointwise(inputs[i], gases[i], config.site_density,
                                   refs[i], config.pointwise);
  });

  std::vector<double> targets(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    targets[i] = result.fits[i].log_k3p_opt;
    if (!result.fits[i].converged) ++result.non_converged;
  }

  TrainedModel& model = result.model;
  const std::vector<std::string> candidates = candidate_feature_names(inputs);
  model.selection = select_features(feature_matrix(inputs, candidates),
                                    candidates, vector_from_std(targets),
                                    config.seed);
  model.gp_feature_names = model.selection.selected;
  if (model.gp_feature_names.empty()) {
    // The null model won cross-validation; the GP still needs inputs, so
    // fall back to the detrend regressors.
    model.gp_feature_names = DetrendModel::regressor_names();
  }

  model.detrend = fit_detrend(inputs, targets);
  const std::vector<double> residuals =
      detrend_residuals(model.detrend, inputs, targets);

  const Eigen::MatrixXd gp_raw =
      feature_matrix(inputs, model.gp_feature_names);
  model.standardizer = Standardizer::fit(gp_raw);
  GpConfig gp_config;
  gp_config.noise_variance = config.noise_variance;
  gp_config.seed = config.seed;
  model.gp = GpModel::train(model.standardizer.transform(gp_raw),
                            vector_from_std(residuals), gp_config);

  Fnv1a digest;
  for (const InputVector& v : inputs) {
    digest.update(v.altitude_km);
    digest.update(v.x_m);
    digest.update(v.temperature);
    digest.update(v.total_pressure);
    digest.update(v.flux_o);
    digest.update(v.flux_n);
    digest.update(v.flux_o2);
    digest.update(v.conc_o);
    digest.update(v.conc_n);
    digest.update(v.conc_o2);
  }
  for (double t : targets) digest.update(t);
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(digest.digest()));
  model.training_digest = buffer;

  result.calibration_coverage = band_coverage(model, inputs, targets);
  return result;
}

double band_coverage(const TrainedModel& model,
                     const std::vector<InputVector>& inputs,
                     const std::vector<double>& targets) {
  if (inputs.empty() || inputs.size() != targets.size()) {
    throw DomainError("coverage needs matching nonempty inputs and targets");
  }
  std::size_t inside = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto [mean, std_dev] = model.predict_log_k3p(inputs[i]);
    if (std::abs(targets[i] - mean) <= 1.96 * std_dev) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(inputs.size());
}

}  // namespace surfchem
