#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include <json.hpp>

#include "surfchem/detrend.hpp"
#include "surfchem/features.hpp"
#include "surfchem/gp.hpp"
#include "surfchem/lasso.hpp"
#include "surfchem/pointwise.hpp"
#include "surfchem/rng.hpp"
#include "surfchem/scenario.hpp"

namespace surfchem {

/// Knobs of the calibration and propagation stages. Defaults encode the
/// standard experiment: three calibration altitudes, two held out for
/// validation, 100 posterior samples, white-noise level 0.005.
struct PipelineConfig {
  std::uint64_t seed = 0;
  std::vector<double> calibration_altitudes = {20.0, 30.0, 40.0};
  std::vector<double> validation_altitudes = {25.0, 35.0};
  int sample_count = 100;
  double noise_variance = 0.005;
  double site_density = kSiteDensity;
  PointwiseFitOptions pointwise;
  std::string output_dir = "out";

  /// Rejects overlapping calibration/validation splits and non-positive
  /// counts, noise or site density.
  void validate() const;

  nlohmann::json to_json() const;
  static PipelineConfig from_json(const nlohmann::json& j);
};

/// Reads a JSON config file; missing keys fall back to the defaults
/// above. Throws IoError on unreadable or malformed files.
PipelineConfig load_config(const std::filesystem::path& path);

/// The calibrated pseudo-rate surrogate: a linear trend in (log T,
/// log P_total, c_N) plus a GP over the standardized selected features
/// modeling the residual. Serializable to a single JSON artifact.
struct TrainedModel {
  std::vector<std::string> gp_feature_names;
  Standardizer standardizer;  // fitted on the gp features
  DetrendModel detrend;
  GpModel gp;
  LassoSelection selection;  // diagnostics from feature selection
  std::string training_digest;

  /// Standardized GP feature row for one input.
  Eigen::RowVectorXd gp_row(const InputVector& v) const;

  /// Posterior mean and standard deviation of log k_3p at one input
  /// (trend plus GP residual; the deviation includes the noise term).
  std::pair<double, double> predict_log_k3p(const InputVector& v) const;

  /// count x inputs.size() joint posterior draws of log k_3p: one
  /// correlated realization of the rate function per row.
  Eigen::MatrixXd sample_log_k3p(const std::vector<InputVector>& inputs,
                                 int count, Rng& rng) const;

  nlohmann::json to_json() const;
  static TrainedModel from_json(const nlohmann::json& j);

  void save(const std::filesystem::path& path) const;
  static TrainedModel load(const std::filesystem::path& path);
};

struct CalibrationResult {
  TrainedModel model;
  std::vector<PointwiseFit> fits;  // one per calibration point
  int non_converged = 0;
  double calibration_coverage = 0.0;  // fraction inside the 95% band
};

/// Reference CO fluxes of the full model, one per scenario point.
std::vector<double> hifi_co_fluxes(const Scenario& scenario,
                                   double site_density);

/// The calibration stage: per-point pseudo-rate fits (parallel across
/// points) against the supplied reference CO fluxes, feature selection,
/// linear detrending, GP training on the residuals. reference_co[i][j]
/// belongs to point j of scenario i.
CalibrationResult run_calibration(
    const std::vector<Scenario>& calibration,
    const std::vector<std::vector<double>>& reference_co,
    const PipelineConfig& config);

/// Fraction of targets within 1.96 posterior standard deviations of the
/// predicted mean.
double band_coverage(const TrainedModel& model,
                     const std::vector<InputVector>& inputs,
                     const std::vector<double>& targets);

}  // namespace surfchem
