#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfchem/errors.hpp"
#include "surfchem/pipeline.hpp"
#include "surfchem/propagation.hpp"
#include "surfchem/steady.hpp"
#include "surfchem/synthetic.hpp"
#include "surfchem/transient.hpp"

namespace fs = std::filesystem;
using namespace surfchem;

namespace {

std::string altitude_tag(double altitude_km) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", altitude_km);
  return buffer;
}

std::vector<double> all_altitudes(const PipelineConfig& config) {
  std::vector<double> alts = config.calibration_altitudes;
  alts.insert(alts.end(), config.validation_altitudes.begin(),
              config.validation_altitudes.end());
  std::sort(alts.begin(), alts.end());
  return alts;
}

fs::path scenario_path(const PipelineConfig& config, double altitude_km) {
  return fs::path(config.output_dir) / "scenarios" /
         ("scenario_" + altitude_tag(altitude_km) + "km.csv");
}

fs::path results_path(const PipelineConfig& config, const std::string& model,
                      double altitude_km) {
  return fs::path(config.output_dir) / "results" /
         (model + "_" + altitude_tag(altitude_km) + "km.csv");
}

fs::path artifact_path(const PipelineConfig& config) {
  return fs::path(config.output_dir) / "model" / "artifact.json";
}

fs::path fits_path(const PipelineConfig& config) {
  return fs::path(config.output_dir) / "model" / "pointwise_fits.csv";
}

fs::path diagnostics_path(const PipelineConfig& config) {
  return fs::path(config.output_dir) / "model" / "diagnostics.json";
}

fs::path ratios_path(const PipelineConfig& config, double altitude_km) {
  return fs::path(config.output_dir) / "qoi" /
         ("ratios_" + altitude_tag(altitude_km) + "km.csv");
}

fs::path band_path(const PipelineConfig& config, double altitude_km) {
  return fs::path(config.output_dir) / "qoi" /
         ("band_" + altitude_tag(altitude_km) + "km.csv");
}

fs::path qoi_summary_path(const PipelineConfig& config) {
  return fs::path(config.output_dir) / "qoi" / "summary.csv";
}

fs::path report_results_path(const PipelineConfig& config,
                             double altitude_km) {
  return fs::path(config.output_dir) / "report" /
         ("results_" + altitude_tag(altitude_km) + "km.csv");
}

fs::path report_summary_path(const PipelineConfig& config) {
  return fs::path(config.output_dir) / "report" / "ratio_summary.csv";
}

void refuse_existing(const fs::path& path, bool force) {
  if (!force && fs::exists(path)) {
    throw IoError(path.string() + " already exists; pass --force to replace");
  }
}

void ensure_parent(const fs::path& path) {
  fs::create_directories(path.parent_path());
}

Scenario read_required_scenario(const PipelineConfig& config,
                                double altitude_km) {
  const fs::path path = scenario_path(config, altitude_km);
  if (!fs::exists(path)) {
    throw IoError("scenario file " + path.string() +
                  " does not exist; run the generate command first");
  }
  return read_scenario(path);
}

NumericTable read_required_results(const PipelineConfig& config,
                                   const std::string& model,
                                   double altitude_km) {
  const fs::path path = results_path(config, model, altitude_km);
  if (!fs::exists(path)) {
    throw IoError("results file " + path.string() +
                  " does not exist; run the simulate command with --model " +
                  model + " first");
  }
  return read_table(path);
}

std::vector<double> table_column(const NumericTable& table,
                                 const std::string& name,
                                 const fs::path& origin) {
  const auto it =
      std::find(table.columns.begin(), table.columns.end(), name);
  if (it == table.columns.end()) {
    throw IoError(origin.string() + " lacks required column " + name);
  }
  const std::size_t c =
      static_cast<std::size_t>(it - table.columns.begin());
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back(row[c]);
  return out;
}

struct SimulateSettings {
  std::string model;
  std::string artifact;  // enriched only
  std::optional<double> constant_k3p;
  bool no_placeholder_adsorption = false;
  bool verify = false;
  bool force = false;
};

double relative_gap(double value, double oracle, double site_density) {
  const double scale = std::max(std::abs(oracle), 1e-25 * site_density);
  return std::abs(value - oracle) / scale;
}

int cmd_generate(const PipelineConfig& config, bool force) {
  const std::vector<double> alts = all_altitudes(config);
  const std::vector<Scenario> scenarios =
      generate_synthetic_scenarios(config.seed, alts);
  nlohmann::json manifest;
  manifest["schema_version"] = 1;
  manifest["seed"] = config.seed;
  std::vector<std::string> files;
  for (const Scenario& s : scenarios) {
    const fs::path path = scenario_path(config, s.altitude_km);
    refuse_existing(path, force);
    ensure_parent(path);
    write_scenario(s, path);
    files.push_back(path.filename().string());
    std::cout << "wrote " << path.string() << " (" << s.label << ")\n";
  }
  manifest["files"] = files;
  const fs::path manifest_path =
      fs::path(config.output_dir) / "scenarios" / "manifest.json";
  std::ofstream out(manifest_path);
  if (!out) throw IoError("cannot write " + manifest_path.string());
  out << manifest.dump(2) << '\n';
  return 0;
}

int cmd_simulate(const PipelineConfig& config,
                 const SimulateSettings& settings) {
  std::optional<TrainedModel> trained;
  if (settings.model == "enriched" && !settings.constant_k3p &&
      !settings.no_placeholder_adsorption) {
    const fs::path path = settings.artifact.empty()
                              ? artifact_path(config)
                              : fs::path(settings.artifact);
    if (!fs::exists(path)) {
      throw IoError("enriched simulation needs a trained model artifact (" +
                    path.string() +
                    " not found) or an explicit --k3p value");
    }
    trained = TrainedModel::load(path);
  }

  const SurfaceModel kind = settings.model == "hifi"  ? SurfaceModel::Hifi
                            : settings.model == "lofi" ? SurfaceModel::Lofi
                                                        : SurfaceModel::Enriched;
  double worst_deviation = 0.0;
  for (double altitude : all_altitudes(config)) {
    const Scenario scenario = read_required_scenario(config, altitude);
    NumericTable table;
    table.columns = {"altitude_km", "x_m",  "f_CO",         "f_CO2",
                     "f_O",         "f_O2", "f_CN",         "f_N",
                     "f_N2",        "cov_weak_O", "cov_strong_O", "cov_N",
                     "cov_P",       "free_sites"};
    for (const ScenarioPoint& point : scenario.points) {
      const GasState gas = build_gas_state(point);
      EnrichmentRates rates;
      if (settings.model == "enriched" &&
          !settings.no_placeholder_adsorption) {
        const double k3p =
            settings.constant_k3p
                ? *settings.constant_k3p
                : pseudo_rate_from_log(
                      trained->predict_log_k3p(build_input_vector(point))
                          .first);
        rates = physics_enrichment_rates(gas.temperature,
                                         config.site_density, k3p);
      }
      SurfaceSolution sol;
      switch (kind) {
        case SurfaceModel::Hifi:
          sol = solve_hifi(gas, config.site_density);
          break;
        case SurfaceModel::Lofi:
          sol = solve_lofi(gas, config.site_density);
          break;
        case SurfaceModel::Enriched:
          sol = solve_enriched(gas, config.site_density, rates);
          break;
      }
      if (settings.verify) {
        const RelaxResult oracle =
            relax_to_steady(kind, gas, config.site_density, rates);
        const double dev = std::max(
            {relative_gap(sol.coverages.weak_o, oracle.coverages.weak_o,
                          config.site_density),
             relative_gap(sol.coverages.strong_o, oracle.coverages.strong_o,
                          config.site_density),
             relative_gap(sol.coverages.nitrogen, oracle.coverages.nitrogen,
                          config.site_density),
             relative_gap(sol.coverages.placeholder,
                          oracle.coverages.placeholder, config.site_density),
             relative_gap(sol.free_sites, oracle.free_sites,
                          config.site_density)});
        worst_deviation = std::max(worst_deviation, dev);
      }
      table.rows.push_back({point.altitude_km, point.x_m, sol.fluxes.co,
                            sol.fluxes.co2, sol.fluxes.o, sol.fluxes.o2,
                            sol.fluxes.cn, sol.fluxes.n, sol.fluxes.n2,
                            sol.coverages.weak_o, sol.coverages.strong_o,
                            sol.coverages.nitrogen, sol.coverages.placeholder,
                            sol.free_sites});
    }
    const fs::path path = results_path(config, settings.model, altitude);
    refuse_existing(path, settings.force);
    ensure_parent(path);
    write_table(table, path);
    std::cout << "wrote " << path.string() << "\n";
  }
  if (settings.verify) {
    std::printf("max relative coverage deviation vs transient oracle: %.3e\n",
                worst_deviation);
    if (worst_deviation > 1e-6) {
      std::cerr << "verification failed: deviation exceeds 1e-6\n";
      return 2;
    }
  }
  return 0;
}

int cmd_calibrate(const PipelineConfig& config, bool force) {
  std::vector<Scenario> scenarios;
  std::vector<std::vector<double>> reference_co;
  for (double altitude : config.calibration_altitudes) {
    scenarios.push_back(read_required_scenario(config, altitude));
    const fs::path results = results_path(config, "hifi", altitude);
    reference_co.push_back(table_column(
        read_required_results(config, "hifi", altitude), "f_CO", results));
  }

  const CalibrationResult result =
      run_calibration(scenarios, reference_co, config);
  const std::size_t total = result.fits.size();
  const double converged_fraction =
      1.0 - static_cast<double>(result.non_converged) /
                static_cast<double>(total);
  for (const PointwiseFit& fit : result.fits) {
    if (!fit.converged) {
      std::printf("non-converged fit at altitude %g km, x = %g m\n",
                  fit.input.altitude_km, fit.input.x_m);
    }
  }
  std::printf("pointwise fits converged: %zu / %zu\n",
              total - static_cast<std::size_t>(result.non_converged), total);
  if (converged_fraction < 0.95) {
    throw CalibrationError(
        "fewer than 95% of pointwise fits converged; no artifact written");
  }

  NumericTable fits;
  fits.columns = {"altitude_km", "x_m",    "temperature", "total_pressure",
                  "flux_O",      "flux_N", "flux_O2",     "conc_O",
                  "conc_N",      "conc_O2", "log_k3p_opt", "loss_at_opt",
                  "converged"};
  for (const PointwiseFit& fit : result.fits) {
    fits.rows.push_back({fit.input.altitude_km, fit.input.x_m,
                         fit.input.temperature, fit.input.total_pressure,
                         fit.input.flux_o, fit.input.flux_n, fit.input.flux_o2,
                         fit.input.conc_o, fit.input.conc_n, fit.input.conc_o2,
                         fit.log_k3p_opt, fit.loss_at_opt,
                         fit.converged ? 1.0 : 0.0});
  }

  nlohmann::json diagnostics;
  diagnostics["calibration_band_coverage"] = result.calibration_coverage;
  diagnostics["pointwise_converged_fraction"] = converged_fraction;
  diagnostics["selected_features"] = result.model.selection.selected;
  diagnostics["dropped_features"] = result.model.selection.dropped;
  diagnostics["chosen_lambda"] = result.model.selection.chosen_lambda;
  diagnostics["gp_log_marginal_likelihood"] =
      result.model.gp.log_marginal_likelihood();
  diagnostics["training_digest"] = result.model.training_digest;

  // Held-out check: fit the validation points the same way and ask how
  // many land inside the predictive band. Skipped when the validation
  // scenarios or their reference fluxes are missing.
  bool have_validation = !config.validation_altitudes.empty();
  for (double altitude : config.validation_altitudes) {
    if (!fs::exists(scenario_path(config, altitude)) ||
        !fs::exists(results_path(config, "hifi", altitude))) {
      have_validation = false;
    }
  }
  if (have_validation) {
    std::vector<InputVector> inputs;
    std::vector<double> targets;
    for (double altitude : config.validation_altitudes) {
      const Scenario scenario = read_required_scenario(config, altitude);
      const std::vector<double> hifi_co = table_column(
          read_required_results(config, "hifi", altitude), "f_CO",
          results_path(config, "hifi", altitude));
      for (std::size_t i = 0; i < scenario.points.size(); ++i) {
        const PointwiseFit fit = fit_pointwise(
            build_input_vector(scenario.points[i]),
            build_gas_state(scenario.points[i]), config.site_density,
            hifi_co[i], config.pointwise);
        inputs.push_back(fit.input);
        targets.push_back(fit.log_k3p_opt);
      }
    }
    diagnostics["validation_band_coverage"] =
        band_coverage(result.model, inputs, targets);
  }

  const fs::path artifact = artifact_path(config);
  refuse_existing(artifact, force);
  ensure_parent(artifact);
  result.model.save(artifact);
  std::cout << "wrote " << artifact.string() << " (digest "
            << result.model.training_digest << ")\n";

  const fs::path fits_file = fits_path(config);
  refuse_existing(fits_file, force);
  write_table(fits, fits_file);
  std::cout << "wrote " << fits_file.string() << "\n";

  const fs::path diag_file = diagnostics_path(config);
  refuse_existing(diag_file, force);
  std::ofstream out(diag_file);
  if (!out) throw IoError("cannot write " + diag_file.string());
  out << diagnostics.dump(2) << '\n';
  std::printf("calibration band coverage: %.4f\n",
              result.calibration_coverage);
  if (diagnostics.contains("validation_band_coverage")) {
    std::printf("validation band coverage: %.4f\n",
                diagnostics["validation_band_coverage"].get<double>());
  }
  return 0;
}

int cmd_propagate(const PipelineConfig& config,
                  const std::string& artifact_override, bool force) {
  const fs::path artifact = artifact_override.empty()
                                ? artifact_path(config)
                                : fs::path(artifact_override);
  if (!fs::exists(artifact)) {
    throw IoError("trained model artifact " + artifact.string() +
                  " does not exist; run the calibrate command first");
  }
  const TrainedModel model = TrainedModel::load(artifact);

  NumericTable summary;
  summary.columns = {"altitude_km", "ratio_hifi",  "ratio_lofi",
                     "median",      "q1",          "q3",
                     "whisker_lo",  "whisker_hi",  "failed_samples"};
  for (double altitude : all_altitudes(config)) {
    const Scenario scenario = read_required_scenario(config, altitude);
    PropagationOptions options;
    options.sample_count = config.sample_count;
    options.seed = config.seed;
    options.site_density = config.site_density;
    const FluxRatioResult result = propagate(scenario, model, options);

    NumericTable ratios;
    ratios.columns = {"sample_index", "ratio"};
    for (std::size_t i = 0; i < result.ratio_enriched_samples.size(); ++i) {
      ratios.rows.push_back(
          {static_cast<double>(i), result.ratio_enriched_samples[i]});
    }
    const fs::path ratio_file = ratios_path(config, altitude);
    refuse_existing(ratio_file, force);
    ensure_parent(ratio_file);
    write_table(ratios, ratio_file);

    NumericTable band;
    band.columns = {"altitude_km", "x_m", "f_CO_enriched_mean",
                    "f_CO_enriched_q05", "f_CO_enriched_q95"};
    for (std::size_t i = 0; i < scenario.points.size(); ++i) {
      band.rows.push_back({scenario.altitude_km, scenario.points[i].x_m,
                           result.enriched_co_mean[i],
                           result.enriched_co_q05[i],
                           result.enriched_co_q95[i]});
    }
    const fs::path band_file = band_path(config, altitude);
    refuse_existing(band_file, force);
    write_table(band, band_file);

    summary.rows.push_back({result.altitude_km, result.ratio_hifi,
                            result.ratio_lofi, result.summary.median,
                            result.summary.q1, result.summary.q3,
                            result.summary.whisker_lo,
                            result.summary.whisker_hi,
                            static_cast<double>(result.failed_samples)});
    std::printf(
        "altitude %g km: lofi ratio %.4f, enriched median %.4f "
        "[q1 %.4f, q3 %.4f], failed samples %d\n",
        altitude, result.ratio_lofi, result.summary.median,
        result.summary.q1, result.summary.q3, result.failed_samples);
  }
  const fs::path summary_file = qoi_summary_path(config);
  refuse_existing(summary_file, force);
  write_table(summary, summary_file);
  std::cout << "wrote " << summary_file.string() << "\n";
  return 0;
}

int cmd_report(const PipelineConfig& config, bool force) {
  for (double altitude : all_altitudes(config)) {
    const NumericTable hifi = read_required_results(config, "hifi", altitude);
    const NumericTable lofi = read_required_results(config, "lofi", altitude);
    const fs::path band_file = band_path(config, altitude);
    if (!fs::exists(band_file)) {
      throw IoError("band file " + band_file.string() +
                    " does not exist; run the propagate command first");
    }
    const NumericTable band = read_table(band_file);
    if (hifi.rows.size() != lofi.rows.size() ||
        hifi.rows.size() != band.rows.size()) {
      throw IoError("results for altitude " + altitude_tag(altitude) +
                    " km disagree on the number of stations");
    }

    const std::vector<double> x = table_column(
        hifi, "x_m", results_path(config, "hifi", altitude));
    const std::vector<double> x_lofi = table_column(
        lofi, "x_m", results_path(config, "lofi", altitude));
    const std::vector<double> x_band = table_column(band, "x_m", band_file);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != x_lofi[i] || x[i] != x_band[i]) {
        throw IoError("station positions disagree across model results for "
                      "altitude " + altitude_tag(altitude) + " km");
      }
    }

    NumericTable merged;
    merged.columns = {"altitude_km",
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
    const auto hifi_co = table_column(
        hifi, "f_CO", results_path(config, "hifi", altitude));
    const auto lofi_co = table_column(
        lofi, "f_CO", results_path(config, "lofi", altitude));
    const auto mean = table_column(band, "f_CO_enriched_mean", band_file);
    const auto q05 = table_column(band, "f_CO_enriched_q05", band_file);
    const auto q95 = table_column(band, "f_CO_enriched_q95", band_file);
    const auto cov_w = table_column(
        hifi, "cov_weak_O", results_path(config, "hifi", altitude));
    const auto cov_s = table_column(
        hifi, "cov_strong_O", results_path(config, "hifi", altitude));
    const auto cov_n = table_column(
        hifi, "cov_N", results_path(config, "hifi", altitude));
    const auto free_sites = table_column(
        hifi, "free_sites", results_path(config, "hifi", altitude));
    for (std::size_t i = 0; i < x.size(); ++i) {
      merged.rows.push_back({altitude, x[i], hifi_co[i], lofi_co[i], mean[i],
                             q05[i], q95[i], cov_w[i], cov_s[i], cov_n[i],
                             free_sites[i]});
    }
    const fs::path out = report_results_path(config, altitude);
    refuse_existing(out, force);
    ensure_parent(out);
    write_table(merged, out);
    std::cout << "wrote " << out.string() << "\n";
  }

  const fs::path summary_file = qoi_summary_path(config);
  if (!fs::exists(summary_file)) {
    throw IoError("summary file " + summary_file.string() +
                  " does not exist; run the propagate command first");
  }
  const NumericTable summary = read_table(summary_file);
  const fs::path out = report_summary_path(config);
  refuse_existing(out, force);
  ensure_parent(out);
  write_table(summary, out);
  std::cout << "wrote " << out.string() << "\n";

  std::printf("%-12s %-12s %-12s %-12s\n", "altitude_km", "ratio_lofi",
              "enr_median", "enr_iqr");
  const auto alt = table_column(summary, "altitude_km", summary_file);
  const auto lofi = table_column(summary, "ratio_lofi", summary_file);
  const auto median = table_column(summary, "median", summary_file);
  const auto q1 = table_column(summary, "q1", summary_file);
  const auto q3 = table_column(summary, "q3", summary_file);
  for (std::size_t i = 0; i < alt.size(); ++i) {
    std::printf("%-12g %-12.4f %-12.4f [%.4f, %.4f]\n", alt[i], lofi[i],
                median[i], q1[i], q3[i]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-rate gas-surface chemistry: high-fidelity, reduced and "
      "data-enriched surface models with calibration and uncertainty "
      "propagation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> out_override;
  std::optional<int> samples_override;
  app.add_option("--config", config_file, "JSON pipeline config file");
  app.add_option("--seed", seed_override, "override the config seed");
  app.add_option("--out", out_override, "override the output directory");
  app.add_option("--samples", samples_override,
                 "override the posterior sample count");

  bool gen_force = false;
  CLI::App* generate =
      app.add_subcommand("generate", "write synthetic scenario files");
  generate->add_flag("--force", gen_force, "overwrite existing files");

  SimulateSettings sim;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "solve one surface model over every scenario");
  simulate->add_option("--model", sim.model, "hifi, lofi or enriched")
      ->required()
      ->check(CLI::IsMember({"hifi", "lofi", "enriched"}));
  simulate->add_option("--artifact", sim.artifact,
                       "trained model artifact for the enriched model");
  double k3p_value = 0.0;
  CLI::Option* k3p_opt = simulate->add_option(
      "--k3p", k3p_value, "constant pseudo rate for the enriched model, 1/s");
  simulate->add_flag(
      "--no-placeholder-adsorption", sim.no_placeholder_adsorption,
      "run the enriched model with the placeholder reactions switched off "
      "(reduces it to the low-fidelity model)");
  simulate->add_flag("--verify", sim.verify,
                     "also integrate the surface ODEs to steady state and "
                     "report the worst relative coverage deviation");
  simulate->add_flag("--force", sim.force, "overwrite existing files");

  bool cal_force = false;
  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "fit the pseudo-rate surrogate on calibration scenarios");
  calibrate->add_flag("--force", cal_force, "overwrite existing files");

  bool prop_force = false;
  std::string prop_artifact;
  CLI::App* propagate_cmd = app.add_subcommand(
      "propagate", "Monte Carlo propagation of the pseudo-rate posterior");
  propagate_cmd->add_option("--artifact", prop_artifact,
                            "trained model artifact path");
  propagate_cmd->add_flag("--force", prop_force, "overwrite existing files");

  bool rep_force = false;
  CLI::App* report = app.add_subcommand(
      "report", "merge per-model results into the final tables");
  report->add_flag("--force", rep_force, "overwrite existing files");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config;
    if (!config_file.empty()) {
      config = load_config(config_file);
    }
    if (seed_override) config.seed = *seed_override;
    if (out_override) config.output_dir = *out_override;
    if (samples_override) config.sample_count = *samples_override;
    config.validate();
    if (*k3p_opt) sim.constant_k3p = k3p_value;

    if (generate->parsed()) return cmd_generate(config, gen_force);
    if (simulate->parsed()) return cmd_simulate(config, sim);
    if (calibrate->parsed()) return cmd_calibrate(config, cal_force);
    if (propagate_cmd->parsed())
      return cmd_propagate(config, prop_artifact, prop_force);
    if (report->parsed()) return cmd_report(config, rep_force);
    std::cerr << "no subcommand\n";
    return 4;
  } catch (const SolverFailureError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const SingularPlaceholderError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const FactorizationError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateQoiError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const CalibrationError& e) {
    std::cerr << "calibration failure: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateSigmaError& e) {
    std::cerr << "calibration failure: " << e.what() << "\n";
    return 3;
  } catch (const CollinearDesignError& e) {
    std::cerr << "calibration failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
