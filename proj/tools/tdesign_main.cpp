// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Every file-producing run writes a sibling
// .manifest.json recording the subcommand, the full configuration, the root
// seed, timestamps, and output digests, so runs can be audited and repeated.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdesign/bounds.hpp"
#include "tdesign/errors.hpp"
#include "tdesign/gt_irrep.hpp"
#include "tdesign/manifest.hpp"
#include "tdesign/moments.hpp"
#include "tdesign/rng.hpp"
#include "tdesign/sampling.hpp"
#include "tdesign/spectra.hpp"
#include "tdesign/stats.hpp"
#include "tdesign/table_io.hpp"
#include "tdesign/weights.hpp"

namespace {

using nlohmann::json;
using namespace tdesign;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Setting parse_setting(const std::string& s) {
  if (s == "plain") return Setting::Plain;
  if (s == "symmetric") return Setting::Symmetric;
  throw ArgumentError("setting must be 'plain' or 'symmetric'");
}

std::string render_text_table(const std::vector<std::string>& columns,
                              const std::vector<std::vector<std::string>>& rows) {
  std::string text;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) text += ',';
    text += columns[c];
  }
  text += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      text += row[c];
    }
    text += '\n';
  }
  return text;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) {
    out.close();
    std::remove(path.c_str());
    throw ResourceError("write failure on '" + path + "'");
  }
}

void finish_with_manifest(const std::string& subcommand, const json& config,
                          std::uint64_t root_seed, const std::string& started,
                          const std::vector<std::string>& outputs) {
  const json manifest = build_manifest(subcommand, config, root_seed, started,
                                       iso8601_utc_now(), outputs);
  write_manifest(manifest_path_for(outputs.front()), manifest);
}

struct WeightsOptions {
  int d = 0;
  int t = 0;
  bool essential = false;
  std::string format = "csv";
  std::string out;
};

int run_weights(const WeightsOptions& opt) {
  const std::string started = iso8601_utc_now();
  const std::vector<Weight> ws = opt.essential
                                     ? essential_weights(opt.d, opt.t)
                                     : enumerate_weights(opt.d, opt.t);
  std::string text;
  if (opt.format == "json") {
    json arr = json::array();
    for (const Weight& w : ws) {
      arr.push_back(
          {{"entries", w.entries()},
           {"class", classify(w) == WeightClass::Real ? "real" : "complex"},
           {"dimension", weyl_dimension(w)},
           {"one_norm", w.one_norm()}});
    }
    text = arr.dump(2) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(ws.size());
    for (const Weight& w : ws) {
      rows.push_back(
          {w.label(),
           classify(w) == WeightClass::Real ? "real" : "complex",
           std::to_string(weyl_dimension(w)), std::to_string(w.one_norm())});
    }
    text = render_text_table({"weight", "class", "dimension", "one_norm"},
                             rows);
  }
  if (opt.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  write_text_file(opt.out, text);
  finish_with_manifest("weights",
                       json{{"d", opt.d},
                            {"t", opt.t},
                            {"essential", opt.essential},
                            {"format", opt.format}},
                       0, started, {opt.out});
  return kExitOk;
}

struct IrrepCheckOptions {
  int d = 0;
  int t = 0;
  int trials = 20;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

int run_irrep_check(const IrrepCheckOptions& opt) {
  if (opt.trials < 1) throw ArgumentError("trials must be >= 1");
  if (!(opt.tol > 0)) throw ArgumentError("tol must be positive");
  constexpr std::uint64_t kCheckTag = 0x6972726570;  // stream domain tag
  double worst = 0.0;
  for (const Weight& w : essential_weights(opt.d, opt.t)) {
    const AlgebraRep rep = AlgebraRep::build(w);
    const auto n = rep.dim();
    RngStream rng = RngStream::keyed(opt.seed, {kCheckTag, w.hash()});
    double hom = 0.0, unitary = 0.0, phase = 0.0, character = 0.0;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const Eigen::MatrixXcd u = haar_unitary(opt.d, rng);
      const Eigen::MatrixXcd v = haar_unitary(opt.d, rng);
      const double angle = 2.0 * M_PI * rng.uniform();
      const Eigen::MatrixXcd pu = evaluate_irrep(rep, u);
      const Eigen::MatrixXcd pv = evaluate_irrep(rep, v);
      const Eigen::MatrixXcd puv = evaluate_irrep(rep, u * v);
      hom = std::max(hom, (pu * pv - puv).norm());
      unitary = std::max(
          unitary,
          (pu.adjoint() * pu - Eigen::MatrixXcd::Identity(n, n)).norm());
      const Eigen::MatrixXcd shifted = evaluate_irrep(
          rep, std::polar(1.0, angle) * u);
      phase = std::max(phase, (shifted - pu).norm());
      const Eigen::VectorXcd eig = u.eigenvalues();
      std::vector<double> phases(static_cast<std::size_t>(opt.d));
      for (int j = 0; j < opt.d; ++j) phases[j] = std::arg(eig(j));
      character = std::max(
          character, std::abs(pu.trace() - weyl_character(w, phases)));
    }
    std::cout << "weight=" << w.to_string() << " dim=" << n
              << " hom=" << hom << " unitary=" << unitary
              << " phase=" << phase << " character=" << character << "\n";
    worst = std::max({worst, hom, unitary, phase, character});
  }
  std::cout << "max residual = " << worst << " (tol " << opt.tol << ")\n";
  return worst <= opt.tol ? kExitOk : kExitCheckFailed;
}

struct SampleModelOptions {
  int d = 0;
  int t = 0;
  std::string setting = "symmetric";
  int samples = 0;
  std::uint64_t seed = 0;
  std::string norm_method = "exact";
  std::string out;
};

int run_sample_model(const SampleModelOptions& opt) {
  if (opt.samples < 1) throw ArgumentError("samples must be >= 1");
  const std::string started = iso8601_utc_now();
  const Setting setting = parse_setting(opt.setting);
  const NormMethod method = opt.norm_method == "iterative"
                                ? NormMethod::Iterative
                                : NormMethod::Exact;
  const std::vector<Weight> ws = essential_weights(opt.d, opt.t);
  std::vector<std::string> columns{"sample_index"};
  for (const Weight& w : ws) columns.push_back(w.label());
  columns.push_back("delta_t");

  CsvWriter writer(opt.out, columns);
  try {
    const int log_every = std::max(1, opt.samples / 10);
    for (int i = 0; i < opt.samples; ++i) {
      const BlockNormSample s = sample_model_block_norms(
          opt.d, opt.t, setting, opt.seed,
          static_cast<std::uint64_t>(i), method);
      std::vector<double> row;
      row.reserve(ws.size() + 2);
      row.push_back(static_cast<double>(i));
      row.insert(row.end(), s.norms.begin(), s.norms.end());
      row.push_back(s.delta_t);
      writer.append(row);
      if ((i + 1) % log_every == 0 || i + 1 == opt.samples) {
        std::cerr << "sample-model: " << (i + 1) << "/" << opt.samples
                  << " samples\n";
      }
    }
    writer.close();
  } catch (...) {
    writer.abort_file();
    throw;
  }
  finish_with_manifest("sample-model",
                       json{{"d", opt.d},
                            {"t", opt.t},
                            {"setting", opt.setting},
                            {"samples", opt.samples},
                            {"seed", opt.seed},
                            {"norm_method", opt.norm_method}},
                       opt.seed, started, {opt.out});
  return kExitOk;
}

struct SampleEmpiricalOptions {
  std::string config_path;
  std::string out;
};

int run_sample_empirical(const SampleEmpiricalOptions& opt) {
  const std::string started = iso8601_utc_now();
  const ExperimentConfig config = load_experiment_config(opt.config_path);
  std::vector<std::string> columns{"sample_index"};
  for (const Weight& w : essential_weights(config.d, config.t)) {
    columns.push_back(w.label());
  }

  CsvWriter writer(opt.out, columns);
  const int log_every = std::max(1, config.sample_size / 10);
  try {
    run_empirical_experiment(
        config, /*workers=*/0,
        [&](std::size_t index, const std::vector<double>& row) {
          std::vector<double> full;
          full.reserve(row.size() + 1);
          full.push_back(static_cast<double>(index));
          full.insert(full.end(), row.begin(), row.end());
          writer.append(full);
          const std::size_t done = index + 1;
          if (done % static_cast<std::size_t>(log_every) == 0 ||
              done == static_cast<std::size_t>(config.sample_size)) {
            std::cerr << "sample-empirical: " << done << "/"
                      << config.sample_size << " samples\n";
          }
        });
    writer.close();
  } catch (...) {
    writer.abort_file();
    throw;
  }
  finish_with_manifest("sample-empirical", experiment_config_to_json(config),
                       config.seed, started, {opt.out});
  return kExitOk;
}

struct BoundsOptions {
  int d = 0;
  int t = 0;
  std::string setting = "symmetric";
  std::string eps_grid;
  std::string out;
};

int run_bounds(const BoundsOptions& opt) {
  const std::string started = iso8601_utc_now();
  const Setting setting = parse_setting(opt.setting);
  const std::vector<double> grid = parse_step_grid(opt.eps_grid);

  Table table;
  table.columns = {"eps", "union", "product"};
  if (opt.d == 2) table.columns.push_back("qubit_closed");
  table.columns.push_back("global");
  table.columns.push_back("global_valid");
  for (double eps : grid) {
    std::vector<double> row{eps,
                            union_bound_delta_t(opt.d, opt.t, eps, setting),
                            product_bound_delta_t(opt.d, opt.t, eps, setting)};
    if (opt.d == 2) row.push_back(qubit_closed_form(opt.t, eps, setting));
    const BoundResult g = global_bound(opt.d, eps, setting);
    row.push_back(g.value);
    row.push_back(g.valid ? 1.0 : 0.0);
    table.rows.push_back(std::move(row));
  }
  write_csv(opt.out, table);
  finish_with_manifest("bounds",
                       json{{"d", opt.d},
                            {"t", opt.t},
                            {"setting", opt.setting},
                            {"eps_grid", opt.eps_grid}},
                       0, started, {opt.out});
  return kExitOk;
}

struct SpectraOptions {
  int card = 0;
  std::string grid;
  std::string out;
};

int run_spectra(const SpectraOptions& opt) {
  const std::string started = iso8601_utc_now();
  const std::vector<double> xs = parse_count_grid(opt.grid);
  const SpectralDensity signed_density =
      make_density(DensityKind::KestenSigned, opt.card);
  const SpectralDensity singular =
      make_density(DensityKind::KestenSingular, opt.card);
  const SpectralDensity rescaled =
      make_density(DensityKind::KestenRescaled, opt.card);
  const SpectralDensity quarter =
      make_density(DensityKind::QuarterCircle, opt.card);

  Table table;
  table.columns = {"x", "signed", "singular", "rescaled", "quarter_circle"};
  for (double x : xs) {
    table.rows.push_back({x, density_at(signed_density, x),
                          density_at(singular, x), density_at(rescaled, x),
                          density_at(quarter, x)});
  }
  write_csv(opt.out, table);
  finish_with_manifest("spectra",
                       json{{"card", opt.card}, {"grid", opt.grid}}, 0,
                       started, {opt.out});
  return kExitOk;
}

struct CompareOptions {
  std::string empirical;
  std::string model;
  std::string eps_grid;
  std::string out;
};

json load_checked_manifest(const std::string& data_path,
                           const std::string& expected_subcommand) {
  const json m = load_manifest(manifest_path_for(data_path));
  const auto errors = manifest_schema_errors(m);
  if (!errors.empty()) {
    std::string message = "manifest for '" + data_path + "' is invalid:";
    for (const auto& e : errors) message += "\n  " + e;
    throw ConfigError(message);
  }
  if (m["subcommand"].get<std::string>() != expected_subcommand) {
    throw ConfigError("'" + data_path + "' was not produced by " +
                      expected_subcommand);
  }
  return m;
}

int run_compare(const CompareOptions& opt) {
  const std::string started = iso8601_utc_now();
  const json emp_manifest = load_checked_manifest(opt.empirical,
                                                  "sample-empirical");
  const json mod_manifest = load_checked_manifest(opt.model, "sample-model");

  const ExperimentConfig config =
      parse_experiment_config(emp_manifest["config"]);
  const json& mc = mod_manifest["config"];
  if (!mc.contains("d") || !mc.contains("t") || !mc.contains("setting")) {
    throw ConfigError("model manifest config lacks d/t/setting");
  }
  const Setting model_setting = parse_setting(mc["setting"].get<std::string>());
  if (mc["d"].get<int>() != config.d || mc["t"].get<int>() != config.t ||
      (model_setting == Setting::Symmetric) != config.is_symmetric) {
    throw ConfigError("empirical and model tables disagree on d/t/setting");
  }

  const std::vector<Weight> ws = essential_weights(config.d, config.t);
  const Table emp_csv = read_csv(opt.empirical);
  const Table mod_csv = read_csv(opt.model);

  auto check_columns = [&ws](const Table& table, std::size_t extra,
                             const std::string& path) {
    if (table.columns.size() != ws.size() + 1 + extra ||
        table.columns[0] != "sample_index") {
      throw ConfigError("'" + path + "' has unexpected columns");
    }
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (table.columns[k + 1] != ws[k].label()) {
        throw ConfigError("'" + path + "' has unexpected columns");
      }
    }
  };
  check_columns(emp_csv, 0, opt.empirical);
  check_columns(mod_csv, 1, opt.model);  // trailing delta_t column

  auto to_sample_table = [&ws](const Table& csv) {
    SampleTable t;
    t.weights = ws;
    t.rows.reserve(csv.rows.size());
    for (const auto& row : csv.rows) {
      t.rows.emplace_back(row.begin() + 1, row.begin() + 1 +
                                               static_cast<std::ptrdiff_t>(
                                                   ws.size()));
    }
    return t;
  };
  SampleTable emp = to_sample_table(emp_csv);
  emp.config = config;
  SampleTable mod = to_sample_table(mod_csv);
  mod.config = config;

  const std::vector<double> grid = parse_step_grid(opt.eps_grid);
  const std::vector<ConjectureRow> report = conjecture_report(emp, mod, grid);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.size());
  int violations = 0;
  for (const ConjectureRow& r : report) {
    rows.push_back({r.weight.label(), format_value(r.eps),
                    format_value(r.empirical_tail),
                    format_value(r.empirical_se), format_value(r.model_tail),
                    format_value(r.model_se), format_value(r.bound),
                    r.ok ? "1" : "0"});
    violations += r.ok ? 0 : 1;
  }
  write_text_file(opt.out,
                  render_text_table(
                      {"lambda", "eps", "A", "A_se", "B", "B_se", "C", "ok"},
                      rows));
  finish_with_manifest("compare",
                       json{{"empirical", opt.empirical},
                            {"model", opt.model},
                            {"eps_grid", opt.eps_grid}},
                       config.seed, started, {opt.out});
  std::cerr << "compare: " << report.size() << " rows, " << violations
            << " ordering violations\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Moment-operator experiments for random gate sets: weight tables, "
      "representation checks, block-norm sampling, tail bounds, limiting "
      "spectra, and ordering reports."};
  app.require_subcommand(1);

  WeightsOptions weights_opt;
  CLI::App* weights_cmd = app.add_subcommand(
      "weights", "List weights with class, dimension and one-norm");
  weights_cmd->add_option("--d", weights_opt.d, "Base dimension (>= 2)")
      ->required();
  weights_cmd->add_option("--t", weights_opt.t, "Moment order (>= 1)")
      ->required();
  weights_cmd->add_flag("--essential", weights_opt.essential,
                        "One weight per conjugation orbit");
  weights_cmd->add_option("--format", weights_opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  weights_cmd->add_option("--out", weights_opt.out,
                          "Output file (default: stdout)");

  IrrepCheckOptions irrep_opt;
  CLI::App* irrep_cmd = app.add_subcommand(
      "irrep-check",
      "Print representation residuals; exit 1 if any exceeds --tol");
  irrep_cmd->add_option("--d", irrep_opt.d, "Base dimension (>= 2)")
      ->required();
  irrep_cmd->add_option("--t", irrep_opt.t, "Moment order (>= 1)")
      ->required();
  irrep_cmd->add_option("--trials", irrep_opt.trials,
                        "Random unitaries per weight");
  irrep_cmd->add_option("--tol", irrep_opt.tol, "Residual tolerance");
  irrep_cmd->add_option("--seed", irrep_opt.seed, "Root seed")->required();

  SampleModelOptions model_opt;
  CLI::App* model_cmd = app.add_subcommand(
      "sample-model", "Sample block norms of the Gaussian limit model");
  model_cmd->add_option("--d", model_opt.d, "Base dimension (>= 2)")
      ->required();
  model_cmd->add_option("--t", model_opt.t, "Moment order (>= 1)")
      ->required();
  model_cmd->add_option("--setting", model_opt.setting, "plain or symmetric")
      ->check(CLI::IsMember({"plain", "symmetric"}));
  model_cmd->add_option("--samples", model_opt.samples, "Number of samples")
      ->required();
  model_cmd->add_option("--seed", model_opt.seed, "Root seed")->required();
  model_cmd->add_option("--norm-method", model_opt.norm_method,
                        "exact or iterative")
      ->check(CLI::IsMember({"exact", "iterative"}));
  model_cmd->add_option("--out", model_opt.out, "Output CSV path")
      ->required();

  SampleEmpiricalOptions empirical_opt;
  CLI::App* empirical_cmd = app.add_subcommand(
      "sample-empirical",
      "Sample scaled moment-block norms of random gate sets");
  empirical_cmd
      ->add_option("--config", empirical_opt.config_path,
                   "Experiment config JSON")
      ->required();
  empirical_cmd->add_option("--out", empirical_opt.out, "Output CSV path")
      ->required();

  BoundsOptions bounds_opt;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Tabulate analytic tail bounds");
  bounds_cmd->add_option("--d", bounds_opt.d, "Base dimension (>= 2)")
      ->required();
  bounds_cmd->add_option("--t", bounds_opt.t, "Moment order (>= 1)")
      ->required();
  bounds_cmd->add_option("--setting", bounds_opt.setting,
                         "plain or symmetric")
      ->check(CLI::IsMember({"plain", "symmetric"}));
  bounds_cmd->add_option("--eps-grid", bounds_opt.eps_grid,
                         "Grid a:b:step (inclusive)")
      ->required();
  bounds_cmd->add_option("--out", bounds_opt.out, "Output CSV path")
      ->required();

  SpectraOptions spectra_opt;
  CLI::App* spectra_cmd = app.add_subcommand(
      "spectra", "Tabulate limiting spectral densities");
  spectra_cmd->add_option("--card", spectra_opt.card,
                          "Gate-set cardinality (>= 2)")
      ->required();
  spectra_cmd->add_option("--grid", spectra_opt.grid, "Grid a:b:n")
      ->required();
  spectra_cmd->add_option("--out", spectra_opt.out, "Output CSV path")
      ->required();

  CompareOptions compare_opt;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Empirical vs model vs bound tail-ordering report");
  compare_cmd
      ->add_option("--empirical", compare_opt.empirical,
                   "Empirical CSV (from sample-empirical)")
      ->required();
  compare_cmd
      ->add_option("--model", compare_opt.model,
                   "Model CSV (from sample-model)")
      ->required();
  compare_cmd->add_option("--eps-grid", compare_opt.eps_grid,
                          "Grid a:b:step (inclusive)")
      ->required();
  compare_cmd->add_option("--out", compare_opt.out, "Output CSV path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (weights_cmd->parsed()) return run_weights(weights_opt);
    if (irrep_cmd->parsed()) return run_irrep_check(irrep_opt);
    if (model_cmd->parsed()) return run_sample_model(model_opt);
    if (empirical_cmd->parsed()) return run_sample_empirical(empirical_opt);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opt);
    if (spectra_cmd->parsed()) return run_spectra(spectra_opt);
    if (compare_cmd->parsed()) return run_compare(compare_opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}
