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

// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any requested criterion
// fails.  Usage: acceptance [N] with N in 1..10 (default: run all).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tdesign/bounds.hpp"
#include "tdesign/gt_irrep.hpp"
#include "tdesign/moments.hpp"
#include "tdesign/quadrature.hpp"
#include "tdesign/rng.hpp"
#include "tdesign/sampling.hpp"
#include "tdesign/spectra.hpp"
#include "tdesign/stats.hpp"
#include "tdesign/weights.hpp"

namespace {

using namespace tdesign;
namespace fs = std::filesystem;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Collects failed expectations; the criterion passes when none failed.
struct Reporter {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (!ok) detail += "; ";
    ok = false;
    detail += what;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

// --- 1: quoted dimensions -------------------------------------------------

bool criterion_dimensions(std::string& detail) {
  Reporter r;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::vector<int>, std::int64_t>> cases = {
      {{1, 0, 0, -1}, 15},  {{2, 0, -1, -1}, 45}, {{3, 1, -1, -3}, 729},
      {{1, 1, 1, -3}, 35},  {{3, 0, 0, -3}, 300}, {{3, 3, 0, -6}, 1540},
  };
  for (const auto& [entries, want] : cases) {
    const Weight w(entries);
    const std::int64_t got = weyl_dimension(w);
    r.expect(got == want, w.to_string() + " -> " + std::to_string(got) +
                              ", want " + std::to_string(want));
  }
  for (int k = 1; k <= 500; ++k) {
    const std::int64_t got = weyl_dimension(Weight({k, -k}));
    if (got != 2 * k + 1) {
      r.fail("(" + std::to_string(k) + ",-" + std::to_string(k) + ") -> " +
             std::to_string(got) + ", want " + std::to_string(2 * k + 1));
      break;
    }
  }
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 1.0, "took " + fmt(elapsed) + " s, budget 1 s");
  detail = r.detail;
  return r.ok;
}

// --- 2: weight counts and the d=4, t=6 dimension span ---------------------

bool criterion_weight_counts(std::string& detail) {
  Reporter r;
  for (int d = 2; d <= 4; ++d) {
    const std::vector<Weight> ws = enumerate_weights(d, 6);
    for (int k = 1; k <= 6; ++k) {
      std::int64_t count = 0;
      for (const Weight& w : ws) count += w.one_norm() == 2 * k ? 1 : 0;
      const std::int64_t formula = rep_count_by_norm(d, k);
      r.expect(count == formula,
               "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                   ": enumerated " + std::to_string(count) + ", formula " +
                   std::to_string(formula));
    }
    if (d == 4) {
      std::int64_t lo = weyl_dimension(ws.front());
      std::int64_t hi = lo;
      for (const Weight& w : ws) {
        const std::int64_t dim = weyl_dimension(w);
        lo = std::min(lo, dim);
        hi = std::max(hi, dim);
      }
      r.expect(lo == 15, "min dimension " + std::to_string(lo) + ", want 15");
      r.expect(hi == 5200,
               "max dimension " + std::to_string(hi) + ", want 5200");
    }
  }
  detail = r.detail;
  return r.ok;
}

// --- 3: representation residuals ------------------------------------------

bool criterion_irrep_residuals(std::string& detail) {
  Reporter r;
  const auto start = std::chrono::steady_clock::now();
  const double tol = 1e-8;
  double worst = 0.0;
  std::string worst_at = "-";
  for (int d = 2; d <= 4; ++d) {
    for (const Weight& w : essential_weights(d, 3)) {
      const AlgebraRep rep = AlgebraRep::build(w);
      RngStream rng = RngStream::keyed(
          1003, {static_cast<std::uint64_t>(d), w.hash()});
      const Eigen::MatrixXcd id =
          Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
      for (int trial = 0; trial < 50; ++trial) {
        const Eigen::MatrixXcd u = haar_unitary(d, rng);
        const Eigen::MatrixXcd v = haar_unitary(d, rng);
        const Eigen::MatrixXcd pu = evaluate_irrep(rep, u);
        const Eigen::MatrixXcd pv = evaluate_irrep(rep, v);
        const double hom = (evaluate_irrep(rep, u * v) - pu * pv).norm();
        const double unitary = (pu.adjoint() * pu - id).norm();
        const double phi = 2.0 * M_PI * rng.uniform() - M_PI;
        const double phase =
            (evaluate_irrep(rep, std::polar(1.0, phi) * u) - pu).norm();
        std::vector<double> phases(static_cast<std::size_t>(d));
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
        for (int j = 0; j < d; ++j) {
          phases[static_cast<std::size_t>(j)] =
              2.0 * M_PI * rng.uniform() - M_PI;
          diag(j, j) = std::polar(1.0, phases[static_cast<std::size_t>(j)]);
        }
        const double character = std::abs(
            evaluate_irrep(rep, diag).trace() - weyl_character(w, phases));
        const double m = std::max({hom, unitary, phase, character});
        if (m > worst) {
          worst = m;
          worst_at = "d=" + std::to_string(d) + " " + w.to_string();
        }
      }
    }
  }
  r.expect(worst <= tol,
           "worst residual " + fmt(worst) + " at " + worst_at + ", tol 1e-8");
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 300.0, "took " + fmt(elapsed) + " s, budget 300 s");
  detail = r.detail;
  return r.ok;
}

// --- 4: the global-bound constant -----------------------------------------

bool criterion_b_constant(std::string& detail) {
  Reporter r;
  const double b = global_b_constant();
  r.expect(std::abs(b - 3855.93) <= 0.01,
           "b = " + fmt(b) + ", want 3855.93 +/- 0.01");
  detail = r.detail;
  return r.ok;
}

// --- 5: rank-2 union bound equals its closed form -------------------------

bool criterion_qubit_identity(std::string& detail) {
  Reporter r;
  double worst = 0.0;
  std::string worst_at = "-";
  for (Setting setting : {Setting::Plain, Setting::Symmetric}) {
    for (int t : {1, 5, 50, 500}) {
      for (int i = 1; i <= 60; ++i) {
        const double eps = 0.05 * i;  // covers [0.05, 3]
        const double u = union_bound_delta_t(2, t, eps, setting);
        const double q = qubit_closed_form(t, eps, setting);
        const double rel =
            std::abs(u - q) / std::max({1.0, std::abs(u), std::abs(q)});
        if (rel > worst) {
          worst = rel;
          worst_at = "t=" + std::to_string(t) + " eps=" + fmt(eps);
        }
      }
    }
  }
  r.expect(worst <= 1e-12,
           "worst relative gap " + fmt(worst) + " at " + worst_at);
  detail = r.detail;
  return r.ok;
}

// --- 6: Kesten-McKay moments ----------------------------------------------

bool criterion_kesten_moments(std::string& detail) {
  Reporter r;
  const auto start = std::chrono::steady_clock::now();
  for (int card : {3, 4, 6}) {
    const SpectralDensity sg = make_density(DensityKind::KestenSigned, card);
    const double a = sg.lower;
    const double b = sg.upper;
    for (int m = 1; m <= 8; ++m) {
      const double quad = integrate(
          [&](double uu) {
            const double s = std::sin(uu);
            const double x = a + (b - a) * s * s;
            const double dx = (b - a) * 2.0 * s * std::cos(uu);
            return std::pow(x, m) * density_at(sg, x) * dx;
          },
          0.0, M_PI / 2.0, 1e-10);
      const double closed = kesten_moment(card, m);
      r.expect(std::abs(quad - closed) <= 1e-6,
               "card=" + std::to_string(card) + " m=" + std::to_string(m) +
                   ": quadrature " + fmt(quad) + ", closed form " +
                   fmt(closed));
    }
  }
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 10.0, "took " + fmt(elapsed) + " s, budget 10 s");
  detail = r.detail;
  return r.ok;
}

// --- 7: ensemble statistics -----------------------------------------------

bool criterion_ensembles(std::string& detail) {
  Reporter r;
  const std::vector<std::pair<EnsembleKind, const char*>> kinds = {
      {EnsembleKind::GOE, "GOE"},
      {EnsembleKind::GUE, "GUE"},
      {EnsembleKind::RealGinibre, "real Ginibre"},
      {EnsembleKind::ComplexGinibre, "complex Ginibre"},
  };
  const int n_tr = 10000;
  const int size = 50;
  for (const auto& [kind, name] : kinds) {
    RngStream rng =
        RngStream::keyed(1007, {static_cast<std::uint64_t>(kind)});
    double acc = 0.0;
    for (int i = 0; i < n_tr; ++i) {
      acc += sample_ensemble(kind, size, rng).squaredNorm() / size;
    }
    const double mean = acc / n_tr;
    const double target =
        kind == EnsembleKind::GOE ? (size + 1.0) / size : 1.0;
    r.expect(std::abs(mean - target) <= 0.02,
             std::string(name) + " normalized trace " + fmt(mean) +
                 ", want " + fmt(target) + " +/- 0.02");
  }
  const int n_tail = 1000;
  for (const auto& [kind, name] : kinds) {
    for (int n : {15, 45, 101}) {
      RngStream rng = RngStream::keyed(
          2007,
          {static_cast<std::uint64_t>(kind), static_cast<std::uint64_t>(n)});
      std::vector<double> norms;
      norms.reserve(n_tail);
      for (int i = 0; i < n_tail; ++i) {
        norms.push_back(sample_ensemble_norm(kind, n, rng));
      }
      for (double eps : {0.1, 0.3, 0.5}) {
        const TailPoint tp = empirical_tail(norms, 2.0 + eps);
        const double bound = tail_bound_single(kind, n, eps);
        const double sigma = std::sqrt(bound * (1.0 - bound) / n_tail);
        r.expect(tp.p <= bound + 3.0 * sigma + 1e-12,
                 std::string(name) + " N=" + std::to_string(n) +
                     " eps=" + fmt(eps) + ": tail " + fmt(tp.p) +
                     " exceeds " + fmt(bound) + " + 3*" + fmt(sigma));
      }
    }
  }
  detail = r.detail;
  return r.ok;
}

// --- 8: block-norm concentration at desk scale ----------------------------

bool criterion_concentration(std::string& detail) {
  Reporter r;
  const auto start = std::chrono::steady_clock::now();
  const int samples = 500;
  const int generators = 7;  // symmetric set of cardinality 14
  const double cardinality = 2.0 * generators;
  const Weight w({50, -50});
  const AlgebraRep rep = AlgebraRep::build(w);
  std::vector<double> scaled;
  scaled.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    RngStream rng = RngStream::keyed(1008, {static_cast<std::uint64_t>(i)});
    const GateSet set = sample_gate_set(2, generators, true, rng);
    scaled.push_back(std::sqrt(cardinality) * moment_block(set, rep).norm);
  }
  const double emp_mean = summarize(scaled).mean;
  const double target = 2.0 * std::sqrt((cardinality - 1.0) / cardinality);
  r.expect(std::abs(emp_mean - target) <= 0.05,
           "scaled gate-set mean " + fmt(emp_mean) + ", want " + fmt(target) +
               " +/- 0.05");
  std::vector<double> model;
  model.reserve(samples);
  RngStream mrng = RngStream::keyed(2008, {0});
  for (int i = 0; i < samples; ++i) {
    model.push_back(sample_ensemble_norm(EnsembleKind::GOE, 101, mrng));
  }
  const double model_mean = summarize(model).mean;
  r.expect(std::abs(model_mean - 2.0) <= 0.05,
           "matrix-model mean " + fmt(model_mean) + ", want 2 +/- 0.05");
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 1800.0, "took " + fmt(elapsed) + " s, budget 1800 s");
  detail = r.detail;
  return r.ok;
}

// --- 9: tail ordering on the adjoint block ---------------------------------

bool criterion_ordering(std::string& detail) {
  Reporter r;
  const Weight w({1, 0, 0, -1});
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.1 * i);

  SampleTable model;
  model.config.d = 4;
  model.config.t = 1;
  model.config.sample_size = 1000;
  model.config.set_size = 2;
  model.config.is_symmetric = true;
  model.config.seed = 3009;
  model.config.scaling = ScalingMode::None;
  model.weights = {w};
  RngStream mrng = RngStream::keyed(3009, {0});
  for (int i = 0; i < model.config.sample_size; ++i) {
    model.rows.push_back(
        {sample_ensemble_norm(EnsembleKind::GOE,
                              static_cast<int>(weyl_dimension(w)), mrng)});
  }

  for (int n : {2, 4, 6}) {
    ExperimentConfig cfg;
    cfg.d = 4;
    cfg.t = 1;
    cfg.sample_size = 1000;
    cfg.set_size = n;
    cfg.is_symmetric = true;
    cfg.seed = 4009 + static_cast<std::uint64_t>(n);
    cfg.scaling = ScalingMode::SqrtS;
    const SampleTable empirical = run_empirical_experiment(cfg);
    const std::vector<ConjectureRow> report =
        conjecture_report(empirical, model, grid);
    r.expect(report.size() == grid.size(),
             "set size " + std::to_string(2 * n) + ": expected " +
                 std::to_string(grid.size()) + " report rows, got " +
                 std::to_string(report.size()));
    for (const ConjectureRow& row : report) {
      if (!row.ok) {
        r.fail("set size " + std::to_string(2 * n) + " eps=" + fmt(row.eps) +
               ": A=" + fmt(row.empirical_tail) +
               " B=" + fmt(row.model_tail) + " C=" + fmt(row.bound));
      }
    }
  }
  detail = r.detail;
  return r.ok;
}

// --- 10: byte-identical reruns across worker counts ------------------------

struct CliJob {
  std::string name;
  std::string args;     // "{OUT}" expands to the per-run directory
  std::string capture;  // file inside the run directory to compare
};

std::string replace_all(std::string s, const std::string& from,
                        const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<unreadable:" + p.string() + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion_determinism(std::string& detail) {
  Reporter r;
  const std::string cli = TDESIGN_CLI_PATH;
  const fs::path base = fs::temp_directory_path() / "tdesign_acceptance_c10";
  std::error_code ec;
  fs::remove_all(base, ec);
  fs::create_directories(base);

  const fs::path cfg_path = base / "config.json";
  {
    std::ofstream out(cfg_path);
    out << "{\"d\":3,\"t\":2,\"sample_size\":5,\"set_size\":2,\"seed\":13,"
           "\"is_symmetric\":true,\"scaling\":\"sqrtS\"}\n";
  }

  const auto run_cmd = [&](int threads, const std::string& args,
                           const fs::path& stdout_to) {
    std::string cmd = "TDESIGN_THREADS=" + std::to_string(threads) + " \"" +
                      cli + "\" " + args + " > \"" + stdout_to.string() +
                      "\" 2> /dev/null";
    return std::system(cmd.c_str()) == 0;
  };

  // Fixed inputs for the table-comparison subcommand, produced once.
  const fs::path in_dir = base / "inputs";
  fs::create_directories(in_dir);
  const std::string emp_csv = (in_dir / "empirical.csv").string();
  const std::string model_csv = (in_dir / "model.csv").string();
  if (!run_cmd(1,
               "sample-empirical --config " + cfg_path.string() + " --out " +
                   emp_csv,
               base / "setup1.log") ||
      !run_cmd(1,
               "sample-model --d 3 --t 2 --setting symmetric --samples 5 "
               "--seed 11 --out " +
                   model_csv,
               base / "setup2.log")) {
    detail = "failed to produce comparison inputs";
    return false;
  }

  const std::vector<CliJob> jobs = {
      {"weights", "weights --d 3 --t 3 --essential --format csv --out "
                  "{OUT}/weights.csv",
       "weights.csv"},
      {"irrep-check", "irrep-check --d 3 --t 2 --trials 3 --seed 7",
       "stdout.txt"},
      {"sample-model",
       "sample-model --d 3 --t 2 --setting symmetric --samples 5 --seed 11 "
       "--out {OUT}/model.csv",
       "model.csv"},
      {"sample-empirical",
       "sample-empirical --config " + cfg_path.string() +
           " --out {OUT}/empirical.csv",
       "empirical.csv"},
      {"bounds",
       "bounds --d 2 --t 5 --setting symmetric --eps-grid 0.1:1:0.1 --out "
       "{OUT}/bounds.csv",
       "bounds.csv"},
      {"spectra", "spectra --card 4 --grid 0:0.8:9 --out {OUT}/spectra.csv",
       "spectra.csv"},
      {"compare",
       "compare --empirical " + emp_csv + " --model " + model_csv +
           " --eps-grid 0.1:0.5:0.1 --out {OUT}/compare.csv",
       "compare.csv"},
  };

  for (const CliJob& job : jobs) {
    std::string baseline;
    for (int rep = 0; rep < 4; ++rep) {
      const int threads = rep % 2 == 0 ? 1 : 3;
      const fs::path dir = base / (job.name + "_run" + std::to_string(rep));
      fs::create_directories(dir);
      const std::string args = replace_all(job.args, "{OUT}", dir.string());
      const fs::path stdout_to = dir / "stdout.txt";
      if (!run_cmd(threads, args, stdout_to)) {
        r.fail(job.name + " exited nonzero on run " + std::to_string(rep));
        break;
      }
      const std::string bytes = slurp(dir / job.capture);
      if (rep == 0) {
        baseline = bytes;
        r.expect(baseline.rfind("<unreadable:", 0) != 0,
                 job.name + " produced no output file");
      } else {
        r.expect(bytes == baseline,
                 job.name + ": run " + std::to_string(rep) + " (threads=" +
                     std::to_string(threads) + ") differs from run 0");
      }
    }
  }
  fs::remove_all(base, ec);
  detail = r.detail;
  return r.ok;
}

// --- harness ----------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "known irrep dimensions, including the full (k,-k) ladder",
     &criterion_dimensions},
    {2, "weight counts match the partition formula; d=4 t=6 dimensions span "
        "15..5200",
     &criterion_weight_counts},
    {3, "homomorphism/unitarity/phase/character residuals within 1e-8",
     &criterion_irrep_residuals},
    {4, "global-bound constant b within 0.01 of 3855.93",
     &criterion_b_constant},
    {5, "d=2 union bound equals the closed form within 1e-12",
     &criterion_qubit_identity},
    {6, "Kesten-McKay quadrature moments match closed forms within 1e-6",
     &criterion_kesten_moments},
    {7, "ensemble trace normalization and norm tail bounds",
     &criterion_ensembles},
    {8, "block-norm concentration: scaled gate-set mean and matrix-model "
        "mean",
     &criterion_concentration},
    {9, "empirical <= model <= bound tail ordering without violations",
     &criterion_ordering},
    {10, "byte-identical outputs across reruns and worker counts",
     &criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (argc > 2 || only < 1 || only > 10) {
      std::cerr << "usage: acceptance [N]   (N in 1..10; default all)\n";
      return 2;
    }
  }
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << ": " << c.label;
    if (!ok && !detail.empty()) std::cout << " - " << detail;
    std::cout << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
