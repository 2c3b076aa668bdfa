// Copyright 2026 The Quatcomp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fmt/ostream.h>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "quatcomp/cli/commands.hpp"
#include "quatcomp/error.hpp"

namespace quatcomp::cli {

namespace {

struct SharedFlags {
  std::vector<std::string> methods;
  std::vector<double> srs;
  std::string mask;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::size_t rank_d = 0;
  std::size_t trunc_r = 0;
  double rho = 0.0;
  double beta0 = 0.0;
  double beta_max = 0.0;
  double tol = 0.0;
  std::size_t max_iter = 0;
  double inner_tol = 0.0;
  std::size_t inner_max = 0;
  std::size_t workers = 1;
  std::string csv;
};

struct Given {
  CLI::Option* methods;
  CLI::Option* srs;
  CLI::Option* mask;
  CLI::Option* lambda;
  CLI::Option* epsilon;
  CLI::Option* rank_d;
  CLI::Option* trunc_r;
  CLI::Option* rho;
  CLI::Option* beta0;
  CLI::Option* beta_max;
  CLI::Option* tol;
  CLI::Option* max_iter;
  CLI::Option* inner_tol;
  CLI::Option* inner_max;
  CLI::Option* csv;
};

SolverSettings solver_settings(const SharedFlags& f, const Given& g) {
  SolverSettings s;
  if (*g.lambda) s.qlnf.lambda = s.tqlna.lambda = f.lambda;
  if (*g.epsilon) s.qlnf.epsilon = s.tqlna.epsilon = f.epsilon;
  if (*g.rank_d) s.qlnf.d = f.rank_d;
  if (*g.trunc_r) s.tqlna.r = f.trunc_r;
  if (*g.rho) s.tqlna.rho = f.rho;
  if (*g.beta0) s.tqlna.beta0 = f.beta0;
  if (*g.beta_max) s.tqlna.beta_max = f.beta_max;
  if (*g.tol) s.qlnf.tol = s.tqlna.outer_tol = f.tol;
  if (*g.max_iter) s.qlnf.max_iter = s.tqlna.outer_max = f.max_iter;
  if (*g.inner_tol) s.tqlna.inner_tol = f.inner_tol;
  if (*g.inner_max) s.tqlna.inner_max = f.inner_max;
  return s;
}

std::size_t workers_from_env() {
  const char* raw = std::getenv("QUATCOMP_WORKERS");
  if (raw == nullptr || *raw == '\0') return 1;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw DomainError("QUATCOMP_WORKERS must be a positive integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<Method> methods_of(const SharedFlags& f) {
  std::vector<Method> out;
  for (const auto& name : f.methods) out.push_back(parse_method(name));
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-rank quaternion matrix completion for color images"};
  app.name("quatcomp");
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  SharedFlags f;
  Given g{};
  g.methods = app.add_option("--method", f.methods, "qlnf or tqlna (benchmark: comma list)")
                  ->delimiter(',');
  g.srs = app.add_option("--sr", f.srs, "sampling rate in [0,1] (benchmark: comma list)")
              ->delimiter(',');
  g.mask = app.add_option("--mask", f.mask, "mask PNG (255 = observed)");
  app.add_option("--seed", f.seed, "mask generation seed");
  g.lambda = app.add_option("--lambda", f.lambda, "log-norm weight");
  g.epsilon = app.add_option("--epsilon", f.epsilon, "log-norm offset");
  g.rank_d = app.add_option("--rank-d", f.rank_d, "QLNF factor width d");
  g.trunc_r = app.add_option("--trunc-r", f.trunc_r, "TQLNA truncation r");
  g.rho = app.add_option("--rho", f.rho, "TQLNA penalty growth");
  g.beta0 = app.add_option("--beta0", f.beta0, "TQLNA initial penalty");
  g.beta_max = app.add_option("--beta-max", f.beta_max, "TQLNA penalty cap");
  g.tol = app.add_option("--tol", f.tol, "QLNF tolerance / TQLNA outer tolerance");
  g.max_iter = app.add_option("--max-iter", f.max_iter,
                              "QLNF iteration cap / TQLNA outer iteration cap");
  g.inner_tol = app.add_option("--inner-tol", f.inner_tol, "TQLNA inner tolerance");
  g.inner_max = app.add_option("--inner-max", f.inner_max, "TQLNA inner iteration cap");
  auto* workers_opt = app.add_option(
      "--workers", f.workers, "parallel benchmark jobs (default: $QUATCOMP_WORKERS or 1)");
  g.csv = app.add_option("--csv", f.csv, "CSV output path");

  MaskRequest mask_req;
  auto* mask_cmd = app.add_subcommand("mask", "write a random sampling mask PNG");
  mask_cmd->add_option("--rows", mask_req.rows, "mask height")->required();
  mask_cmd->add_option("--cols", mask_req.cols, "mask width")->required();
  mask_cmd->add_option("-o,--output", mask_req.output, "output PNG")->required();

  RunConfig run_cfg;
  std::string truth;
  auto* complete_cmd = app.add_subcommand("complete", "complete one image");
  complete_cmd->add_option("input", run_cfg.input, "input PNG")->required();
  complete_cmd->add_option("-o,--output", run_cfg.output, "recovered PNG")->required();
  auto* truth_opt =
      complete_cmd->add_option("--truth", truth, "reference PNG for metrics (default: input)");

  BenchmarkConfig bench;
  std::string output_dir;
  auto* bench_cmd = app.add_subcommand("benchmark", "sweep a directory of PNG images");
  bench_cmd->add_option("dir", bench.dir, "image directory")->required();
  auto* outdir_opt =
      bench_cmd->add_option("--output-dir", output_dir, "write recovered images here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!*workers_opt) f.workers = workers_from_env();
    if (f.workers == 0) throw DomainError("--workers must be at least 1");
    const std::vector<Method> methods = methods_of(f);
    const SolverSettings solver = solver_settings(f, g);

    if (*mask_cmd) {
      if (f.srs.size() != 1) throw DomainError("mask needs exactly one --sr");
      mask_req.sr = f.srs.front();
      mask_req.seed = f.seed;
      return cmd_mask(mask_req, err);
    }
    if (*complete_cmd) {
      if (methods.size() > 1) throw DomainError("complete takes a single --method");
      if (f.srs.size() > 1) throw DomainError("complete takes a single --sr");
      if (!methods.empty()) run_cfg.method = methods.front();
      run_cfg.solver = solver;
      if (!f.srs.empty()) run_cfg.sr = f.srs.front();
      if (*g.mask) run_cfg.mask_path = f.mask;
      run_cfg.seed = f.seed;
      if (*truth_opt) run_cfg.truth = truth;
      if (*g.csv) run_cfg.csv = f.csv;
      return cmd_complete(run_cfg, out, err);
    }
    if (*g.mask) throw DomainError("benchmark generates its own masks; drop --mask");
    if (!*g.csv) throw DomainError("benchmark requires --csv");
    if (!methods.empty()) bench.methods = methods;
    if (!f.srs.empty()) bench.srs = f.srs;
    bench.solver = solver;
    bench.seed = f.seed;
    bench.csv = f.csv;
    bench.workers = f.workers;
    if (*outdir_opt) bench.output_dir = output_dir;
    return cmd_benchmark(bench, err);
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
}

}  // namespace quatcomp::cli
