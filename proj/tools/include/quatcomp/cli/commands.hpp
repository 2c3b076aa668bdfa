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

#ifndef QUATCOMP_CLI_COMMANDS_HPP_
#define QUATCOMP_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatcomp/imaging.hpp"
#include "quatcomp/problem.hpp"
#include "quatcomp/qlnf.hpp"
#include "quatcomp/tqlna.hpp"

namespace quatcomp::cli {

namespace fs = std::filesystem;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitFailure = 3;

enum class Method { kQlnf, kTqlna };

std::string_view to_string(Method method);

/// Accepts "qlnf" or "tqlna"; throws DomainError otherwise.
Method parse_method(std::string_view name);

struct SolverSettings {
  QlnfConfig qlnf;
  TqlnaConfig tqlna;

  std::size_t r_or_d(Method method) const;
  double lambda(Method method) const;
};

struct RunConfig {
  Method method = Method::kTqlna;
  SolverSettings solver;
  std::optional<double> sr;            // generate a mask at this rate
  std::optional<fs::path> mask_path;   // or read one
  std::uint64_t seed = 0;
  fs::path input;
  fs::path output;
  std::optional<fs::path> truth;       // reference for metrics; defaults to input
  std::optional<fs::path> csv;         // append one row when set

  /// Throws DomainError unless exactly one of sr and mask_path is set and
  /// the chosen method's parameters are in range.
  void validate() const;
};

struct MaskRequest {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double sr = 0.0;
  std::uint64_t seed = 0;
  fs::path output;
};

struct BenchmarkConfig {
  fs::path dir;
  std::vector<double> srs{0.10, 0.15, 0.25, 0.35, 0.45, 0.50};
  std::vector<Method> methods{Method::kQlnf, Method::kTqlna};
  SolverSettings solver;
  std::uint64_t seed = 0;
  fs::path csv;
  std::optional<fs::path> output_dir;  // recovered images, when set
  std::size_t workers = 1;
};

/// Result of completing one image.
struct CompletionOutcome {
  RgbImage recovered;
  MetricReport metrics;
  MetricReport baseline;   // zero-filled observation against the reference
  double wall_seconds = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::kMaxIterations;
};

/// Completes `observed` on `mask` and scores against `reference`. Only the
/// solver call is timed. Iterations count FISTA steps for QLNF and inner
/// ADMM steps for TQLNA.
CompletionOutcome run_completion(Method method, const SolverSettings& solver,
                                 const RgbImage& reference,
                                 const RgbImage& observed,
                                 const MaskMatrix& mask);

struct CsvRow {
  std::string image;
  Method method = Method::kQlnf;
  double sr = 0.0;
  std::size_t r_or_d = 0;
  double lambda = 0.0;
  std::optional<CompletionOutcome> outcome;  // empty for error rows
  std::string status;
};

std::string csv_header();
std::string format_csv_row(const CsvRow& row);

int cmd_mask(const MaskRequest& request, std::ostream& log);
int cmd_complete(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_benchmark(const BenchmarkConfig& config, std::ostream& log);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatcomp::cli

#endif  // QUATCOMP_CLI_COMMANDS_HPP_
