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

#include "quatcomp/cli/commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "quatcomp/error.hpp"
#include "quatcomp/png_io.hpp"

namespace quatcomp::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body` and turns exceptions into exit codes with a diagnostic.
template <typename F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    fmt::print(log, "error: {}\n", e.what());
    return kExitIo;
  } catch (const DomainError& e) {
    fmt::print(log, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(log, "error: {}\n", e.what());
    return kExitFailure;
  }
}

void require_same_size(const RgbImage& a, const RgbImage& b, const char* what) {
  if (a.width != b.width || a.height != b.height) {
    throw DimensionError(fmt::format("{}: {}x{} vs {}x{}", what, a.width,
                                     a.height, b.width, b.height));
  }
}

bool is_png(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

std::ofstream open_csv(const fs::path& path, std::ios::openmode mode) {
  std::ofstream f(path, mode);
  if (!f) throw IoError("cannot open CSV '" + path.string() + "' for writing");
  return f;
}

std::string output_name(const fs::path& image, Method method, double sr) {
  return fmt::format("{}_{}_sr{:02d}.png", image.stem().string(),
                     to_string(method), static_cast<int>(std::lround(sr * 100.0)));
}

}  // namespace

std::string_view to_string(Method method) {
  return method == Method::kQlnf ? "qlnf" : "tqlna";
}

Method parse_method(std::string_view name) {
  if (name == "qlnf") return Method::kQlnf;
  if (name == "tqlna") return Method::kTqlna;
  throw DomainError("unknown method '" + std::string(name) +
                    "' (expected qlnf or tqlna)");
}

std::size_t SolverSettings::r_or_d(Method method) const {
  return method == Method::kQlnf ? qlnf.d : tqlna.r;
}

double SolverSettings::lambda(Method method) const {
  return method == Method::kQlnf ? qlnf.lambda : tqlna.lambda;
}

void RunConfig::validate() const {
  if (sr.has_value() == mask_path.has_value()) {
    throw DomainError("exactly one of --sr and --mask must be given");
  }
  if (sr && !(*sr >= 0.0 && *sr <= 1.0)) {
    throw DomainError("--sr must lie in [0, 1]");
  }
  // Dimension-dependent checks run once the image size is known.
  if (method == Method::kQlnf) {
    solver.qlnf.validate(solver.qlnf.d, solver.qlnf.d);
  } else {
    solver.tqlna.validate(solver.tqlna.r, solver.tqlna.r);
  }
}

CompletionOutcome run_completion(Method method, const SolverSettings& solver,
                                 const RgbImage& reference,
                                 const RgbImage& observed,
                                 const MaskMatrix& mask) {
  require_same_size(reference, observed, "reference and observed images differ");
  const CompletionProblem problem(image_to_quaternion(observed), mask);

  CompletionOutcome out;
  out.baseline = evaluate(reference, quaternion_to_image(problem.observed()));

  QuaternionMatrix x;
  const auto start = Clock::now();
  if (method == Method::kQlnf) {
    QlnfResult res = solve_qlnf(problem, solver.qlnf);
    x = std::move(res.x);
    out.iterations = res.iterations;
    out.status = res.status;
  } else {
    TqlnaResult res = solve_tqlna(problem, solver.tqlna);
    x = std::move(res.x);
    out.iterations = res.inner_iterations;
    out.status = res.status;
  }
  out.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  out.recovered = quaternion_to_image(x);
  out.metrics = evaluate(reference, out.recovered);
  return out;
}

std::string csv_header() {
  return "image,method,sr,r_or_d,lambda,psnr_db,ssim,wall_seconds,iterations,"
         "status,baseline_psnr_db,baseline_ssim";
}

std::string format_csv_row(const CsvRow& row) {
  std::string head = fmt::format("{},{},{:g},{},{:g}", row.image,
                                 to_string(row.method), row.sr, row.r_or_d,
                                 row.lambda);
  if (!row.outcome) return head + ",,,,," + row.status + ",,";
  const CompletionOutcome& o = *row.outcome;
  return head + fmt::format(",{:.4f},{:.6f},{:.3f},{},{},{:.4f},{:.6f}",
                            o.metrics.psnr_db, o.metrics.ssim, o.wall_seconds,
                            o.iterations, row.status, o.baseline.psnr_db,
                            o.baseline.ssim);
}

int cmd_mask(const MaskRequest& request, std::ostream& log) {
  return guarded(log, [&] {
    if (request.rows == 0 || request.cols == 0) {
      throw DomainError("mask dimensions must be positive");
    }
    const MaskMatrix mask =
        gen_mask(request.rows, request.cols, request.sr, request.seed);
    write_mask_png(request.output, mask);
    fmt::print(log, "wrote {} ({}x{}, {} observed)\n", request.output.string(),
               request.rows, request.cols, mask.observed_count());
    return kExitOk;
  });
}

int cmd_complete(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    config.validate();
    if (config.mask_path && !fs::exists(*config.mask_path)) {
      throw IoError("mask file '" + config.mask_path->string() + "' not found");
    }
    const RgbImage input = read_png_rgb(config.input);
    const RgbImage reference = config.truth ? read_png_rgb(*config.truth) : input;
    require_same_size(reference, input, "truth and input images differ");
    const MaskMatrix mask = config.mask_path
                                ? read_mask_png(*config.mask_path)
                                : gen_mask(input.height, input.width, *config.sr,
                                           config.seed);
    if (mask.rows() != input.height || mask.cols() != input.width) {
      throw DimensionError(fmt::format("mask is {}x{} but image is {}x{}",
                                       mask.cols(), mask.rows(), input.width,
                                       input.height));
    }

    const CompletionOutcome outcome =
        run_completion(config.method, config.solver, reference, input, mask);
    write_png_rgb(config.output, outcome.recovered);

    const double sr = config.sr ? *config.sr : mask.sampling_rate();
    fmt::print(out,
               "method={} sr={:g} psnr_db={:.4f} ssim={:.6f} "
               "baseline_psnr_db={:.4f} baseline_ssim={:.6f} "
               "iterations={} wall_seconds={:.3f} status={}\n",
               to_string(config.method), sr, outcome.metrics.psnr_db,
               outcome.metrics.ssim, outcome.baseline.psnr_db,
               outcome.baseline.ssim, outcome.iterations, outcome.wall_seconds,
               to_string(outcome.status));

    if (config.csv) {
      const bool fresh = !fs::exists(*config.csv) || fs::file_size(*config.csv) == 0;
      std::ofstream csv = open_csv(*config.csv, std::ios::app);
      if (fresh) csv << csv_header() << '\n';
      CsvRow row{config.input.filename().string(), config.method, sr,
                 config.solver.r_or_d(config.method),
                 config.solver.lambda(config.method), outcome,
                 std::string(to_string(outcome.status))};
      csv << format_csv_row(row) << '\n';
    }
    return kExitOk;
  });
}

int cmd_benchmark(const BenchmarkConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    if (!fs::is_directory(config.dir)) {
      throw IoError("'" + config.dir.string() + "' is not a directory");
    }
    if (config.methods.empty() || config.srs.empty()) {
      throw DomainError("benchmark needs at least one method and one rate");
    }
    for (double sr : config.srs) {
      if (!(sr >= 0.0 && sr <= 1.0)) throw DomainError("--sr must lie in [0, 1]");
    }

    std::vector<fs::path> images;
    for (const auto& entry : fs::directory_iterator(config.dir)) {
      if (entry.is_regular_file() && is_png(entry.path())) {
        images.push_back(entry.path());
      }
    }
    std::sort(images.begin(), images.end());
    if (config.output_dir) fs::create_directories(*config.output_dir);

    std::ofstream csv = open_csv(config.csv, std::ios::trunc);
    csv << csv_header() << '\n';
    if (images.empty()) {
      fmt::print(log, "warning: no PNG images in '{}'\n", config.dir.string());
      return kExitOk;
    }

    struct Job {
      std::size_t image;
      Method method;
      double sr;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (Method m : config.methods) {
        for (double sr : config.srs) jobs.push_back({i, m, sr});
      }
    }

    std::vector<std::optional<RgbImage>> loaded(images.size());
    std::vector<std::string> load_errors(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      try {
        loaded[i] = read_png_rgb(images[i]);
      } catch (const Error& e) {
        load_errors[i] = e.what();
      }
    }

    std::vector<std::string> rows(jobs.size());
    std::vector<char> done(jobs.size(), 0);
    std::size_t flushed = 0;
    std::size_t failures = 0;
    std::mutex mu;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= jobs.size()) return;
        const Job& job = jobs[idx];
        CsvRow row{images[job.image].filename().string(), job.method, job.sr,
                   config.solver.r_or_d(job.method),
                   config.solver.lambda(job.method), std::nullopt, "error"};
        std::string message;
        try {
          if (!loaded[job.image]) throw IoError(load_errors[job.image]);
          const RgbImage& img = *loaded[job.image];
          const MaskMatrix mask = gen_mask(img.height, img.width, job.sr, config.seed);
          row.outcome = run_completion(job.method, config.solver, img, img, mask);
          row.status = std::string(to_string(row.outcome->status));
          if (config.output_dir) {
            write_png_rgb(*config.output_dir /
                              output_name(images[job.image], job.method, job.sr),
                          row.outcome->recovered);
          }
        } catch (const std::exception& e) {
          row.outcome.reset();
          row.status = "error";
          message = e.what();
        }

        std::lock_guard lock(mu);
        rows[idx] = format_csv_row(row);
        done[idx] = 1;
        if (row.outcome) {
          fmt::print(log, "[{}/{}] {} {} sr={:g}: {:.2f} dB in {:.1f} s\n",
                     idx + 1, jobs.size(), row.image, to_string(job.method),
                     job.sr, row.outcome->metrics.psnr_db,
                     row.outcome->wall_seconds);
        } else {
          ++failures;
          fmt::print(log, "[{}/{}] {} {} sr={:g}: error: {}\n", idx + 1,
                     jobs.size(), row.image, to_string(job.method), job.sr,
                     message);
        }
        while (flushed < jobs.size() && done[flushed]) {
          csv << rows[flushed++] << '\n';
        }
        csv.flush();
      }
    };

    const std::size_t n_workers =
        std::clamp<std::size_t>(config.workers, 1, jobs.size());
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(work);
      work();
    }
    if (!csv) throw IoError("failed writing '" + config.csv.string() + "'");
    return failures == 0 ? kExitOk : kExitFailure;
  });
}

}  // namespace quatcomp::cli
