// Copyright 2026 The gazecut Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "eval.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace gazecut {

double ErrorReport::exact_percent() const {
  if (evaluated == 0 || histogram.empty()) return 0.0;
  return 100.0 * static_cast<double>(histogram[0]) / static_cast<double>(evaluated);
}

std::vector<long long> ErrorReport::bucketed(int last) const {
  std::vector<long long> out(static_cast<std::size_t>(last) + 1, 0);
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    out[std::min<std::size_t>(d, last)] += histogram[d];
  }
  return out;
}

ErrorReport error_count(const Labeling& labeling, const GroundTruthDepth& gt) {
  if (labeling.width != gt.width || labeling.height != gt.height) {
    throw Error(ErrorKind::config, "error count: labeling does not cover the ground-truth grid");
  }
  ErrorReport r;
  for (std::size_t i = 0; i < gt.label.size(); ++i) {
    if (gt.label[i] < 0) continue;
    const long long d = std::llabs(static_cast<long long>(labeling.label[i]) - gt.label[i]);
    if (static_cast<std::size_t>(d) >= r.histogram.size()) r.histogram.resize(d + 1, 0);
    ++r.histogram[d];
    r.total += d;
    ++r.evaluated;
  }
  if (r.histogram.empty()) r.histogram.push_back(0);
  return r;
}

ErrorReport report_from_histogram(std::span<const long long> histogram) {
  ErrorReport r;
  r.histogram.assign(histogram.begin(), histogram.end());
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    r.total += static_cast<long long>(d) * histogram[d];
    r.evaluated += histogram[d];
  }
  if (r.histogram.empty()) r.histogram.push_back(0);
  return r;
}

std::string format_report(const ErrorReport& report) {
  std::ostringstream out;
  const std::vector<long long> b = report.bucketed(10);
  for (std::size_t d = 0; d < b.size(); ++d) {
    out << (d + 1 == b.size() ? "10~" : std::to_string(d)) << ' ' << b[d] << '\n';
  }
  out << "error " << report.total << '\n';
  out << "evaluated " << report.evaluated << '\n';
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f", report.exact_percent());
  out << "exact_percent " << pct << '\n';
  return out.str();
}

std::string method_id(const MethodConfig& config) {
  if (config.level == 0) return "exact";
  return "l" + std::to_string(config.level) + "b" + std::to_string(config.block_size);
}

CutResult solve_method(const CostVolume& volume, const EnergyParams& params,
                       const MethodConfig& config, const HierarchyOptions& options) {
  HierarchyOptions h = options;
  h.block_size = config.block_size;
  switch (config.level) {
    case 0:
      return solve_exact(volume, params, options.solve);
    case 1:
      return solve_level1(volume, params, h).fine;
    case 2:
      return solve_level2(volume, params, h).fine;
  }
  throw Error(ErrorKind::config, "level must be 0, 1 or 2");
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

template <class Job>
void run_parallel(std::size_t count, int threads, Job&& job) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            job(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<SweepRecord> sweep_penalty(const CostVolume& volume, const GroundTruthDepth* gt,
                                       std::span<const Cost> penalties, Cost inhibit,
                                       bool hard_inhibit, const SolveOptions& options,
                                       int threads) {
  if (penalties.empty()) throw Error(ErrorKind::config, "sweep: no penalty values");
  std::vector<SweepRecord> out(penalties.size());
  run_parallel(penalties.size(), threads, [&](std::size_t i) {
    EnergyParams params{penalties[i], inhibit, hard_inhibit};
    const auto start = std::chrono::steady_clock::now();
    const CutResult r = solve_exact(volume, params, options);
    SweepRecord& rec = out[i];
    rec.penalty = penalties[i];
    rec.inhibit = inhibit;
    rec.flow = r.flow;
    rec.energy = r.energy;
    if (gt != nullptr) rec.error = error_count(r.labeling, *gt);
    rec.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return out;
}

std::string sweep_csv(std::span<const SweepRecord> records, bool timings) {
  std::ostringstream out;
  out << "penalty,inhibit,error,exact_percent,evaluated,flow,energy";
  if (timings) out << ",seconds";
  out << '\n';
  for (const SweepRecord& r : records) {
    out << r.penalty << ',' << r.inhibit << ',';
    if (r.error) {
      out << r.error->total << ',' << fixed(r.error->exact_percent(), 2) << ','
          << r.error->evaluated;
    } else {
      out << ",,";
    }
    out << ',' << r.flow << ',' << r.energy;
    if (timings) out << ',' << fixed(r.seconds, 3);
    out << '\n';
  }
  return out.str();
}

std::vector<ComparisonRow> compare_methods(const CostVolume& volume, const GroundTruthDepth* gt,
                                           const EnergyParams& params,
                                           std::span<const MethodConfig> configs,
                                           const HierarchyOptions& options) {
  std::vector<ComparisonRow> rows;
  for (const MethodConfig& c : configs) {
    const auto start = std::chrono::steady_clock::now();
    const CutResult r = solve_method(volume, params, c, options);
    ComparisonRow row;
    row.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.config = c;
    row.energy = r.energy;
    row.flow = r.flow;
    row.termination = r.stats.termination;
    row.seconds = r.seconds;
    if (gt != nullptr) row.error = error_count(r.labeling, *gt);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string comparison_csv(std::span<const ComparisonRow> rows, bool timings) {
  std::ostringstream out;
  out << "method,level,block_size,error,exact_percent,evaluated,energy,termination";
  if (timings) out << ",build_seconds,flow_seconds,extract_seconds,total_seconds";
  out << '\n';
  for (const ComparisonRow& r : rows) {
    out << method_id(r.config) << ',' << r.config.level << ',' << r.config.block_size << ',';
    if (r.error) {
      out << r.error->total << ',' << fixed(r.error->exact_percent(), 2) << ','
          << r.error->evaluated;
    } else {
      out << ",,";
    }
    out << ',' << r.energy << ',' << to_string(r.termination);
    if (timings) {
      out << ',' << fixed(r.seconds.build, 3) << ',' << fixed(r.seconds.flow, 3) << ','
          << fixed(r.seconds.extract, 3) << ',' << fixed(r.total_seconds, 3);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gazecut
