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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "energy.hpp"
#include "graphcut.hpp"
#include "hierarchy.hpp"
#include "imaging.hpp"

namespace gazecut {

/// Depth-number error of a labeling against ground truth.
struct ErrorReport {
  long long total = 0;                // sum of |label - truth| over evaluated sites
  std::vector<long long> histogram;   // sites per difference 0..max observed
  long long evaluated = 0;

  double exact_percent() const;
  /// Counts for differences 0..last-1 and a final bucket for >= last.
  std::vector<long long> bucketed(int last = 10) const;
};

/// Throws config error if the labeling does not cover the ground-truth grid.
ErrorReport error_count(const Labeling& labeling, const GroundTruthDepth& gt);

/// Rebuilds a report from per-difference counts.
ErrorReport report_from_histogram(std::span<const long long> histogram);

/// Text table: one "d count" line per bucket, then totals.
std::string format_report(const ErrorReport& report);

/// Level 0 = exact, 1 and 2 = hierarchy levels.
struct MethodConfig {
  int level = 0;
  int block_size = 1;
};

std::string method_id(const MethodConfig& config);

/// Runs one method and returns the fine-level result.
CutResult solve_method(const CostVolume& volume, const EnergyParams& params,
                       const MethodConfig& config, const HierarchyOptions& options);

struct SweepRecord {
  Cost penalty = 0;
  Cost inhibit = 0;
  std::optional<ErrorReport> error;
  Cost flow = 0;
  Cost energy = 0;
  double seconds = 0;
};

/// One exact solve per penalty, reported in input order. Points run on up to
/// `threads` workers.
std::vector<SweepRecord> sweep_penalty(const CostVolume& volume, const GroundTruthDepth* gt,
                                       std::span<const Cost> penalties, Cost inhibit,
                                       bool hard_inhibit, const SolveOptions& options,
                                       int threads = 1);

std::string sweep_csv(std::span<const SweepRecord> records, bool timings);

struct ComparisonRow {
  MethodConfig config;
  std::optional<ErrorReport> error;
  Cost energy = 0;
  Cost flow = 0;
  Termination termination = Termination::converged;
  StageSeconds seconds;
  double total_seconds = 0;
};

std::vector<ComparisonRow> compare_methods(const CostVolume& volume, const GroundTruthDepth* gt,
                                           const EnergyParams& params,
                                           std::span<const MethodConfig> configs,
                                           const HierarchyOptions& options);

std::string comparison_csv(std::span<const ComparisonRow> rows, bool timings);

}  // namespace gazecut
