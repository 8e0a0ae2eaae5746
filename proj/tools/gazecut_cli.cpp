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

// gazecut command-line front end.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gazecut/gazecut.h"

namespace {

enum Exit {
  kOk = 0,
  kFailure = 1,  // selftest failure or internal error
  kUsage = 2,    // bad configuration or arguments
  kIo = 3,       // unreadable input, malformed file, failed write
  kSolver = 4,   // infeasible problem or iteration cap
};

int exit_code(gazecut_status s) {
  switch (s) {
    case GAZECUT_OK:
      return kOk;
    case GAZECUT_ERR_IO:
    case GAZECUT_ERR_FORMAT:
      return kIo;
    case GAZECUT_ERR_CONFIG:
    case GAZECUT_ERR_GEOMETRY:
    case GAZECUT_ERR_ARGUMENT:
      return kUsage;
    case GAZECUT_ERR_SOLVER:
      return kSolver;
    case GAZECUT_ERR_INTERNAL:
      return kFailure;
  }
  return kFailure;
}

struct Failure {
  int code;
};

void check(gazecut_status s, const char* what) {
  if (s == GAZECUT_OK) return;
  std::cerr << "gazecut: " << what << ": " << gazecut_last_error() << '\n';
  throw Failure{exit_code(s)};
}

struct SceneDeleter {
  void operator()(gazecut_scene* s) const { gazecut_scene_free(s); }
};
struct ResultDeleter {
  void operator()(gazecut_result* r) const { gazecut_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { gazecut_string_free(s); }
};
using ScenePtr = std::unique_ptr<gazecut_scene, SceneDeleter>;
using ResultPtr = std::unique_ptr<gazecut_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct RunConfig {
  std::string command;
  std::string left, right, gt;
  gazecut_cuboid_config cuboid{};
  std::vector<int> frame;  // lw rw h
  gazecut_solve_config solve{};
  std::string solver = "push-relabel";
  std::uint64_t seed = 20260101;
  bool timings = false;

  // solve
  std::string out_disparity, out_labels, out_stats, dump_graph;
  int disparity_scale = 0;
  // sweep
  int from = 2, to = 30, step = 2;
  std::vector<long long> penalties;
  std::string out_csv;
  // compare
  std::string methods = "0:1,1:2,1:3,2:3";
  // selftest
  int scale = 1;
  bool force_failure = false;
  // convert-gt
  std::string out_gt;

  RunConfig() {
    gazecut_cuboid_config_default(&cuboid);
    gazecut_solve_config_default(&solve);
  }

  // Stable key=value serialization embedded in every output file.
  std::vector<std::pair<std::string, std::string>> entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    auto add = [&](const std::string& k, const auto& v) {
      std::ostringstream os;
      os << v;
      e.emplace_back(k, os.str());
    };
    add("command", command);
    add("left", left);
    add("right", right);
    add("gt", gt);
    add("gt_scale", cuboid.gt_scale);
    add("mask_border", cuboid.mask_border);
    add("dis_min", cuboid.dis_min);
    add("dis_max", cuboid.dis_max);
    add("margin", cuboid.margin);
    add("gaze_extent", cuboid.gaze_extent);
    if (cuboid.has_frame) {
      add("lw_offset", cuboid.lw);
      add("rw_offset", cuboid.rw);
      add("h_offset", cuboid.h);
    }
    add("penalty", solve.penalty);
    add("inhibit", solve.inhibit);
    add("hard_inhibit", solve.hard_inhibit);
    add("level", solve.level);
    add("block_size", solve.block_size);
    add("skin_radius", solve.skin_radius);
    add("solver", solver);
    add("rounds_per_sweep", solve.rounds_per_sweep);
    add("chain_init", solve.chain_init);
    add("wave_iterations", solve.wave_iterations);
    add("max_iterations", solve.max_iterations);
    add("threads", solve.threads);
    add("seed", seed);
    return e;
  }

  std::string header() const {
    std::string out;
    for (const auto& [k, v] : entries()) out += k + "=" + v + "\n";
    return out;
  }

  std::string hashed_header() const {
    std::string out;
    for (const auto& [k, v] : entries()) out += "# " + k + "=" + v + "\n";
    return out;
  }
};

void add_scene_options(CLI::App* app, RunConfig& c, bool images) {
  if (images) {
    app->add_option("--left", c.left, "Left image (PPM)")->required();
    app->add_option("--right", c.right, "Right image (PPM)")->required();
    app->add_option("--gt", c.gt, "Ground-truth disparity (PGM)");
  }
  app->add_option("--gt-scale", c.cuboid.gt_scale, "Ground-truth value per pixel of disparity")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--mask-border", c.cuboid.mask_border, "Ignore ground truth near the edge")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app->add_option("--dis-min", c.cuboid.dis_min, "Smallest disparity")->capture_default_str();
  app->add_option("--dis-max", c.cuboid.dis_max, "Largest disparity")->capture_default_str();
  app->add_option("--margin", c.cuboid.margin, "Extra labels on each side")->capture_default_str();
  app->add_option("--gaze-extent", c.cuboid.gaze_extent, "Gaze lines (0 = in-image only)")
      ->capture_default_str();
  app->add_option("--offsets", c.frame, "Frame offsets: lw rw h")->expected(3);
}

void add_solve_options(CLI::App* app, RunConfig& c) {
  app->add_option("--penalty", c.solve.penalty, "Smoothness cost per label step")
      ->capture_default_str();
  app->add_option("--inhibit", c.solve.inhibit, "Cost per label step beyond one")
      ->capture_default_str();
  app->add_flag("--hard-inhibit", c.solve.hard_inhibit, "Forbid neighbor steps above one");
  app->add_option("--level", c.solve.level, "0 exact, 1 or 2 hierarchical")
      ->capture_default_str()
      ->check(CLI::Range(0, 2));
  app->add_option("--block-size", c.solve.block_size, "Hierarchy block size")
      ->capture_default_str();
  app->add_option("--skin-radius", c.solve.skin_radius, "Thin skin radius in blocks")
      ->capture_default_str();
  app->add_option("--solver", c.solver, "push-relabel or reference")
      ->capture_default_str()
      ->check(CLI::IsMember({"push-relabel", "reference"}));
  app->add_option("--rounds-per-sweep", c.solve.rounds_per_sweep,
                  "Discharge rounds between global relabels")
      ->capture_default_str();
  app->add_option("--wave-iterations", c.solve.wave_iterations,
                  "Level 2: global iterations before block confinement")
      ->capture_default_str();
  app->add_option("--max-iterations", c.solve.max_iterations, "Iteration cap (0 = default)")
      ->capture_default_str();
  app->add_option("--chain-init", c.solve.chain_init, "Pre-saturate site chains (0/1)")
      ->capture_default_str();
  app->add_option("--threads", c.solve.threads, "Worker threads")->capture_default_str();
  app->add_option("--seed", c.seed, "Seed recorded for reproducibility")->capture_default_str();
  app->add_flag("--timings", c.timings, "Include wall times in outputs");
}

void finalize(RunConfig& c) {
  c.solve.solver = c.solver == "reference" ? GAZECUT_SOLVER_REFERENCE : GAZECUT_SOLVER_PUSH_RELABEL;
  if (c.frame.size() == 3) {
    c.cuboid.has_frame = 1;
    c.cuboid.lw = c.frame[0];
    c.cuboid.rw = c.frame[1];
    c.cuboid.h = c.frame[2];
  }
}

ScenePtr load_scene(const RunConfig& c) {
  gazecut_scene* raw = nullptr;
  check(gazecut_scene_load(c.left.c_str(), c.right.c_str(), c.gt.empty() ? nullptr : c.gt.c_str(),
                           &c.cuboid, c.solve.threads, &raw),
        "loading scene");
  return ScenePtr(raw);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "gazecut: cannot write " << path << '\n';
    throw Failure{kIo};
  }
}

const char* termination_name(int t) {
  switch (t) {
    case GAZECUT_CONVERGED:
      return "converged";
    case GAZECUT_STALLED:
      return "stalled";
    default:
      return "iteration_cap";
  }
}

std::string error_table(const gazecut_result* r) {
  size_t n = 0;
  check(gazecut_result_histogram(r, nullptr, 0, &n), "reading histogram");
  std::vector<int64_t> h(n);
  check(gazecut_result_histogram(r, h.data(), h.size(), &n), "reading histogram");
  std::vector<int64_t> buckets(11, 0);
  for (size_t d = 0; d < h.size(); ++d) buckets[d < 10 ? d : 10] += h[d];
  std::ostringstream os;
  for (size_t d = 0; d < buckets.size(); ++d) {
    os << "diff_" << (d < 10 ? std::to_string(d) : std::string("10~")) << '=' << buckets[d]
       << '\n';
  }
  return os.str();
}

int cmd_solve(RunConfig& c) {
  ScenePtr scene = load_scene(c);
  gazecut_scene_info info{};
  check(gazecut_scene_info_get(scene.get(), &info), "scene info");
  if (!c.dump_graph.empty()) {
    check(gazecut_graph_dump(scene.get(), &c.solve, c.dump_graph.c_str()), "dumping graph");
  }
  int64_t nodes = 0, arcs = 0;
  check(gazecut_graph_size(scene.get(), &c.solve, &nodes, &arcs), "graph size");

  gazecut_result* raw = nullptr;
  check(gazecut_solve(scene.get(), &c.solve, &raw), "solving");
  ResultPtr result(raw);
  gazecut_result_stats st{};
  check(gazecut_result_stats_get(result.get(), &st), "reading stats");

  std::ostringstream stats;
  stats << "cuboid=" << info.gaze_extent << "x" << info.row_extent << "x" << info.labels << '\n'
        << "gaze_min=" << info.gaze_min << "\nrow_min=" << info.row_min
        << "\ndepth_min=" << info.depth_min << "\noffset1=" << info.offset1
        << "\noffset2=" << info.offset2 << "\noffset3=" << info.offset3
        << "\nlw_offset=" << info.lw << "\nrw_offset=" << info.rw << "\nh_offset=" << info.h
        << "\nfull_graph_nodes=" << nodes << "\nfull_graph_arcs=" << arcs
        << "\nsolved_graph_nodes=" << st.nodes << "\nsolved_graph_arcs=" << st.arcs
        << "\nflow=" << st.flow << "\nenergy=" << st.energy
        << "\ntermination=" << termination_name(st.termination)
        << "\niterations=" << st.iterations << "\nsweeps=" << st.sweeps
        << "\npushes=" << st.pushes << "\nrelabels=" << st.relabels
        << "\naugmentations=" << st.augmentations << '\n';
  if (st.has_error) {
    char pct[32];
    std::snprintf(pct, sizeof pct, "%.2f", st.exact_percent);
    stats << "gt_valid=" << info.gt_valid << "\ngt_out_of_range=" << info.gt_out_of_range
          << "\ngt_collisions=" << info.gt_collisions << "\nerror=" << st.error
          << "\nevaluated=" << st.evaluated << "\nexact_percent=" << pct << '\n'
          << error_table(result.get());
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "build_seconds=%.3f\nflow_seconds=%.3f\nextract_seconds=%.3f\n",
                st.build_seconds, st.flow_seconds, st.extract_seconds);
  const std::string timings = buf;

  const std::string header = c.header();
  if (!c.out_disparity.empty()) {
    const int scale = c.disparity_scale > 0 ? c.disparity_scale : c.cuboid.gt_scale;
    check(gazecut_result_write_disparity(result.get(), scene.get(), scale,
                                         c.out_disparity.c_str(), header.c_str()),
          "writing disparity image");
  }
  if (!c.out_labels.empty()) {
    check(gazecut_result_write_labeling(result.get(), c.out_labels.c_str(), header.c_str()),
          "writing labeling");
  }
  if (!c.out_stats.empty()) {
    write_text(c.out_stats, c.hashed_header() + stats.str() + (c.timings ? timings : ""));
  }
  std::cout << stats.str() << timings;
  return kOk;
}

int cmd_sweep(RunConfig& c) {
  std::vector<int64_t> values;
  if (!c.penalties.empty()) {
    values.assign(c.penalties.begin(), c.penalties.end());
  } else {
    if (c.step <= 0) {
      std::cerr << "gazecut: --step must be positive\n";
      return kUsage;
    }
    for (int p = c.from; p <= c.to; p += c.step) values.push_back(p);
  }
  if (values.empty()) {
    std::cerr << "gazecut: empty penalty range\n";
    return kUsage;
  }
  ScenePtr scene = load_scene(c);
  char* raw = nullptr;
  check(gazecut_sweep_csv(scene.get(), &c.solve, values.data(), values.size(), c.timings, &raw),
        "sweep");
  StringPtr csv(raw);
  write_text(c.out_csv, c.hashed_header() + csv.get());
  return kOk;
}

int cmd_compare(RunConfig& c) {
  std::vector<int> levels, blocks;
  std::stringstream ss(c.methods);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      levels.push_back(std::stoi(item.substr(0, colon)));
      blocks.push_back(std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      std::cerr << "gazecut: bad method '" << item << "', expected level:block\n";
      return kUsage;
    }
  }
  if (levels.empty()) {
    std::cerr << "gazecut: no methods\n";
    return kUsage;
  }
  ScenePtr scene = load_scene(c);
  char* raw = nullptr;
  check(gazecut_compare_csv(scene.get(), &c.solve, levels.data(), blocks.data(), levels.size(),
                            c.timings, &raw),
        "compare");
  StringPtr csv(raw);
  write_text(c.out_csv, c.hashed_header() + csv.get());
  return kOk;
}

int cmd_selftest(RunConfig& c) {
  char* raw = nullptr;
  int64_t failures = 0;
  check(gazecut_selftest(c.seed, c.scale, c.force_failure, &raw, &failures), "selftest");
  StringPtr report(raw);
  std::cout << "seed=" << c.seed << '\n' << report.get();
  return failures == 0 ? kOk : kFailure;
}

int cmd_convert_gt(RunConfig& c) {
  gazecut_scene_info info{};
  check(gazecut_convert_gt(c.gt.c_str(), &c.cuboid, c.out_gt.c_str(), c.header().c_str(), &info),
        "converting ground truth");
  std::cout << "cuboid=" << info.gaze_extent << "x" << info.row_extent << "x" << info.labels
            << "\ngt_valid=" << info.gt_valid << "\ngt_out_of_range=" << info.gt_out_of_range
            << "\ngt_collisions=" << info.gt_collisions << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stereo depth by graph cuts over gaze lines and depth numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gazecut_version());
  RunConfig c;

  CLI::App* solve = app.add_subcommand("solve", "Solve one stereo pair");
  add_scene_options(solve, c, true);
  add_solve_options(solve, c);
  solve->add_option("--out-disparity", c.out_disparity, "Disparity image (PGM)");
  solve->add_option("--out-labels", c.out_labels, "Labeling text file");
  solve->add_option("--out-stats", c.out_stats, "Statistics (key=value)");
  solve->add_option("--disparity-scale", c.disparity_scale,
                    "Output value per pixel of disparity (default: gt scale)");
  solve->add_option("--dump-graph", c.dump_graph, "Write the full flow network as text");

  CLI::App* sweep = app.add_subcommand("sweep", "Error against ground truth over a penalty range");
  add_scene_options(sweep, c, true);
  add_solve_options(sweep, c);
  sweep->add_option("--from", c.from, "First penalty")->capture_default_str();
  sweep->add_option("--to", c.to, "Last penalty")->capture_default_str();
  sweep->add_option("--step", c.step, "Penalty step")->capture_default_str();
  sweep->add_option("--penalties", c.penalties, "Explicit penalty list");
  sweep->add_option("--out", c.out_csv, "CSV output (default stdout)");

  CLI::App* compare = app.add_subcommand("compare", "Exact and hierarchical methods side by side");
  add_scene_options(compare, c, true);
  add_solve_options(compare, c);
  compare->add_option("--methods", c.methods, "Comma-separated level:block list")
      ->capture_default_str();
  compare->add_option("--out", c.out_csv, "CSV output (default stdout)");

  CLI::App* selftest = app.add_subcommand("selftest", "Run the brute-force oracle suites");
  selftest->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  selftest->add_option("--scale", c.scale, "Instance count multiplier")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  selftest->add_flag("--force-failure", c.force_failure, "Add a failing check (test hook)");

  CLI::App* convert = app.add_subcommand("convert-gt", "Ground-truth disparity to depth labels");
  convert->add_option("--gt", c.gt, "Ground-truth disparity (PGM)")->required();
  convert->add_option("--out", c.out_gt, "Labeling text output")->required();
  add_scene_options(convert, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    finalize(c);
    if (solve->parsed()) {
      c.command = "solve";
      return cmd_solve(c);
    }
    if (sweep->parsed()) {
      c.command = "sweep";
      return cmd_sweep(c);
    }
    if (compare->parsed()) {
      c.command = "compare";
      return cmd_compare(c);
    }
    if (selftest->parsed()) {
      c.command = "selftest";
      return cmd_selftest(c);
    }
    c.command = "convert-gt";
    return cmd_convert_gt(c);
  } catch (const Failure& f) {
    return f.code;
  }
}
