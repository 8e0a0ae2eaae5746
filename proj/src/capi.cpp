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

#include "gazecut/gazecut.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eval.hpp"
#include "graphcut.hpp"
#include "hierarchy.hpp"
#include "imaging.hpp"
#include "selftest.hpp"

struct gazecut_scene {
  gazecut::StereoPair pair;
  gazecut::Cuboid cuboid;
  gazecut::CostVolume volume;
  std::optional<gazecut::GroundTruthDepth> gt;
};

struct gazecut_result {
  gazecut::CutResult cut;
  std::optional<gazecut::ErrorReport> error;
};

namespace {

thread_local std::string last_error;

gazecut_status status_of(gazecut::ErrorKind kind) {
  switch (kind) {
    case gazecut::ErrorKind::io:
      return GAZECUT_ERR_IO;
    case gazecut::ErrorKind::format:
      return GAZECUT_ERR_FORMAT;
    case gazecut::ErrorKind::config:
      return GAZECUT_ERR_CONFIG;
    case gazecut::ErrorKind::geometry:
      return GAZECUT_ERR_GEOMETRY;
    case gazecut::ErrorKind::solver:
      return GAZECUT_ERR_SOLVER;
    case gazecut::ErrorKind::internal:
      return GAZECUT_ERR_INTERNAL;
  }
  return GAZECUT_ERR_INTERNAL;
}

template <class F>
gazecut_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return GAZECUT_OK;
  } catch (const gazecut::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GAZECUT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GAZECUT_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw gazecut::Error(gazecut::ErrorKind::config, what);
}

gazecut_status argument_error(const char* what) {
  last_error = what;
  return GAZECUT_ERR_ARGUMENT;
}

std::vector<std::string> split_lines(const char* header) {
  std::vector<std::string> out;
  if (header == nullptr) return out;
  std::istringstream in(header);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gazecut::Cuboid make_cuboid(int width, int height, const gazecut_cuboid_config& c) {
  gazecut::Cuboid cuboid = gazecut::cuboid_from_disparity_range(width, height, c.dis_min,
                                                                c.dis_max, c.margin, c.gaze_extent);
  if (c.has_frame) {
    cuboid.offsets = gazecut::Offsets::from_frame(width, c.lw, c.rw, c.h);
    cuboid.validate();
  }
  return cuboid;
}

gazecut::EnergyParams energy_params(const gazecut_solve_config& c) {
  require(c.penalty >= 0 && c.inhibit >= 0, "penalty and inhibit must be non-negative");
  return {c.penalty, c.inhibit, c.hard_inhibit != 0};
}

gazecut::HierarchyOptions hierarchy_options(const gazecut_solve_config& c) {
  require(c.level >= 0 && c.level <= 2, "level must be 0, 1 or 2");
  require(c.block_size >= 1, "block size must be at least 1");
  require(c.skin_radius >= 0, "skin radius must be non-negative");
  require(c.rounds_per_sweep >= 1, "rounds per sweep must be positive");
  require(c.threads >= 1, "thread count must be positive");
  require(c.max_iterations >= 0, "iteration cap must be non-negative");
  require(c.solver == GAZECUT_SOLVER_PUSH_RELABEL || c.solver == GAZECUT_SOLVER_REFERENCE,
          "unknown solver");
  gazecut::HierarchyOptions h;
  h.block_size = c.block_size;
  h.skin_radius = c.skin_radius;
  h.wave_iterations = c.wave_iterations;
  if (c.max_iterations > 0) h.max_iterations = c.max_iterations;
  h.solve.solver = c.solver == GAZECUT_SOLVER_REFERENCE ? gazecut::SolverKind::reference
                                                       : gazecut::SolverKind::push_relabel;
  h.solve.rounds_per_sweep = c.rounds_per_sweep;
  h.solve.chain_init = c.chain_init != 0;
  h.solve.threads = c.threads;
  h.solve.max_iterations = c.level == 2 ? 0 : c.max_iterations;
  return h;
}

void fill_info(const gazecut::Cuboid& c, gazecut_scene_info* out) {
  *out = {};
  out->image_width = c.image_width;
  out->image_height = c.image_height;
  out->gaze_min = c.gaze_min;
  out->gaze_extent = c.gaze_extent;
  out->row_min = c.row_min;
  out->row_extent = c.row_extent;
  out->depth_min = c.depth_min;
  out->labels = c.labels();
  out->offset1 = c.offsets.offset1;
  out->offset2 = c.offsets.offset2;
  out->offset3 = c.offsets.offset3;
  out->lw = c.offsets.lw;
  out->rw = c.offsets.rw;
  out->h = c.offsets.h;
}

void fill_gt_info(const gazecut::GroundTruthDepth& gt, gazecut_scene_info* out) {
  out->has_ground_truth = 1;
  out->gt_valid = gt.valid_count();
  out->gt_out_of_range = gt.out_of_range;
  out->gt_collisions = gt.collisions;
}

}  // namespace

extern "C" {

const char* gazecut_version(void) { return "1.0.0"; }

const char* gazecut_last_error(void) { return last_error.c_str(); }

void gazecut_cuboid_config_default(gazecut_cuboid_config* config) {
  if (config == nullptr) return;
  *config = {};
  config->dis_min = 10;
  config->dis_max = 28;
  config->margin = 7;
  config->gaze_extent = 372;
  config->gt_scale = 8;
}

void gazecut_solve_config_default(gazecut_solve_config* config) {
  if (config == nullptr) return;
  *config = {};
  config->penalty = 14;
  config->inhibit = 1023;
  config->block_size = 2;
  config->skin_radius = 1;
  config->solver = GAZECUT_SOLVER_PUSH_RELABEL;
  config->rounds_per_sweep = 8;
  config->chain_init = 1;
  config->wave_iterations = 2;
  config->threads = 1;
}

gazecut_status gazecut_scene_load(const char* left_path, const char* right_path,
                                  const char* gt_path, const gazecut_cuboid_config* config,
                                  int threads, gazecut_scene** out) {
  if (left_path == nullptr || right_path == nullptr || config == nullptr || out == nullptr) {
    return argument_error("scene_load: null argument");
  }
  *out = nullptr;
  return guarded([&] {
    require(threads >= 1, "thread count must be positive");
    auto scene = std::make_unique<gazecut_scene>();
    scene->pair = gazecut::load_stereo_pair(left_path, right_path);
    scene->cuboid = make_cuboid(scene->pair.width(), scene->pair.height(), *config);
    if (gt_path != nullptr) {
      const gazecut::GrayImage gt = gazecut::load_pgm(gt_path);
      scene->gt = gazecut::ground_truth_to_depth(gt, config->gt_scale, scene->cuboid,
                                                 {config->mask_border});
    }
    scene->volume = gazecut::build_cost_volume(scene->cuboid, scene->pair, threads);
    *out = scene.release();
  });
}

void gazecut_scene_free(gazecut_scene* scene) { delete scene; }

gazecut_status gazecut_scene_info_get(const gazecut_scene* scene, gazecut_scene_info* out) {
  if (scene == nullptr || out == nullptr) return argument_error("scene_info: null argument");
  fill_info(scene->cuboid, out);
  if (scene->gt) fill_gt_info(*scene->gt, out);
  return GAZECUT_OK;
}

gazecut_status gazecut_graph_size(const gazecut_scene* scene, const gazecut_solve_config* config,
                                  int64_t* nodes, int64_t* arcs) {
  if (scene == nullptr || config == nullptr || nodes == nullptr || arcs == nullptr) {
    return argument_error("graph_size: null argument");
  }
  return guarded([&] {
    const gazecut::EnergyParams p = energy_params(*config);
    *nodes = gazecut::expected_node_count(scene->cuboid.sites(), scene->cuboid.labels());
    *arcs = gazecut::expected_arc_count(scene->cuboid.sites(), scene->cuboid.neighbor_pairs(),
                                        scene->cuboid.labels(), p);
  });
}

gazecut_status gazecut_graph_dump(const gazecut_scene* scene, const gazecut_solve_config* config,
                                  const char* path) {
  if (scene == nullptr || config == nullptr || path == nullptr) {
    return argument_error("graph_dump: null argument");
  }
  return guarded([&] {
    const gazecut::StereoGraph g = gazecut::build_graph(scene->volume, energy_params(*config));
    std::ofstream out(path);
    if (!out) throw gazecut::Error(gazecut::ErrorKind::io, std::string("cannot write ") + path);
    gazecut::write_graph_dump(g.network, out);
    out << "constant " << g.constant << '\n';
    if (!out) throw gazecut::Error(gazecut::ErrorKind::io, std::string("short write to ") + path);
  });
}

gazecut_status gazecut_solve(const gazecut_scene* scene, const gazecut_solve_config* config,
                             gazecut_result** out) {
  if (scene == nullptr || config == nullptr || out == nullptr) {
    return argument_error("solve: null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const gazecut::EnergyParams p = energy_params(*config);
    const gazecut::HierarchyOptions h = hierarchy_options(*config);
    auto result = std::make_unique<gazecut_result>();
    result->cut = gazecut::solve_method(scene->volume, p, {config->level, config->block_size}, h);
    if (scene->gt) result->error = gazecut::error_count(result->cut.labeling, *scene->gt);
    *out = result.release();
  });
}

void gazecut_result_free(gazecut_result* result) { delete result; }

gazecut_status gazecut_result_stats_get(const gazecut_result* result, gazecut_result_stats* out) {
  if (result == nullptr || out == nullptr) return argument_error("result_stats: null argument");
  const gazecut::CutResult& r = result->cut;
  *out = {};
  out->flow = r.flow;
  out->energy = r.energy;
  out->nodes = r.nodes;
  out->arcs = r.arcs;
  out->iterations = r.stats.iterations;
  out->sweeps = r.stats.sweeps;
  out->pushes = r.stats.pushes;
  out->relabels = r.stats.relabels;
  out->augmentations = r.stats.augmentations;
  out->termination = static_cast<int>(r.stats.termination);
  out->build_seconds = r.seconds.build;
  out->flow_seconds = r.seconds.flow;
  out->extract_seconds = r.seconds.extract;
  if (result->error) {
    out->has_error = 1;
    out->error = result->error->total;
    out->evaluated = result->error->evaluated;
    out->exact_percent = result->error->exact_percent();
  }
  return GAZECUT_OK;
}

gazecut_status gazecut_result_histogram(const gazecut_result* result, int64_t* counts,
                                        size_t capacity, size_t* count) {
  if (result == nullptr || count == nullptr) return argument_error("histogram: null argument");
  if (!result->error) {
    *count = 0;
    return GAZECUT_OK;
  }
  const auto& h = result->error->histogram;
  *count = h.size();
  if (counts == nullptr) return GAZECUT_OK;
  for (std::size_t i = 0; i < h.size() && i < capacity; ++i) counts[i] = h[i];
  return GAZECUT_OK;
}

gazecut_status gazecut_result_labels(const gazecut_result* result, int32_t* labels,
                                     size_t capacity) {
  if (result == nullptr || labels == nullptr) return argument_error("labels: null argument");
  const auto& l = result->cut.labeling.label;
  if (capacity < l.size()) return argument_error("labels: buffer too small");
  for (std::size_t i = 0; i < l.size(); ++i) labels[i] = l[i];
  return GAZECUT_OK;
}

gazecut_status gazecut_result_write_disparity(const gazecut_result* result,
                                              const gazecut_scene* scene, int scale,
                                              const char* path, const char* header) {
  if (result == nullptr || scene == nullptr || path == nullptr) {
    return argument_error("write_disparity: null argument");
  }
  return guarded([&] {
    gazecut::write_disparity_image(result->cut.labeling, scene->cuboid, scale, path,
                                   split_lines(header));
  });
}

gazecut_status gazecut_result_write_labeling(const gazecut_result* result, const char* path,
                                             const char* header) {
  if (result == nullptr || path == nullptr) return argument_error("write_labeling: null argument");
  return guarded(
      [&] { gazecut::write_labeling(result->cut.labeling, path, split_lines(header)); });
}

gazecut_status gazecut_sweep_csv(const gazecut_scene* scene, const gazecut_solve_config* config,
                                 const int64_t* penalties, size_t count, int timings,
                                 char** csv) {
  if (scene == nullptr || config == nullptr || csv == nullptr || (count > 0 && !penalties)) {
    return argument_error("sweep: null argument");
  }
  *csv = nullptr;
  return guarded([&] {
    require(count > 0, "sweep: empty penalty range");
    const gazecut::HierarchyOptions h = hierarchy_options(*config);
    std::vector<gazecut::Cost> values(penalties, penalties + count);
    for (gazecut::Cost v : values) require(v >= 0, "sweep: negative penalty");
    require(config->inhibit >= 0, "inhibit must be non-negative");
    gazecut::SolveOptions solve = h.solve;
    solve.threads = 1;
    const auto records =
        gazecut::sweep_penalty(scene->volume, scene->gt ? &*scene->gt : nullptr, values,
                               config->inhibit, config->hard_inhibit != 0, solve, config->threads);
    *csv = copy_string(gazecut::sweep_csv(records, timings != 0));
  });
}

gazecut_status gazecut_compare_csv(const gazecut_scene* scene, const gazecut_solve_config* config,
                                   const int* levels, const int* block_sizes, size_t count,
                                   int timings, char** csv) {
  if (scene == nullptr || config == nullptr || csv == nullptr ||
      (count > 0 && (!levels || !block_sizes))) {
    return argument_error("compare: null argument");
  }
  *csv = nullptr;
  return guarded([&] {
    require(count > 0, "compare: no methods");
    const gazecut::EnergyParams p = energy_params(*config);
    const gazecut::HierarchyOptions h = hierarchy_options(*config);
    std::vector<gazecut::MethodConfig> configs;
    for (size_t i = 0; i < count; ++i) {
      require(levels[i] >= 0 && levels[i] <= 2, "compare: level must be 0, 1 or 2");
      require(block_sizes[i] >= 1, "compare: block size must be at least 1");
      configs.push_back({levels[i], block_sizes[i]});
    }
    const auto rows = gazecut::compare_methods(scene->volume, scene->gt ? &*scene->gt : nullptr,
                                               p, configs, h);
    *csv = copy_string(gazecut::comparison_csv(rows, timings != 0));
  });
}

void gazecut_string_free(char* text) { std::free(text); }

gazecut_status gazecut_selftest(uint64_t seed, int scale, int force_failure, char** report,
                                int64_t* failures) {
  if (report == nullptr || failures == nullptr) return argument_error("selftest: null argument");
  *report = nullptr;
  return guarded([&] {
    require(scale >= 1, "selftest: scale must be positive");
    gazecut::SelftestOptions o;
    o.seed = seed;
    o.networks *= scale;
    o.instances *= scale;
    o.force_failure = force_failure != 0;
    const auto results = gazecut::run_selftest(o);
    *failures = 0;
    for (const auto& r : results) *failures += r.failed;
    *report = copy_string(gazecut::format_selftest(results));
  });
}

gazecut_status gazecut_convert_gt(const char* gt_path, const gazecut_cuboid_config* config,
                                  const char* out_path, const char* header,
                                  gazecut_scene_info* info) {
  if (gt_path == nullptr || config == nullptr || out_path == nullptr) {
    return argument_error("convert_gt: null argument");
  }
  return guarded([&] {
    const gazecut::GrayImage img = gazecut::load_pgm(gt_path);
    const gazecut::Cuboid cuboid = make_cuboid(img.width, img.height, *config);
    const gazecut::GroundTruthDepth gt =
        gazecut::ground_truth_to_depth(img, config->gt_scale, cuboid, {config->mask_border});
    gazecut::write_labeling(gazecut::ground_truth_labeling(gt, cuboid.labels()), out_path,
                            split_lines(header));
    if (info != nullptr) {
      fill_info(cuboid, info);
      fill_gt_info(gt, info);
    }
  });
}

}  // extern "C"
