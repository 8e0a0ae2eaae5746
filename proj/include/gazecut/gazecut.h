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

#ifndef GAZECUT_GAZECUT_H_
#define GAZECUT_GAZECUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GAZECUT_API __declspec(dllexport)
#else
#define GAZECUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gazecut_status {
  GAZECUT_OK = 0,
  GAZECUT_ERR_IO = 1,        /* missing or unreadable file */
  GAZECUT_ERR_FORMAT = 2,    /* malformed file content */
  GAZECUT_ERR_CONFIG = 3,    /* invalid parameters */
  GAZECUT_ERR_GEOMETRY = 4,  /* coordinate outside an image */
  GAZECUT_ERR_SOLVER = 5,    /* infeasible problem or iteration cap */
  GAZECUT_ERR_INTERNAL = 6,  /* broken invariant */
  GAZECUT_ERR_ARGUMENT = 7   /* null handle or bad buffer */
} gazecut_status;

typedef enum gazecut_solver {
  GAZECUT_SOLVER_PUSH_RELABEL = 0,
  GAZECUT_SOLVER_REFERENCE = 1
} gazecut_solver;

typedef enum gazecut_termination {
  GAZECUT_CONVERGED = 0,
  GAZECUT_STALLED = 1,
  GAZECUT_ITERATION_CAP = 2
} gazecut_termination;

/* Stereo pair, cuboid, data terms and optional ground truth. */
typedef struct gazecut_scene gazecut_scene;
/* Labeling and statistics of one solve. */
typedef struct gazecut_result gazecut_result;

typedef struct gazecut_cuboid_config {
  int dis_min;        /* default 10 */
  int dis_max;        /* default 28 */
  int margin;         /* extra labels on each side, default 7 */
  int gaze_extent;    /* 0 = largest in-image range; default 372 */
  int has_frame;      /* nonzero: use lw, rw, h below instead of centered offsets */
  int lw, rw, h;
  int gt_scale;       /* ground-truth pixel value = disparity * gt_scale, default 8 */
  int mask_border;    /* ground-truth pixels this close to the edge are ignored */
} gazecut_cuboid_config;

typedef struct gazecut_solve_config {
  int64_t penalty;          /* default 14 */
  int64_t inhibit;          /* default 1023 */
  int hard_inhibit;
  int level;                /* 0 exact, 1, 2 */
  int block_size;           /* default 2 */
  int skin_radius;          /* default 1 */
  int solver;               /* gazecut_solver */
  int rounds_per_sweep;     /* push-relabel rounds between global relabels, default 8 */
  int chain_init;           /* default 1 */
  int64_t wave_iterations;  /* level 2, default 2 */
  int64_t max_iterations;   /* 0 = default cap */
  int threads;              /* default 1 */
} gazecut_solve_config;

typedef struct gazecut_scene_info {
  int image_width, image_height;
  int gaze_min, gaze_extent;
  int row_min, row_extent;
  int depth_min, labels;
  int offset1, offset2, offset3, lw, rw, h;
  int has_ground_truth;
  int64_t gt_valid, gt_out_of_range, gt_collisions;
} gazecut_scene_info;

typedef struct gazecut_result_stats {
  int64_t flow;
  int64_t energy;
  int64_t nodes;
  int64_t arcs;
  int64_t iterations, sweeps, pushes, relabels, augmentations;
  int termination;  /* gazecut_termination */
  double build_seconds, flow_seconds, extract_seconds;
  int has_error;    /* ground truth was available */
  int64_t error;
  int64_t evaluated;
  double exact_percent;
} gazecut_result_stats;

GAZECUT_API const char* gazecut_version(void);
/* Message of the last failed call on this thread. */
GAZECUT_API const char* gazecut_last_error(void);

GAZECUT_API void gazecut_cuboid_config_default(gazecut_cuboid_config* config);
GAZECUT_API void gazecut_solve_config_default(gazecut_solve_config* config);

/* gt_path may be NULL. */
GAZECUT_API gazecut_status gazecut_scene_load(const char* left_path, const char* right_path,
                                              const char* gt_path,
                                              const gazecut_cuboid_config* config, int threads,
                                              gazecut_scene** out);
GAZECUT_API void gazecut_scene_free(gazecut_scene* scene);
GAZECUT_API gazecut_status gazecut_scene_info_get(const gazecut_scene* scene,
                                                  gazecut_scene_info* out);

/* Node and arc counts of the full graph for the given parameters. */
GAZECUT_API gazecut_status gazecut_graph_size(const gazecut_scene* scene,
                                              const gazecut_solve_config* config,
                                              int64_t* nodes, int64_t* arcs);
/* Text dump: header line, then "u v capacity" per arc. */
GAZECUT_API gazecut_status gazecut_graph_dump(const gazecut_scene* scene,
                                              const gazecut_solve_config* config,
                                              const char* path);

GAZECUT_API gazecut_status gazecut_solve(const gazecut_scene* scene,
                                         const gazecut_solve_config* config,
                                         gazecut_result** out);
GAZECUT_API void gazecut_result_free(gazecut_result* result);
GAZECUT_API gazecut_status gazecut_result_stats_get(const gazecut_result* result,
                                                    gazecut_result_stats* out);
/* Per-difference counts; *count receives the full length. */
GAZECUT_API gazecut_status gazecut_result_histogram(const gazecut_result* result,
                                                    int64_t* counts, size_t capacity,
                                                    size_t* count);
/* Row-major site labels; capacity must be at least gaze_extent * row_extent. */
GAZECUT_API gazecut_status gazecut_result_labels(const gazecut_result* result, int32_t* labels,
                                                 size_t capacity);

/* header: newline-separated comment lines embedded in the file, may be NULL. */
GAZECUT_API gazecut_status gazecut_result_write_disparity(const gazecut_result* result,
                                                          const gazecut_scene* scene, int scale,
                                                          const char* path, const char* header);
GAZECUT_API gazecut_status gazecut_result_write_labeling(const gazecut_result* result,
                                                         const char* path, const char* header);

/* CSV reports. The string is owned by the caller; release with gazecut_string_free. */
GAZECUT_API gazecut_status gazecut_sweep_csv(const gazecut_scene* scene,
                                             const gazecut_solve_config* config,
                                             const int64_t* penalties, size_t count,
                                             int timings, char** csv);
GAZECUT_API gazecut_status gazecut_compare_csv(const gazecut_scene* scene,
                                               const gazecut_solve_config* config,
                                               const int* levels, const int* block_sizes,
                                               size_t count, int timings, char** csv);
GAZECUT_API void gazecut_string_free(char* text);

/* Brute-force oracle suites. *failures receives the failed check count. */
GAZECUT_API gazecut_status gazecut_selftest(uint64_t seed, int scale, int force_failure,
                                            char** report, int64_t* failures);

/* Ground-truth disparity image to per-site depth labels (labeling text file). */
GAZECUT_API gazecut_status gazecut_convert_gt(const char* gt_path,
                                              const gazecut_cuboid_config* config,
                                              const char* out_path, const char* header,
                                              gazecut_scene_info* info);

#ifdef __cplusplus
}
#endif

#endif  // GAZECUT_GAZECUT_H_
