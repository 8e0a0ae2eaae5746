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

// Independent reference computations for tests. Deliberately naive: dense
// matrices, full enumeration, no shared code with the library solvers.

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace gazecut::oracle {

/// Edmonds-Karp on a dense capacity matrix.
inline std::int64_t max_flow(std::vector<std::vector<std::int64_t>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  std::int64_t total = 0;
  for (;;) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
      }
    }
    if (parent[t] < 0) return total;
    std::int64_t b = std::numeric_limits<std::int64_t>::max();
    for (int v = t; v != s; v = parent[v]) b = std::min(b, cap[parent[v]][v]);
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= b;
      cap[v][parent[v]] += b;
    }
    total += b;
  }
}

/// Pairwise cost written straight from the formula.
inline std::int64_t pair_cost(int i, int j, std::int64_t penalty, std::int64_t inhibit) {
  const std::int64_t d = i > j ? i - j : j - i;
  return penalty * d + (d > 1 ? inhibit * (d - 1) : 0);
}

/// Energy of a labeling over a w x h grid; data[(y*w+x)*m + k].
inline std::int64_t energy(const std::vector<int>& x, int w, int h, int m,
                           const std::vector<std::int64_t>& data, std::int64_t penalty,
                           std::int64_t inhibit, bool hard, bool* feasible = nullptr) {
  std::int64_t e = 0;
  bool ok = true;
  for (int i = 0; i < w * h; ++i) e += data[static_cast<std::size_t>(i) * m + x[i]];
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const int i = r * w + c;
      for (int j : {c + 1 < w ? i + 1 : -1, r + 1 < h ? i + w : -1}) {
        if (j < 0) continue;
        if (hard && std::abs(x[i] - x[j]) > 1) ok = false;
        e += pair_cost(x[i], x[j], penalty, inhibit);
      }
    }
  }
  if (feasible) *feasible = ok;
  return e;
}

struct Minimum {
  std::int64_t energy = std::numeric_limits<std::int64_t>::max();
  std::vector<int> labels;  // smallest labeling (pointwise minimum) among the optima
  long long optima = 0;
};

/// Enumerates all m^(w*h) labelings. Restricts to [lo, hi] per site if given.
inline Minimum brute_force(int w, int h, int m, const std::vector<std::int64_t>& data,
                           std::int64_t penalty, std::int64_t inhibit, bool hard,
                           const std::vector<int>& lo = {}, const std::vector<int>& hi = {}) {
  const int n = w * h;
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = lo.empty() ? 0 : lo[i];
  Minimum best;
  for (;;) {
    bool feasible = true;
    const std::int64_t e = energy(x, w, h, m, data, penalty, inhibit, hard, &feasible);
    if (feasible && e <= best.energy) {
      if (e < best.energy) {
        best.energy = e;
        best.labels = x;
        best.optima = 0;
      }
      ++best.optima;
      for (int i = 0; i < n; ++i) best.labels[i] = std::min(best.labels[i], x[i]);
    }
    int i = 0;
    while (i < n) {
      const int top = hi.empty() ? m - 1 : hi[i];
      if (x[i] < top) {
        ++x[i];
        break;
      }
      x[i] = lo.empty() ? 0 : lo[i];
      ++i;
    }
    if (i == n) break;
  }
  return best;
}

}  // namespace gazecut::oracle
