// Copyright 2026 The exclear Authors
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

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "exclear/pricing.hpp"

namespace exclear {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
  Vertex target;
  double weight;
};

using Adjacency = std::vector<std::vector<Edge>>;

class Collector {
 public:
  Collector(double threshold, const CycleFilter& exclude)
      : threshold_(threshold), exclude_(exclude) {}

  // Path holds distinct vertices; the closing arc back to path[0] is implied.
  void offer(const std::vector<Vertex>& path, double weight) {
    if (!(weight < -threshold_)) return;
    Cycle c = make_cycle(path);
    if (exclude_ && exclude_(c)) return;
    found_.insert(std::move(c));
  }
  bool negative(double weight) const { return weight < -threshold_; }
  bool empty() const { return found_.empty(); }
  std::vector<Cycle> take() { return {found_.begin(), found_.end()}; }

 private:
  double threshold_;
  const CycleFilter& exclude_;
  std::set<Cycle> found_;
};

// Position-indexed labels: best[k][v] is the lightest walk of k arcs from
// the source to v over vertices above the source. Returns true when, for
// some length, the lightest closed walk is negative but revisits a vertex:
// the best cycle of that length may then be hidden behind it.
bool label_sweep(const Adjacency& adj, Vertex source, int max_length,
                 Collector& out) {
  const int n = static_cast<int>(adj.size()) - 1;
  std::vector<std::vector<double>> best(max_length,
                                        std::vector<double>(n + 1, kInf));
  std::vector<std::vector<Vertex>> pred(max_length,
                                        std::vector<Vertex>(n + 1, 0));
  best[0][source] = 0.0;
  for (int k = 1; k < max_length; ++k) {
    for (Vertex v = source; v <= n; ++v) {
      const double base = best[k - 1][v];
      if (base == kInf) continue;
      for (const Edge& e : adj[v]) {
        if (e.target <= source) continue;
        const double w = base + e.weight;
        if (w < best[k][e.target]) {
          best[k][e.target] = w;
          pred[k][e.target] = v;
        }
      }
    }
  }
  std::vector<Vertex> path;
  bool hidden = false;
  for (int k = 1; k < max_length; ++k) {
    double lightest = kInf;
    bool lightest_simple = true;
    for (Vertex v = source + 1; v <= n; ++v) {
      if (best[k][v] == kInf) continue;
      for (const Edge& e : adj[v]) {
        if (e.target != source) continue;
        path.assign(k + 1, 0);
        Vertex cur = v;
        for (int pos = k; pos >= 0; --pos) {
          path[pos] = cur;
          cur = pred[pos][cur];
        }
        std::vector<Vertex> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        const bool simple =
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        const double w = best[k][v] + e.weight;
        if (w < lightest) {
          lightest = w;
          lightest_simple = simple;
        }
        if (simple) out.offer(path, w);
      }
    }
    if (!lightest_simple && out.negative(lightest)) hidden = true;
  }
  return hidden;
}

void exact_search(const Adjacency& adj, Vertex source, int max_length,
                  std::vector<Vertex>& path, std::vector<char>& on_path,
                  double weight, Collector& out) {
  const Vertex v = path.back();
  for (const Edge& e : adj[v]) {
    if (e.target == source) {
      if (path.size() >= 2) out.offer(path, weight + e.weight);
      continue;
    }
    if (e.target < source || on_path[e.target] ||
        static_cast<int>(path.size()) >= max_length) {
      continue;
    }
    on_path[e.target] = 1;
    path.push_back(e.target);
    exact_search(adj, source, max_length, path, on_path, weight + e.weight, out);
    path.pop_back();
    on_path[e.target] = 0;
  }
}

}  // namespace

std::vector<Cycle> find_negative_cycles(int num_vertices,
                                        std::span<const WeightedArc> arcs,
                                        int max_length, double threshold,
                                        const CycleFilter& exclude) {
  if (max_length < 2 || num_vertices < 2) return {};
  Adjacency adj(num_vertices + 1);
  for (const WeightedArc& a : arcs) {
    if (a.source < 1 || a.source > num_vertices || a.target < 1 ||
        a.target > num_vertices || a.source == a.target) {
      continue;
    }
    adj[a.source].push_back({a.target, a.weight});
  }
  Collector out(threshold, exclude);
  std::vector<Vertex> path;
  std::vector<char> on_path(num_vertices + 1, 0);
  std::vector<char> searched(num_vertices + 1, 0);
  auto search_from = [&](Vertex s) {
    path.assign(1, s);
    on_path[s] = 1;
    exact_search(adj, s, max_length, path, on_path, 0.0, out);
    on_path[s] = 0;
    searched[s] = 1;
  };
  for (Vertex s = 1; s <= num_vertices; ++s) {
    if (label_sweep(adj, s, max_length, out)) search_from(s);
  }
  if (out.empty()) {
    for (Vertex s = 1; s <= num_vertices; ++s) {
      if (!searched[s]) search_from(s);
    }
  }
  return out.take();
}

}  // namespace exclear
