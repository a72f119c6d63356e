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

#include "exclear/index_sets.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "exclear/error.hpp"

namespace exclear {
namespace {

class CycleSearch {
 public:
  CycleSearch(const Instance& instance, std::size_t limit,
              std::vector<Cycle>& out)
      : instance_(instance),
        limit_(limit),
        out_(out),
        on_path_(instance.num_vertices() + 1, false) {}

  void run() {
    if (instance_.cycle_cap() < 2) return;
    for (Vertex root = instance_.first_pair();
         root <= instance_.num_vertices(); ++root) {
      root_ = root;
      path_.assign(1, root);
      on_path_[root] = true;
      extend(root);
      on_path_[root] = false;
    }
  }

 private:
  // Out-arcs are sorted by target, so cycles come out in lexicographic order
  // within a root and roots ascend.
  void extend(Vertex v) {
    for (const Arc& arc : instance_.out_arcs(v)) {
      const Vertex next = arc.target;
      if (next == root_) {
        if (path_.size() >= 2) {
          if (out_.size() >= limit_) {
            throw Error(ErrorCode::kModelTooLarge,
                        "more than " + std::to_string(limit_) + " cycles");
          }
          out_.push_back(Cycle{path_});
        }
        continue;
      }
      if (next < root_ || on_path_[next]) continue;
      if (static_cast<int>(path_.size()) >= instance_.cycle_cap()) continue;
      path_.push_back(next);
      on_path_[next] = true;
      extend(next);
      on_path_[next] = false;
      path_.pop_back();
    }
  }

  const Instance& instance_;
  std::size_t limit_;
  std::vector<Cycle>& out_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
};

class ChainSearch {
 public:
  ChainSearch(const Instance& instance, std::size_t limit,
              std::vector<Chain>& out)
      : instance_(instance),
        limit_(limit),
        out_(out),
        on_path_(instance.num_vertices() + 1, false) {}

  void run() {
    if (instance_.chain_cap() < 1) return;
    for (Vertex ndd = 1; ndd <= instance_.num_ndds(); ++ndd) {
      path_.assign(1, ndd);
      on_path_[ndd] = true;
      extend(ndd);
      on_path_[ndd] = false;
    }
  }

 private:
  void extend(Vertex v) {
    for (const Arc& arc : instance_.out_arcs(v)) {
      const Vertex next = arc.target;
      if (on_path_[next]) continue;
      path_.push_back(next);
      if (out_.size() >= limit_) {
        throw Error(ErrorCode::kModelTooLarge,
                    "more than " + std::to_string(limit_) + " chains");
      }
      out_.push_back(Chain{path_});
      if (static_cast<int>(path_.size()) - 1 < instance_.chain_cap()) {
        on_path_[next] = true;
        extend(next);
        on_path_[next] = false;
      }
      path_.pop_back();
    }
  }

  const Instance& instance_;
  std::size_t limit_;
  std::vector<Chain>& out_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Instance& instance,
                                    std::size_t limit) {
  std::vector<Cycle> cycles;
  CycleSearch(instance, limit, cycles).run();
  return cycles;
}

std::vector<Chain> enumerate_chains(const Instance& instance,
                                    std::size_t limit) {
  std::vector<Chain> chains;
  ChainSearch(instance, limit, chains).run();
  return chains;
}

CopyDistances copy_distances(const Instance& instance, Vertex root) {
  const int n = instance.num_vertices();
  CopyDistances d;
  d.copy_root = root;
  d.dist_from_root.assign(n + 1, kUnreachable);
  d.dist_to_root.assign(n + 1, kUnreachable);
  if (!instance.is_pair(root)) return d;

  std::deque<Vertex> queue;
  d.dist_from_root[root] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Arc& arc : instance.out_arcs(v)) {
      if (arc.target < root || d.dist_from_root[arc.target] != kUnreachable) {
        continue;
      }
      d.dist_from_root[arc.target] = d.dist_from_root[v] + 1;
      queue.push_back(arc.target);
    }
  }

  d.dist_to_root[root] = 0;
  queue.push_back(root);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const int id : instance.in_arc_ids(v)) {
      const Vertex src = instance.arcs()[id].source;
      if (src < root || d.dist_to_root[src] != kUnreachable) continue;
      d.dist_to_root[src] = d.dist_to_root[v] + 1;
      queue.push_back(src);
    }
  }
  return d;
}

std::vector<int> ndd_distances(const Instance& instance) {
  const int n = instance.num_vertices();
  std::vector<int> dist(n + 1, kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= instance.num_ndds(); ++v) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Arc& arc : instance.out_arcs(v)) {
      if (dist[arc.target] != kUnreachable) continue;
      dist[arc.target] = dist[v] + 1;
      queue.push_back(arc.target);
    }
  }
  return dist;
}

std::vector<int> pief_positions(const Instance& instance, Vertex i, Vertex j,
                                Vertex l, PiefVariant variant,
                                const CopyDistances* distances) {
  if (!instance.is_pair(l) || !instance.is_pair(i) || !instance.is_pair(j) ||
      i < l || j < l || !instance.has_arc(i, j)) {
    throw Error(ErrorCode::kArcNotInCopy,
                "arc (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not in graph copy " + std::to_string(l));
  }
  const int cap = instance.cycle_cap();
  int lo = 0;
  int hi = 0;
  if (i == l) {
    lo = hi = 1;
  } else if (j == l) {
    lo = 2;
    hi = cap;
  } else {
    lo = 2;
    hi = cap - 1;
  }
  hi = std::min(hi, cap);

  std::vector<int> positions;
  if (variant == PiefVariant::kFull) {
    for (int k = lo; k <= hi; ++k) positions.push_back(k);
    return positions;
  }

  CopyDistances local;
  if (distances == nullptr || distances->copy_root != l) {
    local = copy_distances(instance, l);
    distances = &local;
  }
  const int from_root = distances->dist_from_root[i];
  const int to_root = distances->dist_to_root[j];
  if (from_root == kUnreachable || to_root == kUnreachable) return positions;
  for (int k = lo; k <= hi; ++k) {
    if (from_root < k && to_root <= cap - k) {
      if (variant == PiefVariant::kReduced2 && (k == 1 || k == cap)) continue;
      positions.push_back(k);
    }
  }
  return positions;
}

std::vector<int> picef_positions(const Instance& instance, Vertex i, Vertex j,
                                 bool reduced,
                                 const std::vector<int>* ndd_dist) {
  std::vector<int> positions;
  if (!instance.has_arc(i, j)) return positions;
  const int cap = instance.chain_cap();
  if (instance.is_ndd(i)) {
    if (cap >= 1) positions.push_back(1);
    return positions;
  }
  int first = 2;
  if (reduced) {
    std::vector<int> local;
    if (ndd_dist == nullptr) {
      local = ndd_distances(instance);
      ndd_dist = &local;
    }
    const int d = (*ndd_dist)[i];
    if (d == kUnreachable) return positions;
    first = std::max(first, d + 1);
  }
  for (int k = first; k <= cap; ++k) positions.push_back(k);
  return positions;
}

}  // namespace exclear
