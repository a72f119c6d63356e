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

#ifndef EXCLEAR_INSTANCE_HPP_
#define EXCLEAR_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exclear {

// Vertex ids are 1-based. Ids 1..num_ndds are non-directed donors (NDDs),
// the following num_pairs ids are patient-donor pairs.
using Vertex = int;

struct Arc {
  Vertex source = 0;
  Vertex target = 0;
  double weight = 1.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A compatibility digraph plus the cycle cap K, chain cap L and the optional
// uniform arc success probability. Immutable once built.
class Instance {
 public:
  Instance() = default;

  int num_ndds() const { return num_ndds_; }
  int num_pairs() const { return num_pairs_; }
  int num_vertices() const { return num_ndds_ + num_pairs_; }
  int cycle_cap() const { return cycle_cap_; }
  int chain_cap() const { return chain_cap_; }
  const std::optional<double>& failure_prob() const { return failure_prob_; }

  bool is_ndd(Vertex v) const { return v >= 1 && v <= num_ndds_; }
  bool is_pair(Vertex v) const { return v > num_ndds_ && v <= num_vertices(); }
  Vertex first_pair() const { return num_ndds_ + 1; }

  // Sorted by (source, target).
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const Arc> out_arcs(Vertex v) const;
  // Indices into arcs(), sorted by source.
  std::span<const int> in_arc_ids(Vertex v) const;

  std::optional<double> weight(Vertex source, Vertex target) const;
  bool has_arc(Vertex source, Vertex target) const {
    return weight(source, target).has_value();
  }
  int out_degree(Vertex v) const { return static_cast<int>(out_arcs(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_arc_ids(v).size()); }

  Instance with_caps(int cycle_cap, int chain_cap) const;
  Instance with_failure_prob(std::optional<double> p) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.num_ndds_ == b.num_ndds_ && a.num_pairs_ == b.num_pairs_ &&
           a.cycle_cap_ == b.cycle_cap_ && a.chain_cap_ == b.chain_cap_ &&
           a.failure_prob_ == b.failure_prob_ && a.arcs_ == b.arcs_;
  }

 private:
  friend Instance build_instance(int, int, std::vector<Arc>, int, int,
                                 std::optional<double>);

  int num_ndds_ = 0;
  int num_pairs_ = 0;
  int cycle_cap_ = 0;
  int chain_cap_ = 0;
  std::optional<double> failure_prob_;
  std::vector<Arc> arcs_;
  std::vector<int> out_begin_{0, 0};
  std::vector<int> in_begin_{0, 0};
  std::vector<int> in_ids_;
};

// Validates and builds an instance. Throws Error with LoopArc, ArcIntoNdd,
// DuplicateArc, VertexOutOfRange, NegativeWeight, BadProbability or
// BadParameter (negative counts or caps).
Instance build_instance(int num_ndds, int num_pairs, std::vector<Arc> arcs,
                        int cycle_cap, int chain_cap,
                        std::optional<double> failure_prob = std::nullopt);

// JSON instance file:
//   {"ndds": int, "pairs": int, "cycle_cap": int, "chain_cap": int,
//    "failure_prob": number|null, "arcs": [[src, dst, weight], ...]}
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// An elementary cycle over pair vertices, rotated so the smallest vertex
// comes first. vertices[i] -> vertices[i+1] and back to vertices[0].
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Rotates a vertex sequence into canonical cycle form.
Cycle make_cycle(std::vector<Vertex> vertices);

// An NDD-initiated simple path; vertices.front() is the NDD.
struct Chain {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

double cycle_weight(const Instance& instance, const Cycle& cycle);
double chain_weight(const Instance& instance, const Chain& chain);
// p^|c| * w_c.
double cycle_expected_weight(const Instance& instance, const Cycle& cycle,
                             double p);
// sum_k p^k * w(a_k): an arc pays off only if every arc before it succeeds.
double chain_expected_weight(const Instance& instance, const Chain& chain,
                             double p);

struct WeightSpec {
  enum class Mode { kUnit, kUniformInt };
  Mode mode = Mode::kUnit;
  int lo = 1;
  int hi = 1;
};

struct GeneratorParams {
  int num_ndds = 0;
  int num_pairs = 0;
  double arc_density = 0.0;
  WeightSpec weights;
  int cycle_cap = 3;
  int chain_cap = 3;
  std::uint64_t seed = 0;
  std::optional<double> failure_prob;
};

// Synthetic Erdos-Renyi style instance: every admissible ordered pair
// (any source, pair target, no loop) gets an arc with probability
// arc_density. Deterministic in the seed on every platform.
Instance generate_random(const GeneratorParams& params);

struct Relabeling {
  Instance instance;
  // new_to_old[v] is the original id of relabelled vertex v; index 0 unused.
  std::vector<Vertex> new_to_old;
};

// Renumbers pair vertices by nonincreasing total degree (ties by original
// id); NDD ids are left untouched.
Relabeling relabel_by_degree(const Instance& instance);

}  // namespace exclear

#endif  // EXCLEAR_INSTANCE_HPP_
