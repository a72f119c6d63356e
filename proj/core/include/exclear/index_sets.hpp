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

#ifndef EXCLEAR_INDEX_SETS_HPP_
#define EXCLEAR_INDEX_SETS_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "exclear/instance.hpp"

namespace exclear {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Every elementary cycle over pair vertices with 2 <= length <= K, in
// canonical rotation, sorted lexicographically. Throws ModelTooLarge once
// more than `limit` cycles have been found.
std::vector<Cycle> enumerate_cycles(
    const Instance& instance,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Every simple NDD-initiated path with 1 <= length <= L, sorted
// lexicographically.
std::vector<Chain> enumerate_chains(
    const Instance& instance,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Unit-length BFS distances inside graph copy D^l, the subgraph induced by
// the pair vertices with id >= l.
struct CopyDistances {
  Vertex copy_root = 0;
  // Indexed by vertex id; kUnreachable outside the copy or when no path.
  std::vector<int> dist_from_root;
  std::vector<int> dist_to_root;
};

CopyDistances copy_distances(const Instance& instance, Vertex root);

// Shortest arc distance from any NDD (0 for NDDs themselves).
std::vector<int> ndd_distances(const Instance& instance);

enum class PiefVariant {
  kFull,      // K(i,j,l)
  kReduced,   // K^red(i,j,l): shortest-path pruning
  kReduced2,  // K^red minus positions 1 and K
};

// Sorted positions at which arc (i,j) may sit in a cycle of copy l. Throws
// ArcNotInCopy unless (i,j) is an arc between pair vertices both >= l.
// `distances` must belong to copy l when given; it is computed otherwise.
std::vector<int> pief_positions(const Instance& instance, Vertex i, Vertex j,
                                Vertex l, PiefVariant variant,
                                const CopyDistances* distances = nullptr);

// Sorted positions at which arc (i,j) may sit in a chain. Unreduced: {1} for
// NDD arcs, {2..L} otherwise; reduced: {d(i)+1..L} for pair sources.
std::vector<int> picef_positions(const Instance& instance, Vertex i, Vertex j,
                                 bool reduced,
                                 const std::vector<int>* ndd_dist = nullptr);

}  // namespace exclear

#endif  // EXCLEAR_INDEX_SETS_HPP_
