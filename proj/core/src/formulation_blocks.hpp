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

#ifndef EXCLEAR_SRC_FORMULATION_BLOCKS_HPP_
#define EXCLEAR_SRC_FORMULATION_BLOCKS_HPP_

#include <vector>

#include "exclear/formulations.hpp"

namespace exclear::detail {

// Capacity terms gathered per vertex id before the rows are emitted.
using CapacityTerms = std::vector<std::vector<Term>>;

// Adds x^l_{ijk} variables for every copy of the pair subgraph together with
// their flow-conservation rows, and appends each variable's capacity
// contribution to `capacity`.
void add_cycle_position_block(const Instance& instance, PiefVariant variant,
                              MipModel& model, CapacityTerms& capacity);

// Adds y_{ijk} variables and the NDD capacity and chain flow rows; incoming
// chain arcs are appended to `capacity`.
void add_chain_position_block(const Instance& instance, bool reduced,
                              MipModel& model, CapacityTerms& capacity);

// One <= 1 row per vertex in [first, last] with nonempty terms (or every
// vertex when keep_empty is set).
void add_capacity_rows(MipModel& model, const CapacityTerms& capacity,
                       Vertex first, Vertex last, bool keep_empty = false);

double adjusted_weight_unchecked(const Instance& instance, Vertex i, Vertex j,
                                 int k, Vertex l);

}  // namespace exclear::detail

#endif  // EXCLEAR_SRC_FORMULATION_BLOCKS_HPP_
