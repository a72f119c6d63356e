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
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "exclear/error.hpp"
#include "exclear/harness.hpp"

namespace exclear {
namespace {

struct Item {
  bool is_chain = false;
  std::vector<Vertex> vertices;
  double value = 0.0;
  std::uint64_t mask = 0;
};

double arc_w(const Instance& inst, Vertex a, Vertex b) {
  for (const Arc& arc : inst.out_arcs(a)) {
    if (arc.target == b) return arc.weight;
  }
  return 0.0;
}

double loop_value(const Instance& inst, const std::vector<Vertex>& vs,
                  std::optional<double> p) {
  double total = 0.0;
  for (std::size_t t = 0; t < vs.size(); ++t) {
    total += arc_w(inst, vs[t], vs[(t + 1) % vs.size()]);
  }
  if (!p) return total;
  double factor = 1.0;
  for (std::size_t t = 0; t < vs.size(); ++t) factor *= *p;
  return factor * total;
}

double path_value(const Instance& inst, const std::vector<Vertex>& vs,
                  std::optional<double> p) {
  double total = 0.0;
  double factor = 1.0;
  for (std::size_t t = 0; t + 1 < vs.size(); ++t) {
    if (p) factor *= *p;
    total += factor * arc_w(inst, vs[t], vs[t + 1]);
  }
  return total;
}

void too_large(const std::string& what) {
  throw Error(ErrorCode::kTooLargeForOracle, what);
}

// Every simple closed path through pair vertices, found from each start and
// deduplicated by rotating the smallest vertex to the front.
std::set<std::vector<Vertex>> all_cycles(const Instance& inst,
                                         std::size_t budget) {
  std::set<std::vector<Vertex>> out;
  const int n = inst.num_vertices();
  const int cap = inst.cycle_cap();
  std::vector<Vertex> path;
  std::vector<char> seen(n + 1, 0);
  auto dfs = [&](auto&& self) -> void {
    const Vertex v = path.back();
    for (const Arc& a : inst.out_arcs(v)) {
      const Vertex u = a.target;
      if (u == path.front() && path.size() >= 2) {
        std::vector<Vertex> c = path;
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        out.insert(std::move(c));
        if (out.size() > budget) too_large("too many cycles for the oracle");
        continue;
      }
      if (seen[u] || !inst.is_pair(u) || static_cast<int>(path.size()) >= cap) {
        continue;
      }
      seen[u] = 1;
      path.push_back(u);
      self(self);
      path.pop_back();
      seen[u] = 0;
    }
  };
  if (cap < 2) return out;
  for (Vertex s = 1; s <= n; ++s) {
    if (!inst.is_pair(s)) continue;
    path.assign(1, s);
    seen[s] = 1;
    dfs(dfs);
    seen[s] = 0;
  }
  return out;
}

std::vector<std::vector<Vertex>> all_chains(const Instance& inst,
                                            std::size_t budget) {
  std::vector<std::vector<Vertex>> out;
  const int n = inst.num_vertices();
  const int cap = inst.chain_cap();
  std::vector<Vertex> path;
  std::vector<char> seen(n + 1, 0);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) - 1 >= cap) return;
    for (const Arc& a : inst.out_arcs(path.back())) {
      const Vertex u = a.target;
      if (seen[u] || !inst.is_pair(u)) continue;
      seen[u] = 1;
      path.push_back(u);
      out.push_back(path);
      if (out.size() > budget) too_large("too many chains for the oracle");
      self(self);
      path.pop_back();
      seen[u] = 0;
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    if (!inst.is_ndd(s)) continue;
    path.assign(1, s);
    seen[s] = 1;
    dfs(dfs);
    seen[s] = 0;
  }
  return out;
}

// Best packing of the items using only vertices in `free`; branching on the
// lowest free vertex that some item covers.
class PackingSearch {
 public:
  PackingSearch(const std::vector<Item>& items, int n) : items_(items), by_vertex_(n + 1) {
    for (std::size_t t = 0; t < items.size(); ++t) {
      for (const Vertex v : items[t].vertices) by_vertex_[v].push_back(static_cast<int>(t));
      coverable_ |= items[t].mask;
    }
  }

  double best(std::uint64_t free) {
    free &= coverable_;
    if (free == 0) return 0.0;
    if (const auto it = memo_.find(free); it != memo_.end()) return it->second.value;
    const int low = std::countr_zero(free);
    const std::uint64_t without = free & ~(std::uint64_t{1} << low);
    double value = best(without);
    int choice = -1;
    for (const int t : by_vertex_[low + 1]) {
      const Item& item = items_[t];
      if ((item.mask & free) != item.mask) continue;
      const double with = item.value + best(free & ~item.mask);
      if (with > value) {
        value = with;
        choice = t;
      }
    }
    memo_[free] = {value, choice};
    return value;
  }

  std::vector<int> chosen(std::uint64_t free) {
    std::vector<int> out;
    for (;;) {
      free &= coverable_;
      if (free == 0) break;
      best(free);
      const Entry e = memo_.at(free);
      if (e.choice < 0) {
        free &= ~(std::uint64_t{1} << std::countr_zero(free));
      } else {
        out.push_back(e.choice);
        free &= ~items_[e.choice].mask;
      }
    }
    return out;
  }

 private:
  struct Entry {
    double value;
    int choice;
  };
  const std::vector<Item>& items_;
  std::vector<std::vector<int>> by_vertex_;
  std::uint64_t coverable_ = 0;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace

Solution brute_force_optimum(const Instance& instance, const OracleLimits& limits) {
  const int n = instance.num_vertices();
  if (n > std::min(limits.max_vertices, 64)) {
    too_large(std::to_string(n) + " vertices");
  }
  const auto& p = instance.failure_prob();
  std::vector<Item> items;
  auto bit = [](Vertex v) { return std::uint64_t{1} << (v - 1); };
  for (const auto& c : all_cycles(instance, limits.max_structures)) {
    Item it{false, c, loop_value(instance, c, p), 0};
    for (const Vertex v : c) it.mask |= bit(v);
    items.push_back(std::move(it));
  }
  for (auto& c : all_chains(instance, limits.max_structures)) {
    Item it{true, c, path_value(instance, c, p), 0};
    for (const Vertex v : c) it.mask |= bit(v);
    items.push_back(std::move(it));
  }
  if (items.size() > limits.max_structures) too_large("too many structures");

  PackingSearch search(items, n);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const double best = search.best(all);

  Solution out;
  for (const int t : search.chosen(all)) {
    if (items[t].is_chain) {
      out.chains.push_back(Chain{items[t].vertices});
    } else {
      out.cycles.push_back(Cycle{items[t].vertices});
    }
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  std::sort(out.chains.begin(), out.chains.end(),
            [](const Chain& a, const Chain& b) { return a.vertices < b.vertices; });
  double weight = 0.0;
  for (const Cycle& c : out.cycles) weight += loop_value(instance, c.vertices, std::nullopt);
  for (const Chain& c : out.chains) weight += path_value(instance, c.vertices, std::nullopt);
  out.weight = weight;
  if (p) {
    out.expected_weight = best;
  } else {
    out.weight = best;
  }
  return out;
}

std::optional<PricedCycle> brute_force_pricing(const Instance& instance,
                                               const PricingDuals& duals,
                                               std::optional<double> p,
                                               const OracleLimits& limits) {
  std::optional<PricedCycle> best;
  for (const auto& c : all_cycles(instance, limits.max_structures)) {
    double dual_sum = 0.0;
    for (const Vertex v : c) dual_sum += duals.at(v);
    const double price = loop_value(instance, c, p) - dual_sum;
    if (price > kPriceEpsilon && (!best || price > best->price)) {
      best = PricedCycle{Cycle{c}, price};
    }
  }
  return best;
}

}  // namespace exclear
