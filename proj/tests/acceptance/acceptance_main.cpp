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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 125).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"
#include "exclear/harness.hpp"
#include "exclear/pricing.hpp"
#include "exclear/solver.hpp"
#include "fixtures.hpp"
#include "naive_pricer.hpp"
#include "report.hpp"

namespace {

using namespace exclear;
using exclear::testing::lp_value;
using exclear::testing::mip_value;

constexpr double kTol = 1e-6;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << ": got " << got << ", want " << want;
    expect(std::fabs(got - want) <= tol, msg.str());
  }
};

double oracle(const Instance& inst) {
  const Solution s = brute_force_optimum(inst);
  return s.expected_weight ? *s.expected_weight : s.weight;
}

double bnp_value(const Instance& inst) {
  const Solution s = solve_picef_bnp(inst).solution;
  return s.expected_weight ? *s.expected_weight : s.weight;
}

const std::vector<Formulation> kWithChains = {
    Formulation::kCf,           Formulation::kPicef,
    Formulation::kPicefReduced, Formulation::kHpief,
    Formulation::kHpiefReduced, Formulation::kHpiefReduced2};

void criterion1(Check& c) {
  const Instance inst = testing::figure1();
  for (const Formulation f : kWithChains) {
    c.near(mip_value(inst, f), 5.0, 0.0, formulation_name(f));
  }
  const Solution bnp = solve_picef_bnp(inst).solution;
  c.near(bnp.weight, 5.0, 0.0, "picef-bnp");
  verify_solution(inst, bnp);
  c.near(oracle(inst), 5.0, 0.0, "oracle");
}

void criterion2(Check& c) {
  const Instance inst = testing::figure4();
  for (const Formulation f : {Formulation::kPicef, Formulation::kPicefReduced,
                              Formulation::kHpief, Formulation::kCf}) {
    c.near(mip_value(inst, f), 4.0, 0.0, formulation_name(f));
  }
  c.near(bnp_value(inst), 4.0, 0.0, "picef-bnp");
}

void criterion3(Check& c) {
  const Instance inst = make_family({Family::kTwoArm});
  c.near(lp_value(inst, Formulation::kCf), 3.0, kTol, "LPR(cf)");
  c.near(lp_value(inst, Formulation::kPicef), 3.5, kTol, "LPR(picef)");
  c.near(mip_value(inst, Formulation::kPicef), 3.0, kTol, "IP(picef)");
  c.near(mip_value(inst, Formulation::kCf), 3.0, kTol, "IP(cf)");
  c.near(oracle(inst), 3.0, kTol, "oracle");
}

void criterion4(Check& c) {
  double last_ratio = 0.0;
  for (int K = 2; K <= 4; ++K) {
    const int L = K + 3;
    const Instance inst = make_family({Family::kUdders, K, L});
    const std::string tag = "K=" + std::to_string(K) + " ";
    const double cf = lp_value(inst, Formulation::kCf);
    const double picef = lp_value(inst, Formulation::kPicef);
    c.near(cf, L, kTol, tag + "LPR(cf)");
    c.near(mip_value(inst, Formulation::kCf), L, kTol, tag + "IP(cf)");
    c.near(mip_value(inst, Formulation::kPicef), L, kTol, tag + "IP(picef)");
    c.near(oracle(inst), L, kTol, tag + "oracle");
    c.expect(picef > cf + kTol, tag + "LPR(picef) not above LPR(cf)");
    const double ratio = picef / cf;
    c.expect(ratio > last_ratio + kTol, tag + "ratio not increasing");
    std::printf("      udders K=%d L=%d: LPR(cf)=%.6f LPR(picef)=%.6f ratio=%.6f\n",
                K, L, cf, picef, ratio);
    last_ratio = ratio;
  }
}

void criterion5(Check& c) {
  std::mt19937_64 rng(5);
  testing::RandomSpec spec;
  spec.min_pairs = 3;
  spec.max_pairs = 10;
  spec.min_cycle_cap = 2;
  spec.max_cycle_cap = 4;
  spec.min_chain_cap = 0;
  spec.max_chain_cap = 0;
  for (int t = 0; t < 300 && c.ok; ++t) {
    const Instance inst = testing::random_instance(rng, spec);
    const std::string tag = "instance " + std::to_string(t) + " ";
    c.near(lp_value(inst, Formulation::kCf), lp_value(inst, Formulation::kPief),
           kTol, tag + "LPR(cf) vs LPR(pief)");
    const double best = oracle(inst);
    c.near(mip_value(inst, Formulation::kPief), best, kTol, tag + "pief");
    c.near(mip_value(inst, Formulation::kPiefReduced), best, kTol, tag + "piefr");
    if (inst.cycle_cap() >= 3) {
      c.near(mip_value(inst, Formulation::kPiefReduced2), best, kTol, tag + "pief2");
    }
  }
}

void criterion6(Check& c) {
  std::mt19937_64 rng(6);
  testing::RandomSpec spec;
  spec.min_ndds = 1;
  spec.max_ndds = 3;
  spec.min_pairs = 3;
  spec.max_pairs = 10;
  spec.min_cycle_cap = 2;
  spec.max_cycle_cap = 3;
  spec.min_chain_cap = 1;
  spec.max_chain_cap = 5;
  for (int t = 0; t < 200 && c.ok; ++t) {
    const Instance inst = testing::random_instance(rng, spec);
    const std::string tag = "instance " + std::to_string(t) + " ";
    const double picef = lp_value(inst, Formulation::kPicef);
    c.near(lp_value(inst, Formulation::kHpief), picef, kTol,
           tag + "LPR(hpief) vs LPR(picef)");
    c.expect(lp_value(inst, Formulation::kCf) <= picef + kTol,
             tag + "LPR(cf) above LPR(picef)");
    const double best = oracle(inst);
    for (const Formulation f : kWithChains) {
      if (f == Formulation::kHpiefReduced2 && inst.cycle_cap() < 3) continue;
      c.near(mip_value(inst, f), best, kTol, tag + formulation_name(f));
    }
  }
}

void criterion7(Check& c) {
  std::mt19937_64 rng(7);
  testing::RandomSpec spec;
  spec.min_ndds = 0;
  spec.max_ndds = 3;
  spec.max_pairs = 9;
  spec.max_cycle_cap = 3;
  spec.max_chain_cap = 4;
  const double probs[] = {0.3, 0.7, 1.0};
  for (int t = 0; t < 200 && c.ok; ++t) {
    const double p = probs[t % 3];
    const Instance base = testing::random_instance(rng, spec);
    const Instance inst = base.with_failure_prob(p);
    const std::string tag = "instance " + std::to_string(t) + " p=" +
                            std::to_string(p) + " ";
    const double aware = mip_value(inst, Formulation::kPicef);
    c.near(aware, oracle(inst), kTol, tag + "expected optimum");
    c.near(mip_value(inst, Formulation::kPicefReduced), aware, kTol,
           tag + "picef-red");
    if (p == 1.0) {
      c.near(aware, mip_value(base, Formulation::kPicef), kTol,
             tag + "deterministic optimum");
    }
  }
}

void criterion8(Check& c) {
  std::mt19937_64 rng(8);
  testing::RandomSpec spec;
  spec.min_pairs = 3;
  spec.max_pairs = 9;
  spec.min_cycle_cap = 2;
  spec.max_cycle_cap = 4;
  spec.min_chain_cap = 0;
  spec.max_chain_cap = 0;
  spec.min_density = 0.2;
  spec.max_density = 0.6;
  const double probs[] = {0.3, 0.5, 0.8, 1.0};
  for (int t = 0; t < 500 && c.ok; ++t) {
    const Instance inst = testing::random_instance(rng, spec);
    const double p = probs[t % 4];
    const PricingDuals duals = testing::random_duals(rng, inst, 0.0, 3.0);
    const std::string tag = "draw " + std::to_string(t) + " ";
    const auto found = price_cycles_discounted(inst, duals, p);
    const auto brute = brute_force_pricing(inst, duals, p);
    c.expect(found.empty() == !brute.has_value(), tag + "emptiness disagrees");
    for (const PricedCycle& pc : found) {
      c.expect(testing::independent_price(inst, duals, pc.cycle, p) > 0.0,
               tag + "returned cycle has nonpositive price");
    }
    if (p == 1.0) {
      const auto det = price_cycles_deterministic(inst, duals);
      const double a = found.empty() ? 0.0 : found.front().price;
      const double b = det.empty() ? 0.0 : det.front().price;
      c.near(a, b, 1e-9, tag + "p=1 max price");
    }
  }
  const testing::LengthTrap trap = testing::length_trap();
  const auto found = price_cycles_discounted(trap.instance, trap.duals, trap.p);
  const bool hit = std::any_of(found.begin(), found.end(), [&](const PricedCycle& pc) {
    return pc.cycle == trap.profitable;
  });
  c.expect(hit, "length trap: profitable 4-cycle missed");
  c.expect(testing::naive_discounted_pricing(trap.instance, trap.duals, trap.p).empty(),
           "length trap: length-agnostic search unexpectedly found it");
}

void criterion9(Check& c) {
  std::mt19937_64 rng(9);
  testing::RandomSpec spec;
  spec.min_ndds = 0;
  spec.max_ndds = 3;
  spec.min_pairs = 3;
  spec.max_pairs = 9;
  spec.min_cycle_cap = 2;
  spec.max_cycle_cap = 4;
  spec.min_chain_cap = 1;
  spec.max_chain_cap = 5;
  for (int t = 0; t < 100 && c.ok; ++t) {
    Instance inst = testing::random_instance(rng, spec);
    if (t % 2 == 1) inst = inst.with_failure_prob(0.7);
    const std::string tag = "instance " + std::to_string(t) + " ";
    const BnpResult bnp = solve_picef_bnp(inst);
    const double bnp_obj = bnp.solution.expected_weight ? *bnp.solution.expected_weight
                                                        : bnp.solution.weight;
    c.near(bnp_obj, mip_value(inst, Formulation::kPicef), kTol, tag + "value");
    MipModel full = build_picef(inst, false);
    if (inst.failure_prob()) full = apply_failure_objective(full, inst);
    c.near(bnp.stats.root_bound, solve_lp(full).value, kTol, tag + "root bound");
  }
}

void criterion10(Check& c) {
  std::mt19937_64 rng(10);
  testing::RandomSpec cyc;
  cyc.min_pairs = 4;
  cyc.max_pairs = 10;
  cyc.min_cycle_cap = 3;
  cyc.max_cycle_cap = 4;
  cyc.min_chain_cap = 0;
  cyc.max_chain_cap = 0;
  long before = 0;
  long after = 0;
  for (int t = 0; t < 50 && c.ok; ++t) {
    const Instance inst = testing::random_instance(rng, cyc);
    const std::string tag = "instance " + std::to_string(t) + " ";
    const int full = build_pief(inst, PiefVariant::kFull).num_variables();
    const int red = build_pief(inst, PiefVariant::kReduced).num_variables();
    const int red2 = build_pief(inst, PiefVariant::kReduced2).num_variables();
    c.expect(red2 <= red && red <= full, tag + "PIEF variable counts out of order");
    const double best = mip_value(inst, Formulation::kPief);
    c.near(mip_value(inst, Formulation::kPiefReduced), best, kTol, tag + "piefr");
    c.near(mip_value(inst, Formulation::kPiefReduced2), best, kTol, tag + "pief2");
    const Relabeling rl = relabel_by_degree(inst);
    before += red2;
    after += build_pief(rl.instance, PiefVariant::kReduced2).num_variables();
    c.near(mip_value(rl.instance, Formulation::kPiefReduced2), best, kTol,
           tag + "relabelled pief2");
  }
  c.expect(after <= before, "relabelling increased the mean PIEF2 size");
  std::printf("      mean pief2 variables: %.2f before relabel, %.2f after\n",
              before / 50.0, after / 50.0);

  testing::RandomSpec chains;
  chains.min_ndds = 1;
  chains.max_ndds = 3;
  chains.max_pairs = 9;
  chains.max_chain_cap = 5;
  for (int t = 0; t < 50 && c.ok; ++t) {
    const Instance inst = testing::random_instance(rng, chains);
    const std::string tag = "chain instance " + std::to_string(t) + " ";
    c.expect(build_picef(inst, true).num_variables() <=
                 build_picef(inst, false).num_variables(),
             tag + "reduced PICEF larger");
    c.near(mip_value(inst, Formulation::kPicefReduced),
           mip_value(inst, Formulation::kPicef), kTol, tag + "picef-red");
  }
}

void criterion11(Check& c) {
  for (const testing::CliCall& call : testing::determinism_commands()) {
    const std::string a = testing::strip_wall_time(testing::run_cli(call));
    const std::string b = testing::strip_wall_time(testing::run_cli(call));
    c.expect(!a.empty(), "empty report");
    c.expect(a == b, "reports differ between runs");
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "figure-1 optimum 5 under every formulation", 1.0, criterion1},
      {2, "figure-4 optimum 4 (picef, picef-red, hpief, cf, bnp)", 1.0, criterion2},
      {3, "two-arm LPR(cf)=3, LPR(picef)=3.5, IP=3", 1.0, criterion3},
      {4, "udders LPR(cf)=IP=L, LPR(picef) strictly above, ratio rising in K", 5.0,
       criterion4},
      {5, "cf/pief LPR identity and pief IP optima on 300 cycle-only instances",
       60.0, criterion5},
      {6, "hpief/picef LPR identity and IP optima on 200 instances with NDDs",
       60.0, criterion6},
      {7, "failure-aware picef equals brute-force expected optimum", 60.0,
       criterion7},
      {8, "discounted pricing complete and sound on 500 draws plus length trap",
       30.0, criterion8},
      {9, "branch and price matches monolithic picef on 100 instances", 120.0,
       criterion9},
      {10, "reductions shrink models and keep optima; relabel never grows pief2",
       120.0, criterion10},
      {11, "repeated CLI runs produce identical reports", 60.0, criterion11},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_s) {
      std::ostringstream msg;
      msg << "took " << secs << " s, budget " << cr.budget_s << " s";
      check.expect(false, msg.str());
    }
    if (!check.ok) ++failed;
    std::printf("%s  criterion %2d  %-72s %8.3f s%s%s\n", check.ok ? "PASS" : "FAIL",
                cr.id, cr.title, secs, check.ok ? "" : "  -- ",
                check.ok ? "" : check.why.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return std::min(failed, 125);
}
