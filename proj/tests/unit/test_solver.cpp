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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"
#include "exclear/solver.hpp"
#include "fixtures.hpp"

namespace exclear {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-6;

int add_var(MipModel& m, double obj, double upper = 1.0, bool integral = false) {
  Variable v;
  v.objective = obj;
  v.upper = upper;
  v.integral = integral;
  return m.add_variable(v);
}

void add_row(MipModel& m, std::vector<Term> terms, Sense sense, double rhs) {
  Constraint c;
  c.terms = std::move(terms);
  c.sense = sense;
  c.rhs = rhs;
  m.add_constraint(std::move(c));
}

// Random dense-ish packing/covering LP with bounded variables.
MipModel random_model(std::mt19937_64& rng, int n, int m, bool integral) {
  std::uniform_real_distribution<double> coef(0.0, 5.0);
  std::uniform_int_distribution<int> pick(0, 9);
  MipModel model;
  for (int j = 0; j < n; ++j) add_var(model, coef(rng) - 1.0, 1.0, integral);
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (pick(rng) < 6) terms.push_back({j, std::round(coef(rng))});
    }
    const int kind = pick(rng);
    if (kind < 7) {
      add_row(model, terms, Sense::kLessEqual, 2.0 + std::round(coef(rng)));
    } else if (kind < 9) {
      add_row(model, terms, Sense::kGreaterEqual, 1.0);
    } else {
      double sum = 0.0;
      for (const Term& t : terms) sum += t.coef;
      add_row(model, terms, Sense::kEqual, std::floor(sum / 2.0));
    }
  }
  return model;
}

// Best feasible 0/1 point by enumeration; -inf when none exists.
double enumerate_binary(const MipModel& m) {
  const int n = m.num_variables();
  double best = -kInf;
  std::vector<double> x(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int j = 0; j < n; ++j) x[j] = (mask >> j) & 1u;
    if (m.max_violation(x) <= 1e-9) best = std::max(best, m.objective_value(x));
  }
  return best;
}

TEST(Simplex, EmptyModel) {
  const LpOutcome out = simplex_solve(MipModel{});
  EXPECT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, 0.0);
}

TEST(Simplex, Infeasible) {
  MipModel m;
  add_var(m, 1.0);
  add_row(m, {{0, 1.0}}, Sense::kLessEqual, 0.0);
  add_row(m, {{0, 1.0}}, Sense::kGreaterEqual, 1.0);
  EXPECT_EQ(simplex_solve(m).status, LpStatus::kInfeasible);
}

TEST(Simplex, Unbounded) {
  MipModel m;
  add_var(m, 1.0, kInf);
  add_var(m, 0.0, kInf);
  add_row(m, {{0, 1.0}, {1, -1.0}}, Sense::kLessEqual, 1.0);
  EXPECT_EQ(simplex_solve(m).status, LpStatus::kUnbounded);
}

TEST(Simplex, SmallLpWithDuals) {
  // max 3x + 2y : x + y <= 4, x + 3y <= 7, x <= 3.
  MipModel m;
  add_var(m, 3.0, kInf);
  add_var(m, 2.0, kInf);
  add_row(m, {{0, 1.0}, {1, 1.0}}, Sense::kLessEqual, 4.0);
  add_row(m, {{0, 1.0}, {1, 3.0}}, Sense::kLessEqual, 7.0);
  add_row(m, {{0, 1.0}}, Sense::kLessEqual, 3.0);
  const LpOutcome out = simplex_solve(m);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_NEAR(out.value, 11.0, kTol);
  EXPECT_NEAR(out.primal[0], 3.0, kTol);
  EXPECT_NEAR(out.primal[1], 1.0, kTol);
  EXPECT_NEAR(out.duals[0], 2.0, kTol);
  EXPECT_NEAR(out.duals[1], 0.0, kTol);
  EXPECT_NEAR(out.duals[2], 1.0, kTol);
}

TEST(Simplex, BoundOverrides) {
  MipModel m;
  add_var(m, 1.0);
  add_var(m, 1.0);
  add_row(m, {{0, 1.0}, {1, 1.0}}, Sense::kLessEqual, 1.5);
  LpOptions opt;
  opt.lower = {1.0, 0.0};
  opt.upper = {1.0, 0.0};
  const LpOutcome out = simplex_solve(m, opt);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_NEAR(out.value, 1.0, kTol);
  opt.lower = {1.0, 1.0};
  opt.upper = {1.0, 1.0};
  EXPECT_EQ(simplex_solve(m, opt).status, LpStatus::kInfeasible);
}

// Dual feasibility, complementary slackness and strong duality, with the
// reduced costs recomputed from the reported duals.
void check_duality(const MipModel& m, const LpOutcome& out) {
  const int n = m.num_variables();
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) d[j] = m.variable(j).objective;
  double dual_value = 0.0;
  for (int i = 0; i < m.num_constraints(); ++i) {
    const Constraint& row = m.constraint(i);
    const double y = out.duals[i];
    if (row.sense == Sense::kLessEqual) EXPECT_GE(y, -kTol);
    if (row.sense == Sense::kGreaterEqual) EXPECT_LE(y, kTol);
    for (const Term& t : row.terms) d[t.var] -= y * t.coef;
    dual_value += y * row.rhs;
  }
  for (int j = 0; j < n; ++j) {
    const Variable& v = m.variable(j);
    EXPECT_NEAR(d[j], out.reduced_costs[j], 1e-5);
    if (out.primal[j] < v.upper - kTol) EXPECT_LE(d[j], 1e-5);
    if (out.primal[j] > v.lower + kTol) EXPECT_GE(d[j], -1e-5);
    dual_value += d[j] > 0 ? d[j] * v.upper : d[j] * v.lower;
  }
  EXPECT_NEAR(dual_value, out.value, 1e-5 * (1.0 + std::fabs(out.value)));
}

TEST(Simplex, DualsPriceOutOnRandomModels) {
  std::mt19937_64 rng(41);
  int optimal = 0;
  for (int t = 0; t < 200; ++t) {
    const MipModel m = random_model(rng, 2 + t % 12, 1 + t % 7, false);
    const LpOutcome out = simplex_solve(m);
    if (out.status != LpStatus::kOptimal) continue;
    ++optimal;
    EXPECT_LE(m.max_violation(out.primal), 1e-6);
    EXPECT_NEAR(m.objective_value(out.primal), out.value, 1e-6);
    check_duality(m, out);
  }
  EXPECT_GT(optimal, 100);
}

TEST(Simplex, DualsOnFormulations) {
  std::mt19937_64 rng(42);
  testing::RandomSpec spec;
  spec.max_ndds = 2;
  spec.max_pairs = 9;
  for (int t = 0; t < 20; ++t) {
    const Instance inst = testing::random_instance(rng, spec);
    for (const Formulation f : {Formulation::kCf, Formulation::kPicef,
                                Formulation::kHpief}) {
      const MipModel m = build_formulation(inst, f);
      const LpOutcome out = simplex_solve(m);
      ASSERT_EQ(out.status, LpStatus::kOptimal);
      check_duality(m, out);
    }
  }
}

TEST(BranchAndBound, MatchesEnumeration) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) {
    const MipModel m = random_model(rng, 2 + t % 10, 1 + t % 5, true);
    const double want = enumerate_binary(m);
    for (const SearchOrder order : {SearchOrder::kDepthFirst, SearchOrder::kBestBound}) {
      MipConfig cfg;
      cfg.search = order;
      const MipOutcome out = branch_and_bound(m, cfg);
      if (want == -kInf) {
        EXPECT_EQ(out.status, MipStatus::kInfeasible) << "trial " << t;
        continue;
      }
      ASSERT_EQ(out.status, MipStatus::kOptimal) << "trial " << t;
      EXPECT_NEAR(out.value, want, 1e-6) << "trial " << t;
      EXPECT_LE(m.max_violation(out.assignment), 1e-6);
      EXPECT_GE(out.root_lp_value, want - 1e-6);
    }
  }
}

TEST(BranchAndBound, RelaxationSandwich) {
  std::mt19937_64 rng(44);
  testing::RandomSpec spec;
  spec.max_ndds = 2;
  spec.max_pairs = 8;
  for (int t = 0; t < 20; ++t) {
    const Instance inst = testing::random_instance(rng, spec);
    const MipModel m = build_picef(inst, false);
    const MipOutcome out = solve_mip(m);
    ASSERT_EQ(out.status, MipStatus::kOptimal);
    EXPECT_LE(out.value, solve_lp(m).value + kTol);
    EXPECT_NEAR(out.root_lp_value, solve_lp(m).value, kTol);
  }
}

TEST(BranchAndBound, NodeLimit) {
  // Fractional root: 2 of 3 items of size 2 fit in capacity 3 only once.
  MipModel m;
  for (int j = 0; j < 3; ++j) add_var(m, 1.0 + 0.1 * j, 1.0, true);
  add_row(m, {{0, 2.0}, {1, 2.0}, {2, 2.0}}, Sense::kLessEqual, 3.0);
  MipConfig cfg;
  cfg.node_limit = 1;
  const MipOutcome out = branch_and_bound(m, cfg);
  EXPECT_EQ(out.status, MipStatus::kLimitReached);
  EXPECT_GE(out.bound, 1.2 - kTol);
  EXPECT_EQ(branch_and_bound(m).status, MipStatus::kOptimal);
  EXPECT_NEAR(branch_and_bound(m).value, 1.2, kTol);
}

TEST(BranchAndBound, UnboundedRelaxation) {
  MipModel m;
  add_var(m, 1.0, kInf, false);
  try {
    branch_and_bound(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

class CountingBackend : public SolverBackend {
 public:
  explicit CountingBackend(std::string name) : name_(std::move(name)) {}
  std::string name() const override { return name_; }
  LpOutcome solve_lp(const MipModel& m, const LpOptions& o) override {
    ++lp_calls;
    return simplex_solve(m, o);
  }
  MipOutcome solve_mip(const MipModel& m, const MipConfig& c) override {
    ++mip_calls;
    return branch_and_bound(m, c);
  }
  int lp_calls = 0;
  int mip_calls = 0;

 private:
  std::string name_;
};

// Claims optimality with every variable at its upper bound.
class GreedyLiar : public CountingBackend {
 public:
  GreedyLiar() : CountingBackend("liar") {}
  MipOutcome solve_mip(const MipModel& m, const MipConfig&) override {
    MipOutcome out;
    out.status = MipStatus::kOptimal;
    out.assignment.assign(m.num_variables(), 1.0);
    out.value = m.objective_value(out.assignment);
    return out;
  }
};

class BackendTest : public ::testing::Test {
 protected:
  void TearDown() override { reset_backends(); }
};

TEST_F(BackendTest, BuiltinAlwaysPresent) {
  const auto names = registered_backends();
  EXPECT_NE(std::find(names.begin(), names.end(), "builtin"), names.end());
  EXPECT_EQ(active_backend()->name(), "builtin");
}

TEST_F(BackendTest, RegisterRoutesSolves) {
  auto counting = std::make_shared<CountingBackend>("counting");
  register_backend(counting);
  EXPECT_EQ(active_backend()->name(), "counting");
  const MipModel m = build_picef(testing::figure4(), false);
  EXPECT_NEAR(solve_mip(m).value, 4.0, kTol);
  solve_lp(m);
  EXPECT_EQ(counting->mip_calls, 1);
  EXPECT_EQ(counting->lp_calls, 1);

  select_backend("builtin");
  solve_mip(m);
  EXPECT_EQ(counting->mip_calls, 1);
  select_backend("counting");
  solve_mip(m);
  EXPECT_EQ(counting->mip_calls, 2);
}

TEST_F(BackendTest, UnknownName) {
  try {
    select_backend("nonesuch");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownBackend);
  }
}

TEST_F(BackendTest, ResetDropsRegistrations) {
  register_backend(std::make_shared<CountingBackend>("counting"));
  reset_backends();
  EXPECT_EQ(active_backend()->name(), "builtin");
  EXPECT_EQ(registered_backends().size(), 1u);
}

TEST_F(BackendTest, BadAdapterCaughtByDecode) {
  register_backend(std::make_shared<GreedyLiar>());
  const Instance inst = testing::figure4();
  const MipModel m = build_picef(inst, false);
  const MipOutcome out = solve_mip(m);
  try {
    decode_solution(m, out.assignment, inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleAssignment);
  }
}

TEST_F(BackendTest, CrossCheck) {
  const MipModel m = build_picef(testing::figure1(), false);
  BuiltinBackend builtin;
  CountingBackend same("same");
  GreedyLiar liar;
  EXPECT_FALSE(cross_check_mip(m, builtin, same).diverged);
  EXPECT_FALSE(cross_check_lp(m, builtin, same).diverged);
  const CrossCheck bad = cross_check_mip(m, builtin, liar);
  EXPECT_TRUE(bad.diverged);
  EXPECT_NEAR(bad.reference_value, 5.0, kTol);
}

}  // namespace
}  // namespace exclear
