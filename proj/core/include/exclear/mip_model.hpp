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

#ifndef EXCLEAR_MIP_MODEL_HPP_
#define EXCLEAR_MIP_MODEL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exclear/instance.hpp"

namespace exclear {

enum class VarKind {
  kPiefX,        // x^l_{ijk}: arc (i,j) at position k of the cycle in copy l
  kPicefY,       // y_{ijk}: arc (i,j) at position k of a chain
  kStructureZ,   // z_c: one whole cycle or chain
  kFree,         // untagged, for hand-built models
};

struct VarTag {
  VarKind kind = VarKind::kFree;
  Vertex i = 0;
  Vertex j = 0;
  int k = 0;
  Vertex l = 0;
  int structure = -1;  // index into MipModel::structures() for kStructureZ
};

enum class RowKind {
  kVertexCapacity,  // pair (or any vertex, for CF) used at most once
  kNddCapacity,     // an NDD starts at most one chain
  kCycleFlow,       // copy l, vertex i, positions k -> k+1
  kChainFlow,       // vertex i, chain positions k -> k+1
  kFree,
};

struct RowTag {
  RowKind kind = RowKind::kFree;
  Vertex vertex = 0;
  int k = 0;
  Vertex l = 0;
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Variable {
  VarTag tag;
  double lower = 0.0;
  double upper = 1.0;
  bool integral = true;
  double objective = 0.0;
};

struct Constraint {
  RowTag tag;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

enum class Formulation {
  kCustom,
  kCf,
  kPief,
  kPiefReduced,
  kPiefReduced2,
  kPicef,
  kPicefReduced,
  kHpief,
  kHpiefReduced,
  kHpiefReduced2,
};

std::string formulation_name(Formulation f);

// A cycle or chain attached to a z variable.
struct Structure {
  bool is_chain = false;
  std::vector<Vertex> vertices;
};

// Linear objective (always maximised) and linear rows over bounded
// variables. Formulation builders fill one in and hand it out as a value.
class MipModel {
 public:
  MipModel() = default;
  explicit MipModel(Formulation formulation, int cycle_cap = 0,
                    int chain_cap = 0)
      : formulation_(formulation), cycle_cap_(cycle_cap), chain_cap_(chain_cap) {}

  int add_variable(const Variable& var);
  // Terms on the same variable are merged; zero coefficients are dropped.
  int add_constraint(Constraint row);
  // Adds `coef` to the coefficient of `var` in row `row`.
  void add_term(int row, int var, double coef);
  int add_structure(Structure structure);
  void set_objective(int var, double coef) { vars_.at(var).objective = coef; }
  void set_discount(std::optional<double> p) { discount_ = p; }

  Formulation formulation() const { return formulation_; }
  int cycle_cap() const { return cycle_cap_; }
  int chain_cap() const { return chain_cap_; }
  // Set when the objective has been rewritten to expected weights.
  const std::optional<double>& discount() const { return discount_; }

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const std::vector<Structure>& structures() const { return structures_; }
  const Variable& variable(int v) const { return vars_.at(v); }
  const Constraint& constraint(int r) const { return rows_.at(r); }

  std::string variable_name(int v) const;
  std::string constraint_name(int r) const;

  double objective_value(std::span<const double> values) const;
  // Largest bound or row violation of a point.
  double max_violation(std::span<const double> values) const;

 private:
  Formulation formulation_ = Formulation::kCustom;
  int cycle_cap_ = 0;
  int chain_cap_ = 0;
  std::optional<double> discount_;
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  std::vector<Structure> structures_;
};

// CPLEX-LP style text: objective, rows, bounds and binaries, in model order.
std::string dump_model(const MipModel& model);

}  // namespace exclear

#endif  // EXCLEAR_MIP_MODEL_HPP_
