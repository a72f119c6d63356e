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

#include "exclear/mip_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "exclear/error.hpp"

namespace exclear {
namespace {

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (const Vertex v : vs) {
    out += '_';
    out += std::to_string(v);
  }
  return out;
}

std::string format_coef(double c) {
  std::ostringstream os;
  os.precision(17);
  os << (c < 0 ? "- " : "+ ") << std::fabs(c);
  return os.str();
}

}  // namespace

std::string formulation_name(Formulation f) {
  switch (f) {
    case Formulation::kCustom: return "custom";
    case Formulation::kCf: return "cf";
    case Formulation::kPief: return "pief";
    case Formulation::kPiefReduced: return "piefr";
    case Formulation::kPiefReduced2: return "pief2";
    case Formulation::kPicef: return "picef";
    case Formulation::kPicefReduced: return "picef-red";
    case Formulation::kHpief: return "hpief";
    case Formulation::kHpiefReduced: return "hpiefr";
    case Formulation::kHpiefReduced2: return "hpief2";
  }
  return "custom";
}

int MipModel::add_variable(const Variable& var) {
  vars_.push_back(var);
  return static_cast<int>(vars_.size()) - 1;
}

int MipModel::add_constraint(Constraint row) {
  for (const Term& t : row.terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw Error(ErrorCode::kBadParameter,
                  "constraint references unknown variable " +
                      std::to_string(t.var));
    }
  }
  std::sort(row.terms.begin(), row.terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const Term& t : row.terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  row.terms = std::move(merged);
  rows_.push_back(std::move(row));
  return static_cast<int>(rows_.size()) - 1;
}

void MipModel::add_term(int row, int var, double coef) {
  if (var < 0 || var >= num_variables()) {
    throw Error(ErrorCode::kBadParameter,
                "term references unknown variable " + std::to_string(var));
  }
  std::vector<Term>& terms = rows_.at(row).terms;
  auto it = std::lower_bound(
      terms.begin(), terms.end(), var,
      [](const Term& t, int v) { return t.var < v; });
  if (it != terms.end() && it->var == var) {
    it->coef += coef;
    if (it->coef == 0.0) terms.erase(it);
  } else if (coef != 0.0) {
    terms.insert(it, Term{var, coef});
  }
}

int MipModel::add_structure(Structure structure) {
  structures_.push_back(std::move(structure));
  return static_cast<int>(structures_.size()) - 1;
}

std::string MipModel::variable_name(int v) const {
  const VarTag& tag = vars_.at(v).tag;
  switch (tag.kind) {
    case VarKind::kPiefX:
      return "x_" + std::to_string(tag.i) + "_" + std::to_string(tag.j) + "_" +
             std::to_string(tag.k) + "_c" + std::to_string(tag.l);
    case VarKind::kPicefY:
      return "y_" + std::to_string(tag.i) + "_" + std::to_string(tag.j) + "_" +
             std::to_string(tag.k);
    case VarKind::kStructureZ: {
      const Structure& s = structures_.at(tag.structure);
      return (s.is_chain ? "zh" : "zc") + join_vertices(s.vertices);
    }
    case VarKind::kFree:
      break;
  }
  return "v" + std::to_string(v);
}

std::string MipModel::constraint_name(int r) const {
  const RowTag& tag = rows_.at(r).tag;
  switch (tag.kind) {
    case RowKind::kVertexCapacity:
      return "cap_" + std::to_string(tag.vertex);
    case RowKind::kNddCapacity:
      return "ndd_" + std::to_string(tag.vertex);
    case RowKind::kCycleFlow:
      return "flow_c" + std::to_string(tag.l) + "_" +
             std::to_string(tag.vertex) + "_" + std::to_string(tag.k);
    case RowKind::kChainFlow:
      return "chain_" + std::to_string(tag.vertex) + "_" +
             std::to_string(tag.k);
    case RowKind::kFree:
      break;
  }
  return "r" + std::to_string(r);
}

double MipModel::objective_value(std::span<const double> values) const {
  double total = 0.0;
  for (int v = 0; v < num_variables(); ++v) {
    total += vars_[v].objective * values[v];
  }
  return total;
}

double MipModel::max_violation(std::span<const double> values) const {
  double worst = 0.0;
  for (int v = 0; v < num_variables(); ++v) {
    worst = std::max(worst, vars_[v].lower - values[v]);
    worst = std::max(worst, values[v] - vars_[v].upper);
  }
  for (const Constraint& row : rows_) {
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coef * values[t.var];
    switch (row.sense) {
      case Sense::kLessEqual: worst = std::max(worst, lhs - row.rhs); break;
      case Sense::kGreaterEqual: worst = std::max(worst, row.rhs - lhs); break;
      case Sense::kEqual: worst = std::max(worst, std::fabs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

std::string dump_model(const MipModel& model) {
  std::ostringstream os;
  os.precision(17);
  os << "\\ formulation: " << formulation_name(model.formulation()) << "\n";
  os << "Maximize\n obj:";
  for (int v = 0; v < model.num_variables(); ++v) {
    const double c = model.variable(v).objective;
    if (c != 0.0) os << ' ' << format_coef(c) << ' ' << model.variable_name(v);
  }
  os << "\nSubject To\n";
  for (int r = 0; r < model.num_constraints(); ++r) {
    const Constraint& row = model.constraint(r);
    os << ' ' << model.constraint_name(r) << ':';
    if (row.terms.empty()) os << " 0";
    for (const Term& t : row.terms) {
      os << ' ' << format_coef(t.coef) << ' ' << model.variable_name(t.var);
    }
    switch (row.sense) {
      case Sense::kLessEqual: os << " <= "; break;
      case Sense::kEqual: os << " = "; break;
      case Sense::kGreaterEqual: os << " >= "; break;
    }
    os << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (int v = 0; v < model.num_variables(); ++v) {
    const Variable& var = model.variable(v);
    os << ' ' << var.lower << " <= " << model.variable_name(v) << " <= ";
    if (std::isinf(var.upper)) {
      os << "+inf";
    } else {
      os << var.upper;
    }
    os << "\n";
  }
  os << "Binaries\n";
  for (int v = 0; v < model.num_variables(); ++v) {
    if (model.variable(v).integral) os << ' ' << model.variable_name(v) << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace exclear
