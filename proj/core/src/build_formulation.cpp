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

#include "exclear/error.hpp"
#include "exclear/formulations.hpp"

namespace exclear {

MipModel build_formulation(const Instance& instance, Formulation formulation,
                           const BuildOptions& options) {
  switch (formulation) {
    case Formulation::kCf: return build_cf(instance, options);
    case Formulation::kPief: return build_pief(instance, PiefVariant::kFull, options);
    case Formulation::kPiefReduced:
      return build_pief(instance, PiefVariant::kReduced, options);
    case Formulation::kPiefReduced2:
      return build_pief(instance, PiefVariant::kReduced2, options);
    case Formulation::kPicef: return build_picef(instance, false, options);
    case Formulation::kPicefReduced: return build_picef(instance, true, options);
    case Formulation::kHpief: return build_hpief(instance, PiefVariant::kFull);
    case Formulation::kHpiefReduced:
      return build_hpief(instance, PiefVariant::kReduced);
    case Formulation::kHpiefReduced2:
      return build_hpief(instance, PiefVariant::kReduced2);
    case Formulation::kCustom: break;
  }
  throw Error(ErrorCode::kBadParameter, "no builder for a custom model");
}

std::optional<Formulation> parse_formulation(std::string_view name) {
  for (const Formulation f :
       {Formulation::kCf, Formulation::kPief, Formulation::kPiefReduced,
        Formulation::kPiefReduced2, Formulation::kPicef,
        Formulation::kPicefReduced, Formulation::kHpief,
        Formulation::kHpiefReduced, Formulation::kHpiefReduced2}) {
    if (formulation_name(f) == name) return f;
  }
  return std::nullopt;
}

}  // namespace exclear
