// Copyright 2026 The qhdyn Authors
//
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

#include "qhdyn/scenario.h"

namespace qhdyn {

const OperatorSchedule& theta_schedule(const Model& model) {
  return std::visit([](const auto& m) -> const OperatorSchedule& { return m.theta; },
                    model);
}

const char* omega_derivative_name(OmegaDerivative mode) {
  switch (mode) {
    case OmegaDerivative::kAuto:
      return "auto";
    case OmegaDerivative::kAnalytic:
      return "analytic";
    case OmegaDerivative::kFiniteDifference:
      return "finite-difference";
  }
  return "auto";
}

std::optional<OmegaDerivative> parse_omega_derivative(const std::string& s) {
  if (s == "auto") return OmegaDerivative::kAuto;
  if (s == "analytic") return OmegaDerivative::kAnalytic;
  if (s == "finite-difference") return OmegaDerivative::kFiniteDifference;
  return std::nullopt;
}

}  // namespace qhdyn
