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

#ifndef QHDYN_SCENARIO_H_
#define QHDYN_SCENARIO_H_

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "qhdyn/matcore.h"
#include "qhdyn/schedule.h"

namespace qhdyn {

// Hermitian h(t) together with the metric Theta(t). The quasi-Hermitian
// Hamiltonian is derived as H = omega^-1 h omega.
struct PairModel {
  OperatorSchedule h;
  OperatorSchedule theta;
};

// Quasi-Hermitian H(t) given directly together with Theta(t). The Hermitian
// partner is derived as h = omega H omega^-1.
struct DirectModel {
  OperatorSchedule hamiltonian;
  OperatorSchedule theta;
};

using Model = std::variant<PairModel, DirectModel>;

const OperatorSchedule& theta_schedule(const Model& model);

// How d(omega)/dt is obtained.
enum class OmegaDerivative {
  kAuto,              // analytic when the metric schedule supplies it
  kAnalytic,          // analytic, error if unavailable
  kFiniteDifference,  // always central differences with the grid spacing
};

const char* omega_derivative_name(OmegaDerivative mode);
std::optional<OmegaDerivative> parse_omega_derivative(const std::string& s);

struct Tolerances {
  GateTolerances gates;
  // DIRECT models are rejected when the quasi-Hermiticity residual of H(t)
  // exceeds this at any grid node.
  double res = 1e-8;

  // Verdict thresholds.
  double norm_drift = 1e-8;
  double metric = 1e-6;
  double qh = 1e-8;
  double corrected_fd = 1e-4;
  double corrected_analytic = 1e-6;
  double naive_fail = 0.01;      // naive residual must reach this ...
  double metric_motion = 0.01;   // ... when max ||d omega/dt||_F reaches this
  double naive_hold = 1e-6;      // otherwise it must stay below this
};

// Closed-form u(t) for models with an exactly solvable Hermitian part.
using PropagatorOracle = std::function<ComplexMatrix(double t, double hbar)>;

struct Scenario {
  Eigen::Index dim = 0;
  double hbar = 1.0;
  TimeGrid grid{0.0, 1.0, 2000};
  Model model;
  ComplexVector initial_state;  // reference-space ket
  Tolerances tolerances;
  OmegaDerivative omega_derivative = OmegaDerivative::kAuto;

  // Set for registry scenarios; used for serialization and oracles.
  std::optional<std::string> builtin_name;
  PropagatorOracle u_exact;
};

// Checks dimensions, spans and the numerical gates of the model at every
// grid node. Throws ValidationError naming the failing time.
void validate_scenario(const Scenario& s);

}  // namespace qhdyn

#endif  // QHDYN_SCENARIO_H_
