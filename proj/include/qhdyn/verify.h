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

#ifndef QHDYN_VERIFY_H_
#define QHDYN_VERIFY_H_

#include <string>
#include <vector>

#include "qhdyn/dynamics.h"
#include "qhdyn/scenario.h"

namespace qhdyn {

struct DiagnosticsRow {
  double t = 0.0;
  double unitarity_defect = 0.0;
  double norm_phys = 0.0;
  double res_naive = 0.0;
  double res_corrected = 0.0;
  double res_metric = 0.0;
  double res_qh = 0.0;
};

struct Verdict {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double threshold = 0.0;
  // True when the check passes by reaching the threshold from below.
  bool must_exceed = false;
};

// One row per interior grid node.
std::vector<DiagnosticsRow> diagnostics_rows(const EvolutionResult& r);

std::vector<DiagnosticsRow> run_diagnostics(const Scenario& s);

// max_k ||d(omega)/dt(t_k)||_F and whether the derivative is analytic.
struct MetricMotion {
  double max_omega_dot = 0.0;
  bool analytic = false;
};
MetricMotion metric_motion(const Scenario& s);

// Fixed verdict set, in this order:
//   NORM_CONSERVED, METRIC_RECONSTRUCTED, QH_HOLDS, CORRECTED_GENERATOR_OK,
//   NAIVE_FAILS_IFF_METRIC_MOVES.
std::vector<Verdict> verdicts(const std::vector<DiagnosticsRow>& rows,
                              const Scenario& s);

bool all_passed(const std::vector<Verdict>& v);

enum class Probe { kU, kUrCorrected };

// log2(err_N / err_2N) of the end-time Frobenius error, N = s.grid.steps().
// The reference is the scenario's closed-form propagator when present,
// otherwise a run at 8N. Throws NotMeasurable when an error vanishes.
double convergence_order(const Scenario& s, Probe probe);

}  // namespace qhdyn

#endif  // QHDYN_VERIFY_H_
