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

#include "qhdyn/verify.h"

#include <algorithm>
#include <cmath>

#include "qhdyn/errors.h"
#include "qhdyn/spaces.h"

namespace qhdyn {
namespace {

template <typename Field>
double max_of(const std::vector<DiagnosticsRow>& rows, Field field) {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.*field);
  return m;
}

Verdict at_most(std::string name, double observed, double threshold) {
  return {std::move(name), observed <= threshold, observed, threshold, false};
}

// End-time value of the probed propagator on a grid with the given steps.
ComplexMatrix probe_end(const Scenario& s, Probe probe, int steps) {
  const TimeGrid grid = s.grid.with_steps(steps);
  const OmegaSchedule omega(theta_schedule(s.model), grid.spacing(),
                            s.omega_derivative, s.tolerances.gates);
  const ModelOperators ops(s.model, omega);
  if (probe == Probe::kU) {
    return integrate_u([&](double t) { return ops.hermitian(t); }, grid,
                       s.hbar, s.tolerances.gates)
        .back();
  }
  return ur_from_corrected_generator(
             [&](double t) { return ops.quasi_hermitian(t); }, omega, grid,
             s.hbar)
      .back();
}

ComplexMatrix oracle_end(const Scenario& s, Probe probe) {
  const double t0 = s.grid.t_start();
  const double t1 = s.grid.t_end();
  const ComplexMatrix u = s.u_exact(t1, s.hbar);
  if (probe == Probe::kU) return u;
  // The metric itself is exact here; only d(omega)/dt is discretized in the
  // probed run.
  const OmegaSchedule omega(theta_schedule(s.model), s.grid.spacing(),
                            OmegaDerivative::kFiniteDifference,
                            s.tolerances.gates);
  return omega.metric(t1).omega_inv() * u * omega.metric(t0).omega();
}

}  // namespace

std::vector<DiagnosticsRow> diagnostics_rows(const EvolutionResult& r) {
  std::vector<DiagnosticsRow> rows;
  const TimeGrid& grid = r.grid;
  rows.reserve(static_cast<std::size_t>(grid.steps() - 1));
  for (int k = 1; k < grid.steps(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    const NodeDiagnostics& d = r.diagnostics[i];
    DiagnosticsRow row;
    row.t = grid.node(k);
    row.unitarity_defect = d.unitarity_defect;
    row.norm_phys = d.norm_phys;
    row.res_naive = d.res_naive;
    row.res_corrected = d.res_corrected;
    row.res_metric = (r.theta_recon[i] - r.theta[i]).norm() / r.theta[i].norm();
    row.res_qh = d.res_qh;
    rows.push_back(row);
  }
  return rows;
}

std::vector<DiagnosticsRow> run_diagnostics(const Scenario& s) {
  return diagnostics_rows(evolve(s));
}

MetricMotion metric_motion(const Scenario& s) {
  const OmegaSchedule omega(theta_schedule(s.model), s.grid.spacing(),
                            s.omega_derivative, s.tolerances.gates);
  MetricMotion m;
  m.analytic = omega.analytic();
  for (int k = 0; k < s.grid.nodes(); ++k)
    m.max_omega_dot =
        std::max(m.max_omega_dot, omega.omega_dot(s.grid.node(k)).norm());
  return m;
}

std::vector<Verdict> verdicts(const std::vector<DiagnosticsRow>& rows,
                              const Scenario& s) {
  if (rows.empty()) throw InvalidArgument("verdicts need at least one row");
  const Tolerances& tol = s.tolerances;

  const OmegaSchedule omega(theta_schedule(s.model), s.grid.spacing(),
                            s.omega_derivative, tol.gates);
  const SpaceTaggedVector phi0(Space::kReference, s.initial_state);
  const double norm0 =
      inner_physical(phi0, phi0, omega.metric(s.grid.t_start())).real();
  double drift = 0.0;
  for (const auto& r : rows) {
    const double d = norm0 > 0.0 ? std::abs(r.norm_phys / norm0 - 1.0)
                                 : std::abs(r.norm_phys);
    drift = std::max(drift, d);
  }

  const MetricMotion motion = metric_motion(s);
  const double naive = max_of(rows, &DiagnosticsRow::res_naive);

  std::vector<Verdict> out;
  out.push_back(at_most("NORM_CONSERVED", drift, tol.norm_drift));
  out.push_back(at_most("METRIC_RECONSTRUCTED",
                        max_of(rows, &DiagnosticsRow::res_metric), tol.metric));
  out.push_back(at_most("QH_HOLDS", max_of(rows, &DiagnosticsRow::res_qh), tol.qh));
  out.push_back(at_most("CORRECTED_GENERATOR_OK",
                        max_of(rows, &DiagnosticsRow::res_corrected),
                        motion.analytic ? tol.corrected_analytic
                                        : tol.corrected_fd));
  if (motion.max_omega_dot >= tol.metric_motion) {
    out.push_back({"NAIVE_FAILS_IFF_METRIC_MOVES", naive >= tol.naive_fail,
                   naive, tol.naive_fail, true});
  } else {
    out.push_back(at_most("NAIVE_FAILS_IFF_METRIC_MOVES", naive, tol.naive_hold));
  }
  return out;
}

bool all_passed(const std::vector<Verdict>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Verdict& x) { return x.passed; });
}

double convergence_order(const Scenario& s, Probe probe) {
  validate_scenario(s);
  const int n = s.grid.steps();
  const ComplexMatrix reference =
      s.u_exact ? oracle_end(s, probe) : probe_end(s, probe, 8 * n);
  const double err_n = (probe_end(s, probe, n) - reference).norm();
  const double err_2n = (probe_end(s, probe, 2 * n) - reference).norm();
  if (!(err_n > 0.0) || !(err_2n > 0.0) || !std::isfinite(err_n) ||
      !std::isfinite(err_2n))
    throw NotMeasurable("convergence order not measurable: errors " +
                        std::to_string(err_n) + ", " + std::to_string(err_2n));
  return std::log2(err_n / err_2n);
}

}  // namespace qhdyn
