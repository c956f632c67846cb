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

#include "qhdyn/dynamics.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qhdyn/errors.h"

namespace qhdyn {
namespace {

constexpr Complex kI(0.0, 1.0);

// Times of every node and half-step of the grid, in increasing order.
std::vector<double> half_grid(const TimeGrid& grid) {
  std::vector<double> ts;
  ts.reserve(2 * static_cast<std::size_t>(grid.steps()) + 1);
  for (int k = 0; k < grid.steps(); ++k) {
    ts.push_back(grid.node(k));
    ts.push_back(grid.node(k) + 0.5 * grid.spacing());
  }
  ts.push_back(grid.t_end());
  return ts;
}

std::string fmt_time(double t) {
  std::ostringstream os;
  os.precision(10);
  os << t;
  return os.str();
}

}  // namespace

OmegaSchedule::OmegaSchedule(OperatorSchedule theta, double fd_step,
                             OmegaDerivative mode, GateTolerances tol)
    : theta_(std::move(theta)), fd_step_(fd_step), tol_(tol) {
  switch (mode) {
    case OmegaDerivative::kAuto:
      analytic_ = theta_.has_root_derivative();
      break;
    case OmegaDerivative::kAnalytic:
      if (!theta_.has_root_derivative())
        throw InvalidArgument(
            "metric schedule has no analytic square-root derivative");
      analytic_ = true;
      break;
    case OmegaDerivative::kFiniteDifference:
      analytic_ = false;
      break;
  }
  if (!analytic_ && !(fd_step_ > 0.0))
    throw InvalidArgument("finite-difference step must be positive");
}

Metric OmegaSchedule::metric(double t) const {
  const ComplexMatrix theta = theta_.eval(t);
  try {
    return metric_from_theta(theta, tol_);
  } catch (const NotPositiveDefinite& e) {
    throw NotPositiveDefinite(e.lambda_min(), e.lambda_max(), t);
  } catch (const NotHermitian& e) {
    throw NotHermitian(e.defect(), t);
  } catch (const IllConditioned& e) {
    throw IllConditioned(e.condition(), t);
  }
}

ComplexMatrix OmegaSchedule::omega_dot(double t) const {
  if (analytic_) return theta_.eval_root_derivative(t);
  return finite_difference([this](double x) { return metric(x).omega(); }, t,
                           fd_step_, theta_.t_lo(), theta_.t_hi());
}

ComplexMatrix OmegaSchedule::omega_inv_omega_dot(double t) const {
  return metric(t).omega_inv() * omega_dot(t);
}

void OmegaSchedule::validate(const TimeGrid& grid) const {
  for (double t : half_grid(grid)) (void)metric(t);
}

OmegaSchedule omega_schedule(const OperatorSchedule& theta,
                             const TimeGrid& grid, OmegaDerivative mode,
                             const GateTolerances& tol) {
  OmegaSchedule omega(theta, grid.spacing(), mode, tol);
  omega.validate(grid);
  return omega;
}

MatrixSeries integrate_generator(const MatrixFunction& generator,
                                 const TimeGrid& grid, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  const Complex c = -kI / hbar;
  const double dt = grid.spacing();

  ComplexMatrix g_start = generator(grid.node(0));
  ComplexMatrix u = identity(g_start.rows());
  MatrixSeries series;
  series.reserve(static_cast<std::size_t>(grid.nodes()));
  series.push_back(u);

  for (int k = 0; k < grid.steps(); ++k) {
    const double t = grid.node(k);
    const ComplexMatrix g_mid = generator(t + 0.5 * dt);
    ComplexMatrix g_end = generator(grid.node(k + 1));

    const ComplexMatrix k1 = c * (g_start * u);
    const ComplexMatrix k2 = c * (g_mid * (u + (0.5 * dt) * k1));
    const ComplexMatrix k3 = c * (g_mid * (u + (0.5 * dt) * k2));
    const ComplexMatrix k4 = c * (g_end * (u + dt * k3));
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    series.push_back(u);
    g_start = std::move(g_end);
  }
  return series;
}

MatrixSeries integrate_u(const MatrixFunction& h, const TimeGrid& grid,
                         double hbar, const GateTolerances& tol) {
  auto checked = [&](double t) {
    ComplexMatrix m = h(t);
    const double defect = hermiticity_defect(m);
    if (defect > tol.herm) throw NotHermitian(defect, t);
    return m;
  };
  return integrate_generator(checked, grid, hbar);
}

MatrixSeries ur_from_definition(const MatrixSeries& u,
                                const OmegaSchedule& omega,
                                const TimeGrid& grid) {
  if (u.size() != static_cast<std::size_t>(grid.nodes()))
    throw DimensionMismatch(grid.nodes(), static_cast<long>(u.size()));
  const ComplexMatrix omega0 = omega.metric(grid.node(0)).omega();
  MatrixSeries ur;
  ur.reserve(u.size());
  for (int k = 0; k < grid.nodes(); ++k) {
    if (k == 0) {
      // omega(t0)^-1 I omega(t0) is the identity by definition.
      ur.push_back(identity(u[0].rows()));
      continue;
    }
    ur.push_back(omega.metric(grid.node(k)).omega_inv() * u[k] * omega0);
  }
  return ur;
}

MatrixSeries ur_from_naive_generator(const MatrixFunction& hamiltonian,
                                     const TimeGrid& grid, double hbar) {
  return integrate_generator(hamiltonian, grid, hbar);
}

MatrixSeries ur_from_corrected_generator(const MatrixFunction& hamiltonian,
                                         const OmegaSchedule& omega,
                                         const TimeGrid& grid, double hbar) {
  auto generator = [&](double t) -> ComplexMatrix {
    return hamiltonian(t) - (kI * hbar) * omega.omega_inv_omega_dot(t);
  };
  return integrate_generator(generator, grid, hbar);
}

MatrixSeries metric_from_ur(const MatrixSeries& ur, const ComplexMatrix& theta0,
                            const TimeGrid& grid, const GateTolerances& tol) {
  if (ur.size() != static_cast<std::size_t>(grid.nodes()))
    throw DimensionMismatch(grid.nodes(), static_cast<long>(ur.size()));
  MatrixSeries recon;
  recon.reserve(ur.size());
  for (int k = 0; k < grid.nodes(); ++k) {
    ComplexMatrix ur_inv;
    try {
      ur_inv = inverse(ur[k], tol);
    } catch (const IllConditioned& e) {
      throw IllConditioned(e.condition(), grid.node(k));
    }
    recon.push_back(ur_inv.adjoint() * theta0 * ur_inv);
  }
  return recon;
}

ComplexMatrix series_derivative(const MatrixSeries& series,
                                const TimeGrid& grid, int k) {
  const int n = grid.steps();
  if (series.size() != static_cast<std::size_t>(grid.nodes()))
    throw DimensionMismatch(grid.nodes(), static_cast<long>(series.size()));
  if (k < 0 || k > n) throw InvalidArgument("node index outside grid");
  const double two_dt = 2.0 * grid.spacing();
  if (k == 0) return (-3.0 * series[0] + 4.0 * series[1] - series[2]) / two_dt;
  if (k == n)
    return (3.0 * series[n] - 4.0 * series[n - 1] + series[n - 2]) / two_dt;
  return (series[k + 1] - series[k - 1]) / two_dt;
}

double generator_residual(const MatrixSeries& series, const TimeGrid& grid,
                          int k, const ComplexMatrix& generator, double hbar) {
  const ComplexMatrix lhs = (kI * hbar) * series_derivative(series, grid, k);
  return (lhs - generator * series[static_cast<std::size_t>(k)]).norm();
}

ModelOperators::ModelOperators(const Model& model, const OmegaSchedule& omega)
    : model_(model), omega_(omega) {}

ComplexMatrix ModelOperators::hermitian(double t) const {
  if (const auto* pair = std::get_if<PairModel>(&model_)) return pair->h.eval(t);
  const auto& direct = std::get<DirectModel>(model_);
  const Metric m = omega_.metric(t);
  return hermitize(m.omega() * direct.hamiltonian.eval(t) * m.omega_inv());
}

ComplexMatrix ModelOperators::quasi_hermitian(double t) const {
  if (const auto* pair = std::get_if<PairModel>(&model_)) {
    const Metric m = omega_.metric(t);
    return m.omega_inv() * pair->h.eval(t) * m.omega();
  }
  return std::get<DirectModel>(model_).hamiltonian.eval(t);
}

ComplexMatrix ModelOperators::corrected_generator(double t, double hbar) const {
  return quasi_hermitian(t) - (kI * hbar) * omega_.omega_inv_omega_dot(t);
}

StateEvolution evolve_state(const MatrixSeries& ur, const ComplexVector& phi0,
                            const OmegaSchedule& omega, const TimeGrid& grid) {
  if (ur.size() != static_cast<std::size_t>(grid.nodes()))
    throw DimensionMismatch(grid.nodes(), static_cast<long>(ur.size()));
  StateEvolution out;
  out.states.reserve(ur.size());
  out.norm_phys.reserve(ur.size());
  for (int k = 0; k < grid.nodes(); ++k) {
    SpaceTaggedVector phi(Space::kReference, ur[k] * phi0);
    const Metric m = omega.metric(grid.node(k));
    out.norm_phys.push_back(inner_physical(phi, phi, m).real());
    out.states.push_back(phi.components());
  }
  return out;
}

void validate_scenario(const Scenario& s) {
  if (s.dim < 1) throw ValidationError("dimension must be >= 1");
  if (!(s.hbar > 0.0) || !std::isfinite(s.hbar))
    throw ValidationError("hbar must be a positive finite number");
  if (s.initial_state.size() != s.dim)
    throw ValidationError("initial_state has " +
                          std::to_string(s.initial_state.size()) +
                          " components, expected " + std::to_string(s.dim));
  if (!s.initial_state.allFinite())
    throw ValidationError("initial_state has non-finite components");

  const TimeGrid& grid = s.grid;
  auto check_schedule = [&](const OperatorSchedule& sch, const char* what) {
    if (sch.dim() != s.dim)
      throw ValidationError(std::string(what) + " has dimension " +
                            std::to_string(sch.dim()) + ", expected " +
                            std::to_string(s.dim));
    if (!sch.contains(grid.t_start()) || !sch.contains(grid.t_end()))
      throw ValidationError(std::string(what) +
                            " does not cover the time span of the scenario");
  };

  const OperatorSchedule& theta = theta_schedule(s.model);
  check_schedule(theta, "theta");
  if (s.omega_derivative == OmegaDerivative::kAnalytic &&
      !theta.has_root_derivative())
    throw ValidationError(
        "omega_derivative 'analytic' requested but the metric schedule has no "
        "analytic square-root derivative");

  OmegaSchedule omega(theta, grid.spacing(), s.omega_derivative,
                      s.tolerances.gates);
  try {
    omega.validate(grid);
  } catch (const Error& e) {
    throw ValidationError(std::string("theta(t) rejected: ") + e.what());
  }

  if (const auto* pair = std::get_if<PairModel>(&s.model)) {
    check_schedule(pair->h, "h");
    for (int k = 0; k < grid.nodes(); ++k) {
      const double t = grid.node(k);
      const double defect = hermiticity_defect(pair->h.eval(t));
      if (defect > s.tolerances.gates.herm)
        throw ValidationError("h(t) is not Hermitian at t=" + fmt_time(t) +
                              " (relative defect " + fmt_time(defect) + ")");
    }
    return;
  }

  const auto& direct = std::get<DirectModel>(s.model);
  check_schedule(direct.hamiltonian, "H");
  for (int k = 0; k < grid.nodes(); ++k) {
    const double t = grid.node(k);
    const double r =
        quasi_hermiticity_residual(direct.hamiltonian.eval(t), omega.metric(t));
    if (!(r <= s.tolerances.res))
      throw ValidationError(
          "H(t) violates the quasi-Hermiticity condition H^dagger = Theta H "
          "Theta^-1 at t=" + fmt_time(t) + " (residual " + fmt_time(r) +
          " > " + fmt_time(s.tolerances.res) + ")");
  }
}

StateEvolution evolve_state(const Scenario& s) {
  validate_scenario(s);
  const OmegaSchedule omega(theta_schedule(s.model), s.grid.spacing(),
                            s.omega_derivative, s.tolerances.gates);
  const ModelOperators ops(s.model, omega);
  const MatrixSeries u = integrate_u([&](double t) { return ops.hermitian(t); },
                                     s.grid, s.hbar, s.tolerances.gates);
  return evolve_state(ur_from_definition(u, omega, s.grid), s.initial_state,
                      omega, s.grid);
}

EvolutionResult evolve(const Scenario& s) {
  validate_scenario(s);
  const TimeGrid& grid = s.grid;
  const OperatorSchedule& theta = theta_schedule(s.model);
  const OmegaSchedule omega(theta, grid.spacing(), s.omega_derivative,
                            s.tolerances.gates);
  const ModelOperators ops(s.model, omega);

  auto h = [&](double t) { return ops.hermitian(t); };
  auto hamiltonian = [&](double t) { return ops.quasi_hermitian(t); };

  EvolutionResult r{grid};
  r.analytic_omega_dot = omega.analytic();
  r.u_series = integrate_u(h, grid, s.hbar, s.tolerances.gates);
  r.ur_series = ur_from_definition(r.u_series, omega, grid);
  r.ur_naive = ur_from_naive_generator(hamiltonian, grid, s.hbar);
  r.ur_corrected = ur_from_corrected_generator(hamiltonian, omega, grid, s.hbar);

  std::vector<Metric> metrics;
  metrics.reserve(static_cast<std::size_t>(grid.nodes()));
  for (int k = 0; k < grid.nodes(); ++k) metrics.push_back(omega.metric(grid.node(k)));
  for (const Metric& m : metrics) r.theta.push_back(m.theta());

  r.theta_recon =
      metric_from_ur(r.ur_series, r.theta.front(), grid, s.tolerances.gates);
  r.state = evolve_state(r.ur_series, s.initial_state, omega, grid);

  r.diagnostics.reserve(metrics.size());
  for (int k = 0; k < grid.nodes(); ++k) {
    const double t = grid.node(k);
    const auto idx = static_cast<std::size_t>(k);
    const ComplexMatrix hk = hamiltonian(t);
    const ComplexMatrix drift = omega.omega_inv_omega_dot(t);
    r.max_omega_dot = std::max(r.max_omega_dot, omega.omega_dot(t).norm());

    NodeDiagnostics d;
    d.unitarity_defect = unitarity_defect(r.u_series[idx]);
    d.norm_phys = r.state.norm_phys[idx];
    d.res_naive = generator_residual(r.ur_series, grid, k, hk, s.hbar);
    d.res_corrected = generator_residual(r.ur_series, grid, k,
                                         hk - (kI * s.hbar) * drift, s.hbar);
    d.res_qh = quasi_hermiticity_residual(hk, metrics[idx]);
    r.diagnostics.push_back(d);
  }
  return r;
}

}  // namespace qhdyn
