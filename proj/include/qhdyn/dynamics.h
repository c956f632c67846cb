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

// Propagators of a quasi-Hermitian model with a moving metric.
//
// With omega = sqrt(Theta), h = omega H omega^-1 and i hbar du/dt = h u,
// u(t0) = I, the reference-space propagator is defined as
//
//   U_R(t) = omega(t)^-1 u(t) omega(t0).
//
// Differentiating the definition gives
//
//   i hbar dU_R/dt = [H(t) - i hbar omega(t)^-1 d(omega)/dt] U_R,
//
// so i hbar dU_R/dt = H U_R holds only while the metric is frozen. The
// functions below build U_R from the definition, from the bare H generator
// and from the corrected generator, so the discrepancy is measured rather
// than assumed.

#ifndef QHDYN_DYNAMICS_H_
#define QHDYN_DYNAMICS_H_

#include <vector>

#include "qhdyn/matcore.h"
#include "qhdyn/scenario.h"
#include "qhdyn/schedule.h"
#include "qhdyn/spaces.h"

namespace qhdyn {

using MatrixSeries = std::vector<ComplexMatrix>;
using MatrixFunction = OperatorSchedule::Function;

// omega(t), omega(t)^-1 and d(omega)/dt derived from a metric schedule.
class OmegaSchedule {
 public:
  // fd_step is the central-difference step for d(omega)/dt; it is ignored
  // when the analytic derivative is used.
  OmegaSchedule(OperatorSchedule theta, double fd_step,
                OmegaDerivative mode = OmegaDerivative::kAuto,
                GateTolerances tol = {});

  // Throws NotPositiveDefinite / NotHermitian / IllConditioned carrying t.
  Metric metric(double t) const;
  ComplexMatrix omega_dot(double t) const;
  // omega^-1 d(omega)/dt.
  ComplexMatrix omega_inv_omega_dot(double t) const;

  bool analytic() const { return analytic_; }
  const OperatorSchedule& theta() const { return theta_; }

  // Gate-checks every node and half-step of the grid in time order; the
  // first failure is rethrown with its time.
  void validate(const TimeGrid& grid) const;

 private:
  OperatorSchedule theta_;
  double fd_step_;
  bool analytic_;
  GateTolerances tol_;
};

// Builds and validates the omega schedule on the grid. The finite-difference
// step is the grid spacing.
OmegaSchedule omega_schedule(const OperatorSchedule& theta,
                             const TimeGrid& grid,
                             OmegaDerivative mode = OmegaDerivative::kAuto,
                             const GateTolerances& tol = {});

// Classical fixed-step RK4 for dU/dt = (-i/hbar) G(t) U, U(t0) = I. Stages
// evaluate G at t, t + dt/2 and t + dt. No re-orthogonalization.
MatrixSeries integrate_generator(const MatrixFunction& generator,
                                 const TimeGrid& grid, double hbar);

// u(t) for i hbar du/dt = h u. h must pass the Hermiticity gate at every
// stage point (NotHermitian carries the time).
MatrixSeries integrate_u(const MatrixFunction& h, const TimeGrid& grid,
                         double hbar, const GateTolerances& tol = {});

MatrixSeries ur_from_definition(const MatrixSeries& u,
                                const OmegaSchedule& omega,
                                const TimeGrid& grid);

// Integrates i hbar dU/dt = H U. This relation ignores the motion of the
// metric; it is kept to measure how far it is from U_R.
MatrixSeries ur_from_naive_generator(const MatrixFunction& hamiltonian,
                                     const TimeGrid& grid, double hbar);

// Integrates i hbar dU/dt = [H - i hbar omega^-1 d(omega)/dt] U.
MatrixSeries ur_from_corrected_generator(const MatrixFunction& hamiltonian,
                                         const OmegaSchedule& omega,
                                         const TimeGrid& grid, double hbar);

// Theta_rec(t_k) = (U_R^-1)^dagger Theta(t0) U_R^-1.
MatrixSeries metric_from_ur(const MatrixSeries& ur, const ComplexMatrix& theta0,
                            const TimeGrid& grid,
                            const GateTolerances& tol = {});

// dS/dt at node k: central difference inside the grid, second-order
// one-sided at both ends.
ComplexMatrix series_derivative(const MatrixSeries& series,
                                const TimeGrid& grid, int k);

// ||i hbar dU/dt(t_k) - G(t_k) U(t_k)||_F with dU/dt from series_derivative.
double generator_residual(const MatrixSeries& series, const TimeGrid& grid,
                          int k, const ComplexMatrix& generator, double hbar);

// Hermitian partner h(t) and quasi-Hermitian H(t) of a scenario model.
class ModelOperators {
 public:
  ModelOperators(const Model& model, const OmegaSchedule& omega);

  ComplexMatrix hermitian(double t) const;
  ComplexMatrix quasi_hermitian(double t) const;
  // H - i hbar omega^-1 d(omega)/dt.
  ComplexMatrix corrected_generator(double t, double hbar) const;

 private:
  const Model& model_;
  const OmegaSchedule& omega_;
};

struct NodeDiagnostics {
  double unitarity_defect = 0.0;
  double norm_phys = 0.0;
  double res_naive = 0.0;
  double res_corrected = 0.0;
  double res_qh = 0.0;
};

struct StateEvolution {
  std::vector<ComplexVector> states;
  std::vector<double> norm_phys;
};

struct EvolutionResult {
  TimeGrid grid;
  MatrixSeries u_series{};
  MatrixSeries ur_series{};   // from the definition
  MatrixSeries ur_naive{};
  MatrixSeries ur_corrected{};
  MatrixSeries theta{};       // prescribed Theta(t_k)
  MatrixSeries theta_recon{};
  StateEvolution state{};
  std::vector<NodeDiagnostics> diagnostics{};
  bool analytic_omega_dot = false;
  double max_omega_dot = 0.0;  // max_k ||d(omega)/dt(t_k)||_F
};

// Phi(t_k) = U_R(t_k) Phi(t0) with <Phi(t_k)|Theta(t_k)|Phi(t_k)>.
StateEvolution evolve_state(const MatrixSeries& ur, const ComplexVector& phi0,
                            const OmegaSchedule& omega, const TimeGrid& grid);

// Same as evolve(s).state without the auxiliary propagators.
StateEvolution evolve_state(const Scenario& s);

// Validates the scenario and runs every propagator and diagnostic.
EvolutionResult evolve(const Scenario& s);

}  // namespace qhdyn

#endif  // QHDYN_DYNAMICS_H_
