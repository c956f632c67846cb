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

#include "qhdyn/builtins.h"

#include <cmath>

#include "qhdyn/errors.h"
#include "qhdyn/spaces.h"

namespace qhdyn {
namespace {

constexpr Complex kI(0.0, 1.0);

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexVector ket(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

Scenario base(const TimeGrid& grid) {
  Scenario s;
  s.dim = 2;
  s.hbar = 1.0;
  s.grid = grid;
  s.initial_state = ket(1.0, 0.0);
  return s;
}

PropagatorOracle sigma_x_oracle(double t0) {
  return [t0](double t, double hbar) { return sigma_x_propagator(t, t0, hbar); };
}

Scenario growing_metric(const TimeGrid& grid) {
  Scenario s = base(grid);
  const double lo = grid.t_start();
  const double hi = grid.t_end();
  auto theta = OperatorSchedule::closed_form(
      "diag(1, 1 + t^2)", lo, hi,
      [](double t) { return diag2(1.0, 1.0 + t * t); },
      [](double t) { return diag2(0.0, 2.0 * t); },
      [](double t) { return diag2(0.0, t / std::sqrt(1.0 + t * t)); });
  s.model = PairModel{OperatorSchedule::constant(sigma_x(), lo, hi),
                      std::move(theta)};
  s.builtin_name = "growing-metric-2d";
  s.u_exact = sigma_x_oracle(lo);
  return s;
}

Scenario constant_metric(const TimeGrid& grid) {
  Scenario s = base(grid);
  ComplexMatrix theta(2, 2);
  theta << 2.0, 1.0, 1.0, 2.0;
  s.model = PairModel{
      OperatorSchedule::constant(sigma_x(), grid.t_start(), grid.t_end()),
      OperatorSchedule::constant(theta, grid.t_start(), grid.t_end())};
  s.builtin_name = "constant-metric-2d";
  s.u_exact = sigma_x_oracle(grid.t_start());
  return s;
}

Scenario scalar_exponential(const TimeGrid& grid) {
  Scenario s = base(grid);
  const double lo = grid.t_start();
  const double hi = grid.t_end();
  auto theta = OperatorSchedule::closed_form(
      "exp(2t) I", lo, hi,
      [](double t) { return diag2(std::exp(2.0 * t), std::exp(2.0 * t)); },
      [](double t) {
        return diag2(2.0 * std::exp(2.0 * t), 2.0 * std::exp(2.0 * t));
      },
      [](double t) { return diag2(std::exp(t), std::exp(t)); });
  s.model = PairModel{OperatorSchedule::constant(sigma_x(), lo, hi),
                      std::move(theta)};
  s.builtin_name = "scalar-exponential";
  s.u_exact = sigma_x_oracle(lo);
  return s;
}

Scenario nonhermitian_dyson(const TimeGrid& grid) {
  Scenario s = base(grid);
  ComplexMatrix dyson(2, 2);
  dyson << 1.0, 1.0, 0.0, 1.0;
  const DysonMetric dm = metric_from_dyson(dyson);
  const ComplexMatrix hamiltonian = dm.dyson.map_inv() * sigma_x() * dyson;

  s.model = DirectModel{
      OperatorSchedule::constant(hamiltonian, grid.t_start(), grid.t_end()),
      OperatorSchedule::constant(dm.metric.theta(), grid.t_start(),
                                 grid.t_end())};
  s.initial_state =
      map_to_reference(SpaceTaggedVector(Space::kStandard,
                                         ket(M_SQRT1_2, M_SQRT1_2)),
                       dm.dyson)
          .components();

  // Constant Hermitian partner omega H omega^-1: exponentiate its spectrum.
  const HermitianEigen eig =
      eig_hermitian(hermitian_equivalent(hamiltonian, dm.metric).h);
  const double t0 = grid.t_start();
  s.u_exact = [eig, t0](double t, double hbar) -> ComplexMatrix {
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
      phases(i) = std::exp(-kI * eig.eigenvalues(i) * (t - t0) / hbar);
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  };
  s.builtin_name = "nonhermitian-dyson";
  return s;
}

BuiltinRegistry make_standard() {
  BuiltinRegistry r;
  r.add({"growing-metric-2d",
         "h = sigma_x, Theta(t) = diag(1, 1 + t^2); moving metric", 2, 0.0, 1.0,
         2000, growing_metric});
  r.add({"constant-metric-2d", "h = sigma_x, Theta = [[2, 1], [1, 2]]", 2, 0.0,
         1.0, 2000, constant_metric});
  r.add({"scalar-exponential", "h = sigma_x, Theta(t) = exp(2t) I", 2, 0.0,
         1.0, 2000, scalar_exponential});
  r.add({"nonhermitian-dyson",
         "H = Omega^-1 sigma_x Omega with Omega = [[1, 1], [0, 1]]", 2, 0.0,
         1.0, 2000, nonhermitian_dyson});
  return r;
}

}  // namespace

ComplexMatrix sigma_x_propagator(double t, double t0, double hbar) {
  const double phase = (t - t0) / hbar;
  return std::cos(phase) * identity(2) - kI * std::sin(phase) * sigma_x();
}

const BuiltinRegistry& BuiltinRegistry::standard() {
  static const BuiltinRegistry registry = make_standard();
  return registry;
}

void BuiltinRegistry::add(BuiltinEntry entry) {
  const std::string name = entry.name;
  entries_.insert_or_assign(name, std::move(entry));
}

const BuiltinEntry* BuiltinRegistry::find(const std::string& name) const {
  const auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> BuiltinRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

Scenario BuiltinRegistry::make(const std::string& name) const {
  const BuiltinEntry* e = find(name);
  if (e == nullptr) return make(name, TimeGrid(0.0, 1.0, 2));  // throws
  return make(name, TimeGrid(e->t_start, e->t_end, e->steps));
}

Scenario BuiltinRegistry::make(const std::string& name,
                               const TimeGrid& grid) const {
  const BuiltinEntry* e = find(name);
  if (e == nullptr) {
    std::string msg = "unknown builtin scenario '" + name + "'; available:";
    for (const auto& n : names()) msg += " " + n;
    throw ValidationError(msg);
  }
  return e->make(grid);
}

}  // namespace qhdyn
