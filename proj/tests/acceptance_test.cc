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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qhdyn/builtins.h"
#include "qhdyn/commands.h"
#include "qhdyn/dynamics.h"
#include "qhdyn/errors.h"
#include "qhdyn/spaces.h"
#include "qhdyn/verify.h"
#include "test_util.h"

namespace {

using namespace qhdyn;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const BuiltinRegistry& reg() { return BuiltinRegistry::standard(); }

double max_distance(const MatrixSeries& a, const MatrixSeries& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, (a[k] - b[k]).norm());
  return d;
}

void unitarity_with_moving_metric() {
  Scenario s = reg().make("growing-metric-2d", TimeGrid(0, 1, 2000));
  s.initial_state = testing::vec({1, 0});
  const auto start = std::chrono::steady_clock::now();
  const EvolutionResult r = evolve(s);
  const auto rows = diagnostics_rows(r);
  (void)verdicts(rows, s);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double n0 = r.state.norm_phys.front();
  double drift = 0.0;
  for (double n : r.state.norm_phys) drift = std::max(drift, std::abs(n / n0 - 1.0));
  report(1, "unitarity with moving metric", drift <= 1e-8 && seconds < 1.0,
         fmt("max physical-norm drift %.3e <= 1e-8, runtime %.3f s < 1 s", drift,
             seconds));
}

void naive_generator_refuted() {
  const double expected = 0.5 / std::sqrt(2.0);
  Scenario s = reg().make("growing-metric-2d", TimeGrid(0, 1, 2000));
  s.omega_derivative = OmegaDerivative::kFiniteDifference;
  const EvolutionResult a = evolve(s);
  s.grid = s.grid.with_steps(4000);
  const EvolutionResult b = evolve(s);
  const double naive = a.diagnostics.back().res_naive;
  const double rel = std::abs(naive - expected) / expected;
  const double shift = std::abs(naive - b.diagnostics.back().res_naive);
  double corrected = 0.0;
  for (const auto& d : a.diagnostics) corrected = std::max(corrected, d.res_corrected);
  report(2, "naive generator refuted",
         rel <= 0.02 && shift <= 1e-3 && corrected <= 1e-4,
         fmt("res_naive(1) %.5f vs %.5f (rel %.2e <= 0.02), ", naive, expected, rel) +
             fmt("N->2N shift %.2e <= 1e-3, max res_corrected (finite-difference) "
                 "%.2e <= 1e-4",
                 shift, corrected));
}

void metric_reconstruction() {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& name : reg().names()) {
    const EvolutionResult r = evolve(reg().make(name, TimeGrid(0, 1, 2000)));
    for (std::size_t k = 0; k < r.theta.size(); ++k) {
      const double e = (r.theta_recon[k] - r.theta[k]).norm() / r.theta[k].norm();
      if (e > worst) {
        worst = e;
        worst_name = name;
      }
    }
  }
  report(3, "metric reconstruction, all builtins", worst <= 1e-6,
         fmt("max relative error %.3e <= 1e-6", worst) + " (" + worst_name + ")");
}

void quasi_hermiticity_preserved() {
  double worst = 0.0;
  for (const auto& name : reg().names()) {
    const Scenario s = reg().make(name);
    if (!std::holds_alternative<PairModel>(s.model)) continue;
    const EvolutionResult r = evolve(s);
    for (const auto& d : r.diagnostics) worst = std::max(worst, d.res_qh);
  }
  report(4, "quasi-Hermiticity preserved, pair builtins", worst <= 1e-11,
         fmt("max residual %.3e <= 1e-11", worst));
}

void constant_metric_regression() {
  const EvolutionResult r = evolve(reg().make("constant-metric-2d"));
  const double naive = max_distance(r.ur_naive, r.ur_series);
  const double corrected = max_distance(r.ur_corrected, r.ur_series);
  report(5, "constant-metric regression", naive <= 1e-6 && corrected <= 1e-6,
         fmt("max |naive - definition| %.3e, max |corrected - definition| %.3e, "
             "both <= 1e-6",
             naive, corrected));
}

void integrator_order() {
  const Scenario s = reg().make("growing-metric-2d", TimeGrid(0, 1, 250));
  Scenario fd = s;
  fd.omega_derivative = OmegaDerivative::kFiniteDifference;
  double order_u = std::nan("");
  double order_ur = std::nan("");
  std::string note;
  try {
    order_u = convergence_order(s, Probe::kU);
    order_ur = convergence_order(fd, Probe::kUrCorrected);
  } catch (const Error& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const bool ok = order_u >= 3.7 && order_u <= 4.3 && order_ur >= 1.7 && order_ur <= 2.3;
  report(6, "integrator order", ok,
         fmt("u order %.3f in [3.7, 4.3], U_R corrected (finite-difference) order "
             "%.3f in [1.7, 2.3]",
             order_u, order_ur) +
             note);
}

void dyson_identity() {
  testing::Rng rng(20260707);
  int fails = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const ComplexMatrix omega_g = testing::random_invertible(rng, n, 100.0);
    const DysonMetric dm = metric_from_dyson(omega_g);
    const ComplexVector phi = testing::random_vector(rng, n);
    const ComplexVector psi = testing::random_vector(rng, n);
    const Complex lhs = inner_physical(
        map_to_reference(SpaceTaggedVector(Space::kStandard, phi), dm.dyson),
        map_to_reference(SpaceTaggedVector(Space::kStandard, psi), dm.dyson),
        dm.metric);
    Complex rhs = 0.0;
    for (int i = 0; i < n; ++i) rhs += std::conj(phi(i)) * psi(i);
    const double scale = phi.norm() * psi.norm() * dm.metric.theta().norm();
    const double ratio = std::abs(lhs - rhs) / (1e-11 * scale);
    worst = std::max(worst, ratio);
    if (ratio > 1.0) ++fails;
  }
  report(7, "Dyson-map inner-product identity", fails == 0,
         fmt("%.0f/100 failures, worst error %.3e of the 1e-11 scale bound",
             static_cast<double>(fails), worst));
}

void spectral_round_trip() {
  testing::Rng rng(20260708);
  std::uniform_real_distribution<double> energy(-10.0, 10.0);
  double worst_defect = 0.0;
  double worst_spectrum = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    SpectralData s{RealVector(n), testing::random_unitary(rng, n)};
    for (int i = 0; i < n; ++i) s.energies(i) = energy(rng);
    const ComplexMatrix h = spectral_hamiltonian(s);
    worst_defect = std::max(worst_defect, hermiticity_defect(h));
    RealVector sorted = s.energies;
    std::sort(sorted.data(), sorted.data() + n);
    worst_spectrum = std::max(
        worst_spectrum, (eig_hermitian(h).eigenvalues - sorted).cwiseAbs().maxCoeff());
  }
  report(8, "spectral round-trip", worst_defect <= 1e-13 && worst_spectrum <= 1e-12,
         fmt("max Hermitian defect %.3e <= 1e-13, max spectrum error %.3e <= 1e-12",
             worst_defect, worst_spectrum));
}

void csv_determinism() {
  bool same = true;
  for (const auto& name : reg().names()) {
    const Scenario s = reg().make(name);
    std::ostringstream a, b, ea, eb;
    const int ca = cmd_run(s, "-", a, ea);
    const int cb = cmd_run(s, "-", b, eb);
    same = same && ca == cb && a.str() == b.str() && !a.str().empty();
  }
  report(9, "byte-identical CSV on repeated runs", same, "all four builtins");
}

}  // namespace

int main() {
  unitarity_with_moving_metric();
  naive_generator_refuted();
  metric_reconstruction();
  quasi_hermiticity_preserved();
  constant_metric_regression();
  integrator_order();
  dyson_identity();
  spectral_round_trip();
  csv_determinism();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
