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

#include "qhdyn/spaces.h"

#include <algorithm>
#include <limits>
#include <string>

#include "qhdyn/errors.h"

namespace qhdyn {
namespace {

void require_space(const SpaceTaggedVector& v, Space expected,
                   const char* what) {
  if (v.space() != expected)
    throw SpaceMismatch(std::string(what) + " expects a " +
                        space_name(expected) + " vector, got " +
                        space_name(v.space()));
}

void require_dim(Eigen::Index expected, Eigen::Index actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

}  // namespace

const char* space_name(Space s) {
  switch (s) {
    case Space::kStandard:
      return "standard";
    case Space::kReference:
      return "reference";
  }
  return "unknown";
}

SpaceTaggedVector::SpaceTaggedVector(Space space, ComplexVector components)
    : space_(space), components_(std::move(components)) {
  if (components_.size() < 1) throw InvalidArgument("empty vector");
  if (!components_.allFinite())
    throw InvalidArgument("vector has non-finite components");
}

Complex PhysicalFunctional::operator()(const SpaceTaggedVector& psi) const {
  require_space(psi, Space::kReference, "physical functional");
  require_dim(row_.size(), psi.dim());
  return (row_ * psi.components())(0);
}

Metric metric_from_theta(const ComplexMatrix& theta,
                         const GateTolerances& tol) {
  ComplexMatrix omega = principal_sqrt(theta, tol);
  ComplexMatrix omega_inv = inverse(omega, tol);
  return Metric(hermitize(theta), std::move(omega), std::move(omega_inv));
}

DysonMetric metric_from_dyson(const ComplexMatrix& omega_g,
                              const GateTolerances& tol) {
  ComplexMatrix map_inv = inverse(omega_g, tol);
  Metric metric = metric_from_theta(hermitize(omega_g.adjoint() * omega_g), tol);
  return {DysonMap(omega_g, std::move(map_inv)), std::move(metric)};
}

Complex inner_standard(const SpaceTaggedVector& phi,
                       const SpaceTaggedVector& psi) {
  require_space(phi, Space::kStandard, "inner_standard");
  require_space(psi, Space::kStandard, "inner_standard");
  require_dim(phi.dim(), psi.dim());
  return phi.components().dot(psi.components());
}

Complex inner_reference(const SpaceTaggedVector& phi,
                        const SpaceTaggedVector& psi) {
  require_space(phi, Space::kReference, "inner_reference");
  require_space(psi, Space::kReference, "inner_reference");
  require_dim(phi.dim(), psi.dim());
  return phi.components().dot(psi.components());
}

Complex inner_physical(const SpaceTaggedVector& phi,
                       const SpaceTaggedVector& psi, const Metric& m) {
  return doubled_bra(phi, m)(psi);
}

SpaceTaggedVector map_to_reference(const SpaceTaggedVector& phi,
                                   const DysonMap& d) {
  require_space(phi, Space::kStandard, "map_to_reference");
  require_dim(d.dim(), phi.dim());
  return SpaceTaggedVector(Space::kReference, d.map_inv() * phi.components());
}

PhysicalFunctional doubled_bra(const SpaceTaggedVector& phi, const Metric& m) {
  require_space(phi, Space::kReference, "doubled_bra");
  require_dim(m.dim(), phi.dim());
  return PhysicalFunctional(phi.components().adjoint() * m.theta());
}

ComplexMatrix spectral_hamiltonian(const SpectralData& s, double gram_tol) {
  const ComplexMatrix& basis = s.basis;
  if (basis.cols() != s.energies.size())
    throw DimensionMismatch(basis.cols(), s.energies.size());
  if (basis.cols() < 1 || basis.cols() > basis.rows())
    throw InvalidArgument("spectral basis needs 1..dim vectors");
  if (!basis.allFinite() || !s.energies.allFinite())
    throw InvalidArgument("spectral data has non-finite entries");

  const double gram_defect =
      (basis.adjoint() * basis - identity(basis.cols())).norm();
  if (gram_defect > gram_tol) throw BasisNotOrthonormal(gram_defect);

  ComplexMatrix h = ComplexMatrix::Zero(basis.rows(), basis.rows());
  for (Eigen::Index n = 0; n < basis.cols(); ++n)
    h += s.energies(n) * (basis.col(n) * basis.col(n).adjoint());
  return h;
}

double quasi_hermiticity_residual(const ComplexMatrix& hamiltonian,
                                  const Metric& m) {
  require_square_finite(hamiltonian);
  require_dim(m.dim(), hamiltonian.rows());
  const ComplexMatrix theta_h = m.theta() * hamiltonian;
  const ComplexMatrix hdag_theta = hamiltonian.adjoint() * m.theta();
  const double scale =
      std::max(theta_h.norm(), std::numeric_limits<double>::min());
  return (theta_h - hdag_theta).norm() / scale;
}

HermitianEquivalent hermitian_equivalent(const ComplexMatrix& hamiltonian,
                                         const Metric& m) {
  require_square_finite(hamiltonian);
  require_dim(m.dim(), hamiltonian.rows());
  ComplexMatrix h = m.omega() * hamiltonian * m.omega_inv();
  const double defect = hermiticity_defect(h);
  return {std::move(h), defect};
}

}  // namespace qhdyn
