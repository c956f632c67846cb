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

// The three Hilbert spaces of a quasi-Hermitian model.
//
//   standard  : kets |Phi}  where the Hermitian h acts, ordinary product
//   reference : kets |Phi>  = Omega^-1 |Phi}, ordinary product <.|.>
//   physical  : same kets as reference, functionals <<Phi| = <Phi| Theta
//
// The physical space has no tag of its own. It is the pair (reference
// vector, Metric), and its bras exist only as PhysicalFunctional values
// produced by doubled_bra().

#ifndef QHDYN_SPACES_H_
#define QHDYN_SPACES_H_

#include "qhdyn/matcore.h"

namespace qhdyn {

enum class Space { kStandard, kReference };

const char* space_name(Space s);

struct DysonMetric;

// Positive-definite metric Theta with its principal root omega and the
// inverse root. Immutable once built.
class Metric {
 public:
  const ComplexMatrix& theta() const { return theta_; }
  const ComplexMatrix& omega() const { return omega_; }
  const ComplexMatrix& omega_inv() const { return omega_inv_; }
  Eigen::Index dim() const { return theta_.rows(); }

 private:
  friend Metric metric_from_theta(const ComplexMatrix&, const GateTolerances&);
  Metric(ComplexMatrix theta, ComplexMatrix omega, ComplexMatrix omega_inv)
      : theta_(std::move(theta)),
        omega_(std::move(omega)),
        omega_inv_(std::move(omega_inv)) {}

  ComplexMatrix theta_;
  ComplexMatrix omega_;
  ComplexMatrix omega_inv_;
};

// General invertible Dyson map Omega; induces Theta = Omega^dagger Omega.
class DysonMap {
 public:
  const ComplexMatrix& map() const { return map_; }
  const ComplexMatrix& map_inv() const { return map_inv_; }
  Eigen::Index dim() const { return map_.rows(); }

 private:
  friend DysonMetric metric_from_dyson(const ComplexMatrix&,
                                       const GateTolerances&);
  DysonMap(ComplexMatrix map, ComplexMatrix map_inv)
      : map_(std::move(map)), map_inv_(std::move(map_inv)) {}

  ComplexMatrix map_;
  ComplexMatrix map_inv_;
};

struct DysonMetric {
  DysonMap dyson;
  Metric metric;
};

class SpaceTaggedVector {
 public:
  SpaceTaggedVector(Space space, ComplexVector components);

  Space space() const { return space_; }
  const ComplexVector& components() const { return components_; }
  Eigen::Index dim() const { return components_.size(); }

 private:
  Space space_;
  ComplexVector components_;
};

// <<Phi| in the physical space. Only doubled_bra() creates one.
class PhysicalFunctional {
 public:
  // Row vector <Phi| Theta.
  const Eigen::RowVectorXcd& row() const { return row_; }

  // <<Phi|Psi> for a reference-space ket.
  Complex operator()(const SpaceTaggedVector& psi) const;

 private:
  friend PhysicalFunctional doubled_bra(const SpaceTaggedVector&,
                                        const Metric&);
  explicit PhysicalFunctional(Eigen::RowVectorXcd row) : row_(std::move(row)) {}

  Eigen::RowVectorXcd row_;
};

// Energies E_n with orthonormal basis columns |n}.
struct SpectralData {
  RealVector energies;
  ComplexMatrix basis;
};

struct HermitianEquivalent {
  ComplexMatrix h;
  double defect;  // ||h - h^dagger||_F / ||h||_F
};

Metric metric_from_theta(const ComplexMatrix& theta,
                         const GateTolerances& tol = {});

DysonMetric metric_from_dyson(const ComplexMatrix& omega_g,
                              const GateTolerances& tol = {});

// Ordinary product on standard-space kets.
Complex inner_standard(const SpaceTaggedVector& phi,
                       const SpaceTaggedVector& psi);

// Ordinary product on reference-space kets.
Complex inner_reference(const SpaceTaggedVector& phi,
                        const SpaceTaggedVector& psi);

// <phi| Theta |psi> on reference-space kets. Evaluated through doubled_bra,
// so both routes agree bit-for-bit.
Complex inner_physical(const SpaceTaggedVector& phi,
                       const SpaceTaggedVector& psi, const Metric& m);

// |Phi> = Omega^-1 |Phi}.
SpaceTaggedVector map_to_reference(const SpaceTaggedVector& phi,
                                   const DysonMap& d);

PhysicalFunctional doubled_bra(const SpaceTaggedVector& phi, const Metric& m);

// h = sum_n E_n |n}{n|.
ComplexMatrix spectral_hamiltonian(const SpectralData& s,
                                   double gram_tol = 1e-12);

// ||Theta H - H^dagger Theta||_F / max(||Theta H||_F, tiny).
double quasi_hermiticity_residual(const ComplexMatrix& hamiltonian,
                                  const Metric& m);

// h = omega H omega^-1 with its Hermiticity defect. The defect is reported
// rather than thrown.
HermitianEquivalent hermitian_equivalent(const ComplexMatrix& hamiltonian,
                                         const Metric& m);

}  // namespace qhdyn

#endif  // QHDYN_SPACES_H_
