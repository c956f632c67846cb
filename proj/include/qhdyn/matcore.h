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

// Dense complex matrix kernel. Every operator in the library (Hamiltonians,
// metrics, Dyson maps, propagators) is a small dense ComplexMatrix; the
// functions here are the numerical gates the rest of the code relies on.

#ifndef QHDYN_MATCORE_H_
#define QHDYN_MATCORE_H_

#include <complex>

#include <Eigen/Dense>

namespace qhdyn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Thresholds of the numerical gates. Defaults match the documented scenario
// defaults; scenarios may override them.
struct GateTolerances {
  double herm = 1e-10;      // relative Hermiticity defect
  double pos = 1e-10;       // lambda_min / lambda_max positivity ratio
  double cond_max = 1e8;    // largest accepted 2-norm condition number
};

struct HermitianEigen {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // orthonormal columns
};

// Throws InvalidArgument unless A is square, non-empty and finite.
void require_square_finite(const ComplexMatrix& a);

ComplexMatrix identity(Eigen::Index dim);

double fro_norm(const ComplexMatrix& a);

// (A + A^dagger) / 2.
ComplexMatrix hermitize(const ComplexMatrix& a);

// ||A - A^dagger||_F / ||A||_F, or 0 for the zero matrix.
double hermiticity_defect(const ComplexMatrix& a);

// Spectral decomposition of a Hermitian matrix. The Hermiticity gate is
// relative; the decomposition itself runs on hermitize(A).
HermitianEigen eig_hermitian(const ComplexMatrix& a,
                             const GateTolerances& tol = {});

// Unique Hermitian positive-definite S with S*S = A.
ComplexMatrix principal_sqrt(const ComplexMatrix& a,
                             const GateTolerances& tol = {});

// 2-norm condition number from singular values; +inf for singular input.
double condition_number(const ComplexMatrix& a);

ComplexMatrix inverse(const ComplexMatrix& a, const GateTolerances& tol = {});

// ||A^dagger A - I||_F.
double unitarity_defect(const ComplexMatrix& a);

}  // namespace qhdyn

#endif  // QHDYN_MATCORE_H_
