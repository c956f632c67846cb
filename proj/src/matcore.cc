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

#include "qhdyn/matcore.h"

#include <cmath>
#include <limits>

#include "qhdyn/errors.h"

namespace qhdyn {
namespace {

bool is_diagonal(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

void require_square_finite(const ComplexMatrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols())
    throw InvalidArgument("matrix must be square with dimension >= 1");
  if (!a.allFinite()) throw InvalidArgument("matrix has non-finite entries");
}

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

double fro_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix hermitize(const ComplexMatrix& a) {
  require_square_finite(a);
  return (a + a.adjoint()) * 0.5;
}

double hermiticity_defect(const ComplexMatrix& a) {
  const double scale = a.norm();
  if (scale == 0.0) return 0.0;
  return (a - a.adjoint()).norm() / scale;
}

HermitianEigen eig_hermitian(const ComplexMatrix& a,
                             const GateTolerances& tol) {
  require_square_finite(a);
  const double defect = hermiticity_defect(a);
  if (defect > tol.herm) throw NotHermitian(defect);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a));
  if (solver.info() != Eigen::Success)
    throw Error("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix principal_sqrt(const ComplexMatrix& a,
                             const GateTolerances& tol) {
  const HermitianEigen eig = eig_hermitian(a, tol);
  const double lmin = eig.eigenvalues(0);
  const double lmax = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (!(lmax > 0.0) || !(lmin > tol.pos * lmax))
    throw NotPositiveDefinite(lmin, lmax);

  // Diagonal input has an exact elementwise root; this also keeps
  // principal_sqrt(c * I) == sqrt(c) * I bit-for-bit.
  if (is_diagonal(a)) {
    ComplexMatrix s = ComplexMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      s(i, i) = std::sqrt(a(i, i).real());
    return s;
  }

  const RealVector roots = eig.eigenvalues.cwiseSqrt();
  const ComplexMatrix& v = eig.eigenvectors;
  return hermitize(v * roots.cast<Complex>().asDiagonal() * v.adjoint());
}

double condition_number(const ComplexMatrix& a) {
  require_square_finite(a);
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const RealVector& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smax == 0.0 || smin == 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

ComplexMatrix inverse(const ComplexMatrix& a, const GateTolerances& tol) {
  const double cond = condition_number(a);
  if (!(cond <= tol.cond_max)) throw IllConditioned(cond);
  return a.fullPivLu().inverse();
}

double unitarity_defect(const ComplexMatrix& a) {
  return (a.adjoint() * a - identity(a.rows())).norm();
}

}  // namespace qhdyn
