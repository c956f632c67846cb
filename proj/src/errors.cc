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

#include "qhdyn/errors.h"

#include <sstream>

namespace qhdyn {
namespace {

std::string at_time(std::optional<double> t) {
  if (!t) return "";
  std::ostringstream os;
  os.precision(10);
  os << " at t=" << *t;
  return os.str();
}

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

}  // namespace

DimensionMismatch::DimensionMismatch(long expected, long actual)
    : Error(concat("dimension mismatch: expected ", expected, ", got ", actual)),
      expected_(expected),
      actual_(actual) {}

NotHermitian::NotHermitian(double defect, std::optional<double> t)
    : Error(concat("matrix is not Hermitian (relative defect ", defect, ")",
                   at_time(t))),
      defect_(defect),
      t_(t) {}

NotPositiveDefinite::NotPositiveDefinite(double lambda_min, double lambda_max,
                                         std::optional<double> t)
    : Error(concat("matrix is not positive definite (lambda_min=", lambda_min,
                   ", lambda_max=", lambda_max, ")", at_time(t))),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max),
      t_(t) {}

IllConditioned::IllConditioned(double cond, std::optional<double> t)
    : Error(concat("matrix is ill-conditioned (cond=", cond, ")", at_time(t))),
      cond_(cond),
      t_(t) {}

BasisNotOrthonormal::BasisNotOrthonormal(double gram_defect)
    : Error(concat("basis is not orthonormal (Gram defect ", gram_defect, ")")),
      gram_defect_(gram_defect) {}

OutOfRange::OutOfRange(double t, double lo, double hi)
    : Error(concat("t=", t, " outside schedule span [", lo, ", ", hi, "]")),
      t_(t) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(concat("parse error at line ", line, ": ", message)), line_(line) {}

}  // namespace qhdyn
