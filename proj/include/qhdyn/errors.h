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

#ifndef QHDYN_ERRORS_H_
#define QHDYN_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>

namespace qhdyn {

// Base class of every error raised by the library. Numerical gate failures
// carry the offending quantity so callers can report it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long expected, long actual);
  long expected() const { return expected_; }
  long actual() const { return actual_; }

 private:
  long expected_;
  long actual_;
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(double defect, std::optional<double> t = std::nullopt);
  // Relative defect ||A - A^dagger||_F / ||A||_F.
  double defect() const { return defect_; }
  std::optional<double> time() const { return t_; }

 private:
  double defect_;
  std::optional<double> t_;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(double lambda_min, double lambda_max,
                      std::optional<double> t = std::nullopt);
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }
  std::optional<double> time() const { return t_; }

 private:
  double lambda_min_;
  double lambda_max_;
  std::optional<double> t_;
};

class IllConditioned : public Error {
 public:
  explicit IllConditioned(double cond, std::optional<double> t = std::nullopt);
  double condition() const { return cond_; }
  std::optional<double> time() const { return t_; }

 private:
  double cond_;
  std::optional<double> t_;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class BasisNotOrthonormal : public Error {
 public:
  explicit BasisNotOrthonormal(double gram_defect);
  double gram_defect() const { return gram_defect_; }

 private:
  double gram_defect_;
};

class OutOfRange : public Error {
 public:
  OutOfRange(double t, double lo, double hi);
  double time() const { return t_; }

 private:
  double t_;
};

// Raised when a convergence order cannot be measured, e.g. because both
// runs reproduce the oracle exactly.
class NotMeasurable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhdyn

#endif  // QHDYN_ERRORS_H_
