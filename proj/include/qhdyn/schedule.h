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

#ifndef QHDYN_SCHEDULE_H_
#define QHDYN_SCHEDULE_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhdyn/matcore.h"

namespace qhdyn {

// Uniform grid t_k = t_start + k * spacing, k = 0..steps.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, int steps);

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  int steps() const { return steps_; }
  int nodes() const { return steps_ + 1; }
  double spacing() const { return (t_end_ - t_start_) / steps_; }
  // The last node is t_end exactly.
  double node(int k) const;

  TimeGrid with_steps(int steps) const { return {t_start_, t_end_, steps}; }

 private:
  double t_start_;
  double t_end_;
  int steps_;
};

// Time-dependent operator t -> A(t) on a closed span.
//
// kClosedForm wraps analytic evaluators for A and dA/dt. It may also carry an
// analytic derivative of the principal square root of A, which metric
// schedules use instead of finite differences.
//
// kSampled holds K >= 4 snapshots on a uniform grid and interpolates with
// piecewise cubic Hermite polynomials whose node slopes are second-order
// finite differences. Snapshot nodes are reproduced exactly.
class OperatorSchedule {
 public:
  enum class Kind { kClosedForm, kSampled };
  using Function = std::function<ComplexMatrix(double)>;

  // Empty schedule; every evaluation throws.
  OperatorSchedule() = default;

  static OperatorSchedule closed_form(std::string name, double t_lo,
                                      double t_hi, Function value,
                                      Function derivative,
                                      Function root_derivative = {});
  static OperatorSchedule constant(ComplexMatrix value, double t_lo,
                                   double t_hi);
  static OperatorSchedule sampled(std::vector<double> times,
                                  std::vector<ComplexMatrix> snapshots);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Eigen::Index dim() const { return dim_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }

  ComplexMatrix eval(double t) const;

  // Closed form: analytic. Sampled: central difference with the snapshot
  // spacing, second-order one-sided near the span ends.
  ComplexMatrix eval_derivative(double t) const;

  bool has_root_derivative() const { return static_cast<bool>(root_derivative_); }
  ComplexMatrix eval_root_derivative(double t) const;

  // Set for schedules built with constant().
  const std::optional<ComplexMatrix>& constant_value() const {
    return constant_;
  }
  const std::vector<double>& times() const { return times_; }
  const std::vector<ComplexMatrix>& snapshots() const { return snapshots_; }

  // Whether t is inside the span, allowing a rounding-level slack.
  bool contains(double t) const;

 private:
  double checked_time(double t) const;
  ComplexMatrix interpolate(double t) const;
  ComplexMatrix node_slope(std::size_t k) const;

  Kind kind_ = Kind::kClosedForm;
  std::string name_;
  Eigen::Index dim_ = 0;
  double t_lo_ = 0.0;
  double t_hi_ = 0.0;

  Function value_;
  Function derivative_;
  Function root_derivative_;
  std::optional<ComplexMatrix> constant_;

  std::vector<double> times_;
  std::vector<ComplexMatrix> snapshots_;
  std::vector<ComplexMatrix> slopes_;
};

// Central difference (f(t+step) - f(t-step)) / (2 step) where both points
// lie in [lo, hi]; second-order one-sided difference otherwise.
ComplexMatrix finite_difference(const OperatorSchedule::Function& f, double t,
                                double step, double lo, double hi);

}  // namespace qhdyn

#endif  // QHDYN_SCHEDULE_H_
