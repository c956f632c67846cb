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

#include "qhdyn/schedule.h"

#include <algorithm>
#include <cmath>

#include "qhdyn/errors.h"

namespace qhdyn {
namespace {

double span_slack(double lo, double hi) {
  return 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
}

}  // namespace

TimeGrid::TimeGrid(double t_start, double t_end, int steps)
    : t_start_(t_start), t_end_(t_end), steps_(steps) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start))
    throw InvalidArgument("time grid needs finite t_end > t_start");
  if (steps < 2) throw InvalidArgument("time grid needs at least 2 steps");
}

double TimeGrid::node(int k) const {
  if (k == steps_) return t_end_;
  return t_start_ + (t_end_ - t_start_) * k / steps_;
}

OperatorSchedule OperatorSchedule::closed_form(std::string name, double t_lo,
                                               double t_hi, Function value,
                                               Function derivative,
                                               Function root_derivative) {
  if (!(t_hi > t_lo)) throw InvalidArgument("schedule span must be non-empty");
  if (!value || !derivative)
    throw InvalidArgument("closed-form schedule needs value and derivative");
  OperatorSchedule s;
  s.kind_ = Kind::kClosedForm;
  s.name_ = std::move(name);
  s.t_lo_ = t_lo;
  s.t_hi_ = t_hi;
  s.value_ = std::move(value);
  s.derivative_ = std::move(derivative);
  s.root_derivative_ = std::move(root_derivative);
  const ComplexMatrix probe = s.value_(t_lo);
  require_square_finite(probe);
  s.dim_ = probe.rows();
  return s;
}

OperatorSchedule OperatorSchedule::constant(ComplexMatrix value, double t_lo,
                                            double t_hi) {
  require_square_finite(value);
  const Eigen::Index n = value.rows();
  auto zero = [n](double) -> ComplexMatrix {
    return ComplexMatrix::Zero(n, n);
  };
  auto fixed = [value](double) { return value; };
  OperatorSchedule s = closed_form("constant", t_lo, t_hi, fixed, zero, zero);
  s.constant_ = std::move(value);
  return s;
}

OperatorSchedule OperatorSchedule::sampled(
    std::vector<double> times, std::vector<ComplexMatrix> snapshots) {
  if (times.size() < 4)
    throw InvalidArgument("sampled schedule needs at least 4 snapshots");
  if (times.size() != snapshots.size())
    throw InvalidArgument("sampled schedule: times and snapshots differ in length");
  for (const auto& m : snapshots) {
    require_square_finite(m);
    if (m.rows() != snapshots.front().rows())
      throw DimensionMismatch(snapshots.front().rows(), m.rows());
  }
  const std::size_t k_last = times.size() - 1;
  const double lo = times.front();
  const double hi = times.back();
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
    throw InvalidArgument("sampled schedule times must increase");
  const double spacing = (hi - lo) / static_cast<double>(k_last);
  for (std::size_t k = 0; k <= k_last; ++k) {
    const double expected = lo + spacing * static_cast<double>(k);
    if (!(std::abs(times[k] - expected) <= 1e-9 * (hi - lo)))
      throw InvalidArgument("sampled schedule times must be uniformly spaced");
  }

  OperatorSchedule s;
  s.kind_ = Kind::kSampled;
  s.name_ = "sampled";
  s.dim_ = snapshots.front().rows();
  s.t_lo_ = lo;
  s.t_hi_ = hi;
  s.times_ = std::move(times);
  s.snapshots_ = std::move(snapshots);
  s.slopes_.reserve(s.snapshots_.size());
  for (std::size_t k = 0; k <= k_last; ++k) s.slopes_.push_back(s.node_slope(k));
  return s;
}

bool OperatorSchedule::contains(double t) const {
  const double slack = span_slack(t_lo_, t_hi_);
  return t >= t_lo_ - slack && t <= t_hi_ + slack;
}

double OperatorSchedule::checked_time(double t) const {
  if (dim_ == 0) throw InvalidArgument("empty schedule");
  if (!std::isfinite(t) || !contains(t)) throw OutOfRange(t, t_lo_, t_hi_);
  return std::clamp(t, t_lo_, t_hi_);
}

ComplexMatrix OperatorSchedule::eval(double t) const {
  t = checked_time(t);
  if (kind_ == Kind::kSampled) return interpolate(t);
  ComplexMatrix a = value_(t);
  if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch(dim_, a.rows());
  if (!a.allFinite()) throw InvalidArgument("schedule produced non-finite entries");
  return a;
}

ComplexMatrix OperatorSchedule::eval_derivative(double t) const {
  t = checked_time(t);
  if (kind_ == Kind::kClosedForm) return derivative_(t);
  const double step = (t_hi_ - t_lo_) / static_cast<double>(times_.size() - 1);
  return finite_difference([this](double x) { return interpolate(x); }, t,
                           step, t_lo_, t_hi_);
}

ComplexMatrix OperatorSchedule::eval_root_derivative(double t) const {
  if (!root_derivative_)
    throw InvalidArgument("schedule has no analytic square-root derivative");
  return root_derivative_(checked_time(t));
}

ComplexMatrix OperatorSchedule::node_slope(std::size_t k) const {
  const std::size_t last = snapshots_.size() - 1;
  const double h = (t_hi_ - t_lo_) / static_cast<double>(last);
  const auto& a = snapshots_;
  if (k == 0) return (-3.0 * a[0] + 4.0 * a[1] - a[2]) / (2.0 * h);
  if (k == last)
    return (3.0 * a[last] - 4.0 * a[last - 1] + a[last - 2]) / (2.0 * h);
  return (a[k + 1] - a[k - 1]) / (2.0 * h);
}

ComplexMatrix OperatorSchedule::interpolate(double t) const {
  const auto hit = std::lower_bound(times_.begin(), times_.end(), t);
  if (hit != times_.end() && *hit == t)
    return snapshots_[static_cast<std::size_t>(hit - times_.begin())];

  const std::size_t last = snapshots_.size() - 1;
  const double h = (t_hi_ - t_lo_) / static_cast<double>(last);
  const double x = (t - t_lo_) / h;
  const std::size_t k =
      std::min(static_cast<std::size_t>(std::max(0.0, std::floor(x))), last - 1);
  const double s = x - static_cast<double>(k);
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * snapshots_[k] + (h10 * h) * slopes_[k] +
         h01 * snapshots_[k + 1] + (h11 * h) * slopes_[k + 1];
}

ComplexMatrix finite_difference(const OperatorSchedule::Function& f, double t,
                                double step, double lo, double hi) {
  const double slack = span_slack(lo, hi);
  const bool has_left = t - step >= lo - slack;
  const bool has_right = t + step <= hi + slack;
  if (has_left && has_right)
    return (f(std::min(t + step, hi)) - f(std::max(t - step, lo))) / (2.0 * step);
  if (has_right && t + 2.0 * step <= hi + slack)
    return (-3.0 * f(t) + 4.0 * f(t + step) -
            f(std::min(t + 2.0 * step, hi))) / (2.0 * step);
  if (has_left && t - 2.0 * step >= lo - slack)
    return (3.0 * f(t) - 4.0 * f(t - step) +
            f(std::max(t - 2.0 * step, lo))) / (2.0 * step);
  throw InvalidArgument("finite-difference step too large for schedule span");
}

}  // namespace qhdyn
