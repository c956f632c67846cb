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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qhdyn/errors.h"
#include "test_util.h"

namespace qhdyn {
namespace {

using testing::mat;

OperatorSchedule growing_theta() {
  return OperatorSchedule::closed_form(
      "growing", 0.0, 1.0,
      [](double t) { return mat({{1, 0}, {0, 1 + t * t}}); },
      [](double t) { return mat({{0, 0}, {0, 2 * t}}); });
}

// Entries quadratic in t: A(t) = A0 + A1 t + A2 t^2.
ComplexMatrix quadratic(double t) {
  return mat({{1 + 2 * t - t * t, Complex(0.5 * t * t, t)},
              {Complex(0.5 * t * t, -t), 3 - t + 4 * t * t}});
}
ComplexMatrix quadratic_derivative(double t) {
  return mat({{2 - 2 * t, Complex(t, 1)}, {Complex(t, -1), -1 + 8 * t}});
}

OperatorSchedule sampled_quadratic(int k_count) {
  std::vector<double> times;
  std::vector<ComplexMatrix> snaps;
  for (int k = 0; k < k_count; ++k) {
    const double t = static_cast<double>(k) / (k_count - 1);
    times.push_back(t);
    snaps.push_back(quadratic(t));
  }
  return OperatorSchedule::sampled(times, snaps);
}

TEST(TimeGrid, Basics) {
  const TimeGrid g(0.0, 1.0, 4);
  EXPECT_EQ(g.nodes(), 5);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.25);
  EXPECT_EQ(g.node(0), 0.0);
  EXPECT_DOUBLE_EQ(g.node(2), 0.5);
  EXPECT_EQ(TimeGrid(0.1, 0.7, 3).node(3), 0.7);
  EXPECT_EQ(g.with_steps(8).steps(), 8);
}

TEST(TimeGrid, RejectsBadInput) {
  EXPECT_THROW(TimeGrid(1.0, 1.0, 4), InvalidArgument);
  EXPECT_THROW(TimeGrid(1.0, 0.0, 4), InvalidArgument);
  EXPECT_THROW(TimeGrid(0.0, 1.0, 1), InvalidArgument);
  EXPECT_THROW(TimeGrid(0.0, std::nan(""), 4), InvalidArgument);
}

TEST(EvalSchedule, ClosedForm) {
  const OperatorSchedule s = growing_theta();
  EXPECT_EQ(s.eval(1.0), mat({{1, 0}, {0, 2}}));
  EXPECT_EQ(s.eval_derivative(1.0), mat({{0, 0}, {0, 2}}));
  EXPECT_THROW(s.eval(1.5), OutOfRange);
  EXPECT_THROW(s.eval(-0.1), OutOfRange);
  EXPECT_THROW(s.eval_derivative(2.0), OutOfRange);
  try {
    s.eval(1.5);
  } catch (const OutOfRange& e) {
    EXPECT_EQ(e.time(), 1.5);
  }
}

TEST(EvalSchedule, Constant) {
  const OperatorSchedule s = OperatorSchedule::constant(mat({{2, 1}, {1, 2}}), 0, 1);
  EXPECT_EQ(s.eval(0.3), mat({{2, 1}, {1, 2}}));
  EXPECT_EQ(s.eval_derivative(0.3), ComplexMatrix::Zero(2, 2));
  ASSERT_TRUE(s.constant_value().has_value());
  EXPECT_TRUE(s.has_root_derivative());
  EXPECT_EQ(s.eval_root_derivative(0.7), ComplexMatrix::Zero(2, 2));
}

TEST(EvalSchedule, EmptyScheduleThrows) {
  const OperatorSchedule s;
  EXPECT_THROW(s.eval(0.0), Error);
}

TEST(EvalSchedule, SampledExactAtNodes) {
  const OperatorSchedule s = sampled_quadratic(9);
  for (std::size_t k = 0; k < s.times().size(); ++k)
    EXPECT_EQ(s.eval(s.times()[k]), s.snapshots()[k]);
  EXPECT_THROW(s.eval(1.01), OutOfRange);
}

TEST(EvalSchedule, SampledReproducesQuadratics) {
  for (int k_count : {9, 17, 33}) {
    const OperatorSchedule s = sampled_quadratic(k_count);
    double err = 0.0;
    for (int i = 0; i <= 97; ++i) {
      const double t = i / 97.0;
      err = std::max(err, (s.eval(t) - quadratic(t)).norm());
    }
    // Slopes of a quadratic are exact, so Hermite reproduces it.
    EXPECT_LE(err, 1e-13) << "K=" << k_count;
  }

}

// Second-order slopes make the Hermite interpolant third-order accurate.
TEST(EvalSchedule, SampledInterpolationOrder) {
  auto max_error = [](int intervals) {
    std::vector<double> times;
    std::vector<ComplexMatrix> snaps;
    for (int k = 0; k <= intervals; ++k) {
      times.push_back(static_cast<double>(k) / intervals);
      snaps.push_back(mat({{std::sin(3 * times.back()), 0}, {0, 1}}));
    }
    const OperatorSchedule s = OperatorSchedule::sampled(times, snaps);
    double err = 0.0;
    for (int i = 0; i <= 997; ++i) {
      const double t = i / 997.0;
      err = std::max(err, std::abs(s.eval(t)(0, 0).real() - std::sin(3 * t)));
    }
    return err;
  };
  const double e40 = max_error(40);
  const double e80 = max_error(80);
  EXPECT_LE(e40, 1e-4);
  EXPECT_NEAR(std::log2(e40 / e80), 3.0, 0.3);
}

TEST(EvalScheduleDerivative, SampledQuadraticExactAtInteriorNodes) {
  const OperatorSchedule s = sampled_quadratic(11);
  for (std::size_t k = 0; k < s.times().size(); ++k) {
    const double t = s.times()[k];
    EXPECT_LE((s.eval_derivative(t) - quadratic_derivative(t)).norm(), 1e-12)
        << "t=" << t;
  }
}

TEST(Sampled, RejectsBadInput) {
  const std::vector<ComplexMatrix> four(4, identity(2));
  EXPECT_THROW(OperatorSchedule::sampled({0, 1, 2}, {identity(2), identity(2), identity(2)}),
               InvalidArgument);
  EXPECT_THROW(OperatorSchedule::sampled({0, 1, 2.5, 3}, four), InvalidArgument);
  EXPECT_THROW(OperatorSchedule::sampled({0, 1, 2}, four), InvalidArgument);
  std::vector<ComplexMatrix> mixed = four;
  mixed[2] = identity(3);
  EXPECT_THROW(OperatorSchedule::sampled({0, 1, 2, 3}, mixed), Error);
}

TEST(FiniteDifference, CentralAndOneSided) {
  const OperatorSchedule::Function f = quadratic;
  for (double t : {0.0, 0.01, 0.5, 0.99, 1.0}) {
    EXPECT_LE((finite_difference(f, t, 0.05, 0.0, 1.0) - quadratic_derivative(t)).norm(),
              1e-12)
        << "t=" << t;
  }
  // Second order on a cubic: error ~ step^2.
  auto cubic = [](double t) { return mat({{t * t * t}}); };
  const double e1 = std::abs(finite_difference(cubic, 0.5, 0.1, 0, 1)(0, 0) - 0.75);
  const double e2 = std::abs(finite_difference(cubic, 0.5, 0.05, 0, 1)(0, 0) - 0.75);
  EXPECT_NEAR(e1 / e2, 4.0, 1e-6);
  const double b1 = std::abs(finite_difference(cubic, 1.0, 0.1, 0, 1)(0, 0) - 3.0);
  const double b2 = std::abs(finite_difference(cubic, 1.0, 0.05, 0, 1)(0, 0) - 3.0);
  EXPECT_NEAR(b1 / b2, 4.0, 1e-6);
}

}  // namespace
}  // namespace qhdyn
