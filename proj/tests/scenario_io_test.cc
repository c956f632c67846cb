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

#include "qhdyn/scenario_io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "qhdyn/errors.h"
#include "qhdyn/verify.h"
#include "test_util.h"

namespace qhdyn {
namespace {

using testing::mat;
using testing::Rng;
using testing::vec;

std::string source_dir() {
  const char* dir = std::getenv("QHDYN_SOURCE_DIR");
  return dir != nullptr ? dir : ".";
}

void expect_identical_rows(const Scenario& a, const Scenario& b) {
  const auto ra = run_diagnostics(a);
  const auto rb = run_diagnostics(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    EXPECT_EQ(ra[k].t, rb[k].t);
    EXPECT_EQ(ra[k].unitarity_defect, rb[k].unitarity_defect);
    EXPECT_EQ(ra[k].norm_phys, rb[k].norm_phys);
    EXPECT_EQ(ra[k].res_naive, rb[k].res_naive);
    EXPECT_EQ(ra[k].res_corrected, rb[k].res_corrected);
    EXPECT_EQ(ra[k].res_metric, rb[k].res_metric);
    EXPECT_EQ(ra[k].res_qh, rb[k].res_qh);
  }
}

TEST(ParseScenario, BuiltinReferenceUsesDefaults) {
  const Scenario s =
      parse_scenario(R"({"model":{"kind":"builtin","name":"growing-metric-2d"}})");
  EXPECT_EQ(s.builtin_name, "growing-metric-2d");
  EXPECT_EQ(s.grid.steps(), 2000);
  EXPECT_EQ(s.grid.t_start(), 0.0);
  EXPECT_EQ(s.grid.t_end(), 1.0);
  EXPECT_EQ(s.hbar, 1.0);
  EXPECT_EQ(s.dim, 2);
  EXPECT_EQ(s.initial_state, vec({1, 0}));
}

TEST(ParseScenario, BuiltinOverrides) {
  const Scenario s = parse_scenario(R"({
    "model": {"kind": "builtin", "name": "constant-metric-2d"},
    "time": {"steps": 300},
    "hbar": 0.5,
    "initial_state": [[0, 0], [1, 0]],
    "tolerances": {"norm_drift": 1e-9},
    "omega_derivative": "finite-difference"
  })");
  EXPECT_EQ(s.grid.steps(), 300);
  EXPECT_EQ(s.hbar, 0.5);
  EXPECT_EQ(s.initial_state, vec({0, 1}));
  EXPECT_EQ(s.tolerances.norm_drift, 1e-9);
  EXPECT_EQ(s.tolerances.metric, 1e-6);
  EXPECT_EQ(s.omega_derivative, OmegaDerivative::kFiniteDifference);
}

TEST(ParseScenario, UnknownBuiltinListsNames) {
  try {
    parse_scenario(R"({"model":{"kind":"builtin","name":"nope"}})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    for (const auto& name : BuiltinRegistry::standard().names())
      EXPECT_NE(msg.find(name), std::string::npos) << msg;
  }
}

TEST(ParseScenario, DirectModelViolatingQuasiHermiticity) {
  try {
    parse_scenario(R"({
      "dimension": 2,
      "model": {"kind": "direct",
                "H": [[[0,0],[1,0]], [[0,0],[0,0]]],
                "theta": [[[1,0],[0,0]], [[0,0],[1,0]]]},
      "initial_state": [[1,0],[0,0]]
    })");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("t=0"), std::string::npos) << msg;
    EXPECT_NE(msg.find("1.414213562"), std::string::npos) << msg;
  }
}

TEST(ParseScenario, DirectModelAccepted) {
  const Scenario s = parse_scenario(R"({
    "dimension": 2,
    "time": {"start": 0, "end": 1, "steps": 1000},
    "model": {"kind": "direct",
              "H": [[[-1,0],[0,0]], [[1,0],[1,0]]],
              "theta": [[[1,0],[1,0]], [[1,0],[2,0]]]},
    "initial_state": {"space": "reference", "components": [[0,0],[0.7071067811865476,0]]}
  })");
  EXPECT_TRUE(std::holds_alternative<DirectModel>(s.model));
  EXPECT_TRUE(all_passed(verdicts(run_diagnostics(s), s)));
}

TEST(ParseScenario, SampledMetric) {
  std::ostringstream os;
  os << R"({"dimension": 1, "time": {"start": 0, "end": 1, "steps": 64},
            "model": {"kind": "pair", "h": [[[1,0]]],
                      "theta": {"times": [)";
  for (int k = 0; k <= 8; ++k) os << (k ? "," : "") << k / 8.0;
  os << R"(], "snapshots": [)";
  for (int k = 0; k <= 8; ++k) os << (k ? "," : "") << "[[[" << 1 + k / 8.0 << ",0]]]";
  os << R"(]}}, "initial_state": [[1,0]]})";
  const Scenario s = parse_scenario(os.str());
  const auto& theta = std::get<PairModel>(s.model).theta;
  EXPECT_EQ(theta.kind(), OperatorSchedule::Kind::kSampled);
  EXPECT_NEAR(theta.eval(0.3)(0, 0).real(), 1.3, 1e-14);
  EXPECT_EQ(s.omega_derivative, OmegaDerivative::kAuto);
}

TEST(ParseScenario, SyntaxErrorReportsLine) {
  try {
    parse_scenario("{\n  \"model\": {\n    \"kind\": \"builtin\",,\n  }\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_scenario(""), ParseError);
}

TEST(ParseScenario, SchemaErrorsCarryPath) {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_scenario(text);
    } catch (const ValidationError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},"extra":1})")
                .find("unknown field 'extra'"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},"hbar":-1})")
                .find("/hbar"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},
                        "time":{"steps":1}})")
                .find("/time"),
            std::string::npos);
  EXPECT_NE(message(R"({"dimension":2,"model":{"kind":"pair",
                        "h":[[[0,0],[1,0]],[[1,0]]],"theta":[[[1,0],[0,0]],[[0,0],[1,0]]]},
                        "initial_state":[[1,0],[0,0]]})")
                .find("/model/h/1"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"weird"}})").find("/model/kind"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},
                        "initial_state":{"space":"standard","components":[[1,0],[0,0]]}})")
                .find("/initial_state/space"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},
                        "tolerances":{"bogus":1}})")
                .find("unknown tolerance"),
            std::string::npos);
  EXPECT_NE(message(R"({"model":{"kind":"builtin","name":"growing-metric-2d"},
                        "initial_state":[[1,0]]})")
                .find("initial_state"),
            std::string::npos);
}

TEST(ParseScenario, PairModelNeedsHermitianH) {
  EXPECT_THROW(parse_scenario(R"({"dimension":2,"model":{"kind":"pair",
                   "h":[[[0,0],[1,0]],[[0,0],[0,0]]],
                   "theta":[[[1,0],[0,0]],[[0,0],[1,0]]]},
                   "initial_state":[[1,0],[0,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_scenario(R"({"dimension":2,"model":{"kind":"pair",
                   "h":[[[0,0],[1,0]],[[1,0],[0,0]]],
                   "theta":[[[1,0],[2,0]],[[2,0],[1,0]]]},
                   "initial_state":[[1,0],[0,0]]})"),
               ValidationError);
}

TEST(SerializeScenario, BuiltinRoundTrip) {
  for (const auto& name : BuiltinRegistry::standard().names()) {
    Scenario s = BuiltinRegistry::standard().make(name, TimeGrid(0, 1, 120));
    s.tolerances.metric = 2e-6;
    const Scenario back = parse_scenario(serialize_scenario(s));
    EXPECT_EQ(back.builtin_name, s.builtin_name);
    EXPECT_EQ(back.tolerances.metric, 2e-6);
    EXPECT_EQ(back.initial_state, s.initial_state);
    expect_identical_rows(s, back);
  }
}

// Random pair scenarios with constant and sampled schedules.
TEST(SerializeScenario, RandomPairRoundTrip) {
  Rng rng(501);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const TimeGrid grid(0.0, 0.5 + unit(rng), 40);
    const ComplexMatrix a = testing::random_positive_definite(rng, n, 10.0);
    const ComplexMatrix b = testing::random_positive_definite(rng, n, 10.0);
    std::vector<double> times;
    std::vector<ComplexMatrix> snaps;
    for (int k = 0; k <= 6; ++k) {
      const double x = k / 6.0;
      times.push_back(grid.t_start() + x * (grid.t_end() - grid.t_start()));
      snaps.push_back((1 - x) * a + x * b);
    }
    Scenario s;
    s.dim = n;
    s.grid = grid;
    s.hbar = 0.5 + unit(rng);
    s.model = PairModel{
        OperatorSchedule::constant(testing::random_hermitian(rng, n), grid.t_start(),
                                   grid.t_end()),
        OperatorSchedule::sampled(times, snaps)};
    s.initial_state = testing::random_vector(rng, n);
    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario(text);
    EXPECT_EQ(serialize_scenario(back), text);
    expect_identical_rows(s, back);
  }
}

TEST(SerializeScenario, ClosedFormWithoutNameIsRejected) {
  Scenario s = BuiltinRegistry::standard().make("growing-metric-2d", TimeGrid(0, 1, 10));
  s.builtin_name.reset();
  EXPECT_THROW(serialize_scenario(s), InvalidArgument);
}

TEST(LoadScenarioFile, MissingFile) {
  EXPECT_THROW(load_scenario_file("/nonexistent/scenario.json"), IoError);
}

TEST(LoadScenarioFile, ShippedExamplesParse) {
  for (const char* file : {"growing-metric.json", "sampled-metric.json",
                           "dyson-direct.json"}) {
    const std::string path = source_dir() + "/scenarios/" + file;
    EXPECT_NO_THROW(load_scenario_file(path)) << path;
  }
}

TEST(Literals, VectorAndMatrix) {
  EXPECT_EQ(parse_vector_literal("[[1,0],[0,-2]]"), vec({1, Complex(0, -2)}));
  EXPECT_EQ(parse_matrix_literal("[[[1,0],[2,0]],[[3,0],[4,1]]]"),
            mat({{1, 2}, {3, Complex(4, 1)}}));
  EXPECT_THROW(parse_matrix_literal("[[[1,0],[2,0]]]"), ValidationError);
  EXPECT_THROW(parse_vector_literal("[[1,0,3]]"), ValidationError);
  EXPECT_THROW(parse_vector_literal("[1"), ParseError);
}

}  // namespace
}  // namespace qhdyn
