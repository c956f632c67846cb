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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qhdyn/errors.h"

namespace qhdyn {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw ValidationError("at " + (path.empty() ? std::string("/") : path) +
                        ": " + msg);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(text.size(), byte > 0 ? byte - 1 : 0);
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<long>(end), '\n'));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), e.what());
  }
}

void allow_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> keys) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) schema_error(path, "unknown field '" + key + "'");
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error(path, "number must be finite");
  return x;
}

double as_positive(const json& j, const std::string& path) {
  const double x = as_number(j, path);
  if (!(x > 0.0)) schema_error(path, "expected a positive number");
  return x;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

const json& require(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

Complex as_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    schema_error(path, "expected a [re, im] pair");
  return {as_number(j[0], path + "/0"), as_number(j[1], path + "/1")};
}

ComplexVector as_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    schema_error(path, "expected a non-empty array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = as_complex(j[i], path + "/" + std::to_string(i));
  return v;
}

ComplexMatrix as_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    schema_error(path, "expected a non-empty array of matrix rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      schema_error(row_path, "matrix must be square (" + std::to_string(n) +
                                 " entries per row)");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = as_complex(row[static_cast<std::size_t>(c)],
                           row_path + "/" + std::to_string(c));
  }
  return m;
}

OperatorSchedule as_schedule(const json& j, const std::string& path,
                             const TimeGrid& grid) {
  if (j.is_object()) {
    allow_keys(j, path, {"times", "snapshots"});
    const json& times_j = require(j, path, "times");
    const json& snaps_j = require(j, path, "snapshots");
    if (!times_j.is_array()) schema_error(path + "/times", "expected an array");
    if (!snaps_j.is_array()) schema_error(path + "/snapshots", "expected an array");
    std::vector<double> times;
    for (std::size_t i = 0; i < times_j.size(); ++i)
      times.push_back(as_number(times_j[i], path + "/times/" + std::to_string(i)));
    std::vector<ComplexMatrix> snaps;
    for (std::size_t i = 0; i < snaps_j.size(); ++i)
      snaps.push_back(as_matrix(snaps_j[i], path + "/snapshots/" + std::to_string(i)));
    try {
      return OperatorSchedule::sampled(std::move(times), std::move(snaps));
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
  }
  return OperatorSchedule::constant(as_matrix(j, path), grid.t_start(),
                                    grid.t_end());
}

ComplexVector as_state(const json& j, const std::string& path) {
  if (j.is_object()) {
    allow_keys(j, path, {"space", "components"});
    const json& space = require(j, path, "space");
    if (!space.is_string()) schema_error(path + "/space", "expected a string");
    const auto tag = space.get<std::string>();
    if (tag == "standard")
      schema_error(path + "/space",
                   "initial states live in the reference space; map a "
                   "standard-space ket with its Dyson map first");
    if (tag != "reference")
      schema_error(path + "/space", "expected \"standard\" or \"reference\"");
    return as_vector(require(j, path, "components"), path + "/components");
  }
  return as_vector(j, path);
}

void apply_tolerances(const json& j, const std::string& path, Tolerances& tol) {
  if (!j.is_object()) schema_error(path, "expected an object");
  const std::pair<const char*, double*> fields[] = {
      {"herm", &tol.gates.herm},
      {"pos", &tol.gates.pos},
      {"cond_max", &tol.gates.cond_max},
      {"res", &tol.res},
      {"norm_drift", &tol.norm_drift},
      {"metric", &tol.metric},
      {"qh", &tol.qh},
      {"corrected_fd", &tol.corrected_fd},
      {"corrected_analytic", &tol.corrected_analytic},
      {"naive_fail", &tol.naive_fail},
      {"metric_motion", &tol.metric_motion},
      {"naive_hold", &tol.naive_hold},
  };
  for (const auto& [key, value] : j.items()) {
    const auto* f = std::find_if(std::begin(fields), std::end(fields),
                                 [&](const auto& p) { return key == p.first; });
    if (f == std::end(fields)) schema_error(path, "unknown tolerance '" + key + "'");
    *f->second = as_positive(value, path + "/" + key);
  }
}

TimeGrid as_grid(const json* j, const TimeGrid& defaults) {
  if (j == nullptr) return defaults;
  const std::string path = "/time";
  if (!j->is_object()) schema_error(path, "expected an object");
  allow_keys(*j, path, {"start", "end", "steps"});
  double start = defaults.t_start();
  double end = defaults.t_end();
  int steps = defaults.steps();
  if (j->contains("start")) start = as_number(j->at("start"), path + "/start");
  if (j->contains("end")) end = as_number(j->at("end"), path + "/end");
  if (j->contains("steps")) steps = as_int(j->at("steps"), path + "/steps");
  try {
    return TimeGrid(start, end, steps);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json matrix_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json schedule_json(const OperatorSchedule& s) {
  if (s.constant_value()) return matrix_json(*s.constant_value());
  if (s.kind() == OperatorSchedule::Kind::kSampled) {
    json snaps = json::array();
    for (const auto& m : s.snapshots()) snaps.push_back(matrix_json(m));
    return {{"times", s.times()}, {"snapshots", std::move(snaps)}};
  }
  throw InvalidArgument("closed-form schedule '" + s.name() +
                        "' has no file representation");
}

}  // namespace

Scenario parse_scenario(std::string_view text, const BuiltinRegistry& registry) {
  const json root = parse_json(text);
  if (!root.is_object()) schema_error("", "scenario must be a JSON object");
  allow_keys(root, "", {"dimension", "hbar", "time", "model", "initial_state",
                        "tolerances", "omega_derivative", "description"});

  const json& model = require(root, "", "model");
  const json& kind_j = require(model, "/model", "kind");
  if (!kind_j.is_string()) schema_error("/model/kind", "expected a string");
  const auto kind = kind_j.get<std::string>();

  Scenario s;
  if (kind == "builtin") {
    allow_keys(model, "/model", {"kind", "name"});
    const json& name_j = require(model, "/model", "name");
    if (!name_j.is_string()) schema_error("/model/name", "expected a string");
    const auto name = name_j.get<std::string>();
    const BuiltinEntry* entry = registry.find(name);
    if (entry == nullptr) (void)registry.make(name);  // throws with the list
    const TimeGrid grid = as_grid(
        find(root, "time"), TimeGrid(entry->t_start, entry->t_end, entry->steps));
    s = registry.make(name, grid);
    if (const json* d = find(root, "dimension");
        d != nullptr && as_int(*d, "/dimension") != s.dim)
      schema_error("/dimension", "builtin '" + name + "' has dimension " +
                                     std::to_string(s.dim));
  } else if (kind == "pair" || kind == "direct") {
    const bool pair = kind == "pair";
    allow_keys(model, "/model", {"kind", pair ? "h" : "H", "theta"});
    const int dim = as_int(require(root, "", "dimension"), "/dimension");
    if (dim < 1) schema_error("/dimension", "must be >= 1");
    s.dim = dim;
    s.grid = as_grid(find(root, "time"), TimeGrid(0.0, 1.0, 2000));
    const char* op = pair ? "h" : "H";
    OperatorSchedule generator =
        as_schedule(require(model, "/model", op), std::string("/model/") + op, s.grid);
    OperatorSchedule theta =
        as_schedule(require(model, "/model", "theta"), "/model/theta", s.grid);
    if (pair)
      s.model = PairModel{std::move(generator), std::move(theta)};
    else
      s.model = DirectModel{std::move(generator), std::move(theta)};
    s.initial_state = as_state(require(root, "", "initial_state"), "/initial_state");
  } else {
    schema_error("/model/kind", "expected \"builtin\", \"pair\" or \"direct\"");
  }

  if (const json* h = find(root, "hbar")) s.hbar = as_positive(*h, "/hbar");
  if (const json* st = find(root, "initial_state"); st && s.builtin_name)
    s.initial_state = as_state(*st, "/initial_state");
  if (const json* t = find(root, "tolerances"))
    apply_tolerances(*t, "/tolerances", s.tolerances);
  if (const json* od = find(root, "omega_derivative")) {
    if (!od->is_string()) schema_error("/omega_derivative", "expected a string");
    const auto mode = parse_omega_derivative(od->get<std::string>());
    if (!mode)
      schema_error("/omega_derivative",
                   "expected \"auto\", \"analytic\" or \"finite-difference\"");
    s.omega_derivative = *mode;
  }

  validate_scenario(s);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json root;
  root["dimension"] = s.dim;
  root["hbar"] = s.hbar;
  root["time"] = {{"start", s.grid.t_start()},
                  {"end", s.grid.t_end()},
                  {"steps", s.grid.steps()}};
  if (s.builtin_name) {
    root["model"] = {{"kind", "builtin"}, {"name", *s.builtin_name}};
  } else if (const auto* pair = std::get_if<PairModel>(&s.model)) {
    root["model"] = {{"kind", "pair"},
                     {"h", schedule_json(pair->h)},
                     {"theta", schedule_json(pair->theta)}};
  } else {
    const auto& direct = std::get<DirectModel>(s.model);
    root["model"] = {{"kind", "direct"},
                     {"H", schedule_json(direct.hamiltonian)},
                     {"theta", schedule_json(direct.theta)}};
  }
  root["initial_state"] = vector_json(s.initial_state);
  const Tolerances& t = s.tolerances;
  root["tolerances"] = {{"herm", t.gates.herm},
                        {"pos", t.gates.pos},
                        {"cond_max", t.gates.cond_max},
                        {"res", t.res},
                        {"norm_drift", t.norm_drift},
                        {"metric", t.metric},
                        {"qh", t.qh},
                        {"corrected_fd", t.corrected_fd},
                        {"corrected_analytic", t.corrected_analytic},
                        {"naive_fail", t.naive_fail},
                        {"metric_motion", t.metric_motion},
                        {"naive_hold", t.naive_hold}};
  root["omega_derivative"] = omega_derivative_name(s.omega_derivative);
  return root.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path,
                            const BuiltinRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading scenario file '" + path + "'");
  return parse_scenario(buf.str(), registry);
}

ComplexVector parse_vector_literal(std::string_view json_text) {
  return as_vector(parse_json(json_text), "");
}

ComplexMatrix parse_matrix_literal(std::string_view json_text) {
  return as_matrix(parse_json(json_text), "");
}

}  // namespace qhdyn
