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

// Closed-form scenarios, all with hbar = 1 and h = sigma_x unless noted:
//
//   growing-metric-2d    Theta(t) = diag(1, 1 + t^2) on [0, 1]
//   constant-metric-2d   Theta = [[2, 1], [1, 2]]
//   scalar-exponential   Theta(t) = exp(2t) I
//   nonhermitian-dyson   H = Omega^-1 sigma_x Omega, Omega = [[1, 1], [0, 1]],
//                        Theta = Omega^dagger Omega; initial state
//                        Omega^-1 (1, 1)/sqrt(2)

#ifndef QHDYN_BUILTINS_H_
#define QHDYN_BUILTINS_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qhdyn/scenario.h"

namespace qhdyn {

struct BuiltinEntry {
  std::string name;
  std::string summary;
  Eigen::Index dim = 0;
  double t_start = 0.0;
  double t_end = 1.0;
  int steps = 2000;
  std::function<Scenario(const TimeGrid&)> make;
};

class BuiltinRegistry {
 public:
  // The four scenarios listed above.
  static const BuiltinRegistry& standard();

  void add(BuiltinEntry entry);

  const BuiltinEntry* find(const std::string& name) const;
  // Lexicographically sorted.
  std::vector<std::string> names() const;
  const std::map<std::string, BuiltinEntry>& entries() const { return entries_; }

  // Throws ValidationError listing the available names on a miss.
  Scenario make(const std::string& name) const;
  Scenario make(const std::string& name, const TimeGrid& grid) const;

 private:
  std::map<std::string, BuiltinEntry> entries_;
};

// exp(-i sigma_x (t - t0) / hbar) in closed form.
ComplexMatrix sigma_x_propagator(double t, double t0, double hbar);

}  // namespace qhdyn

#endif  // QHDYN_BUILTINS_H_
