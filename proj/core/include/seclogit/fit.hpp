// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECLOGIT_FIT_HPP
#define SECLOGIT_FIT_HPP

#include <Eigen/Dense>
#include <functional>

namespace seclogit {

// What every party receives at the end of a protocol run: the convergent
// parameter vector plus the two iteration counts. Together with the public
// dimensions these determine the full message schedule of the run, which is
// what makes per-party views synthesizable.
struct FitOutput {
  Eigen::VectorXd beta;
  int outer_iterations = 0;
  int inversion_iterations = 0;
};

// Invoked with the revealed parameter after each outer round. Supplying a
// trace function switches the run into trace mode: intermediate parameters
// are opened on the bus each round. Leave empty for strict runs.
using TraceFn = std::function<void(int iteration, const Eigen::VectorXd& beta)>;

}  // namespace seclogit

#endif  // SECLOGIT_FIT_HPP
