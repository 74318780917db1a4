// Copyright 2026 The clonebound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLONEBOUND_NELDER_MEAD_H
#define CLONEBOUND_NELDER_MEAD_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace clonebound {

struct NelderMeadOptions {
    /// Iteration budget for one simplex run.
    std::size_t max_iters = 400;
    /// Edge length of the initial (and every restarted) simplex.
    double initial_step = 0.25;
    /// A run stops once the spread of simplex values drops below this.
    double f_tol = 1e-15;
    /// Fresh simplices built around the incumbent after a run stalls.
    std::size_t max_restarts = 4;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f from `start`. NaN values are treated as +infinity. Restarts
/// from the best point with a shrinking simplex while restarts keep
/// improving the value.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& opts = {});

}  // namespace clonebound

#endif  // CLONEBOUND_NELDER_MEAD_H
