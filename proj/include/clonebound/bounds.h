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

#ifndef CLONEBOUND_BOUNDS_H
#define CLONEBOUND_BOUNDS_H

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace clonebound {

/// Lower bound on the relative error: F(z) = z - z^2 / sqrt(1 + z^2).
double re_lower_bound(double z);

/// Lower bound on the absolute error: z sqrt(1 - z^4) - z^2 sqrt(1 - z^2).
double ae_lower_bound(double z);

/// Hillery-Buzek bound on X(phi) + X(psi): 2 (sqrt(1 + z(1 - z)) - 1).
double hb_bound(double z);

/// sin(D - d) / sin D with cos D = z^2 and cos d = z. Same value as
/// re_lower_bound on [0, 1); undefined (0/0) at z = 1.
double icasmin_form(double z);

struct BoundCurve {
    std::string name;
    std::vector<double> grid;
    std::vector<double> values;

    std::size_t size() const { return grid.size(); }
    /// Index of the largest value (first one on ties).
    std::size_t argmax() const;
};

using BoundFunction = std::function<double(double)>;

/// Samples f on `steps` uniformly spaced points from z_min to z_max inclusive.
BoundCurve sample_curve(const std::string& name, const BoundFunction& f, double z_min,
                        double z_max, std::size_t steps);

}  // namespace clonebound

#endif  // CLONEBOUND_BOUNDS_H
