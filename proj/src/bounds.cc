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

#include "clonebound/bounds.h"

#include <algorithm>
#include <cmath>

#include "clonebound/statespace.h"

namespace clonebound {

namespace {

void require_unit_interval(double z, const char* what) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError(std::string(what) + ": z must lie in [0, 1]");
    }
}

}  // namespace

double re_lower_bound(double z) {
    require_unit_interval(z, "re_lower_bound");
    return z - z * z / std::sqrt(1.0 + z * z);
}

double ae_lower_bound(double z) {
    require_unit_interval(z, "ae_lower_bound");
    const double z2 = z * z;
    return z * std::sqrt(1.0 - z2 * z2) - z2 * std::sqrt(1.0 - z2);
}

double hb_bound(double z) {
    require_unit_interval(z, "hb_bound");
    return 2.0 * (std::sqrt(1.0 + z * (1.0 - z)) - 1.0);
}

double icasmin_form(double z) {
    if (!(z >= 0.0 && z < 1.0)) {
        throw DomainError("icasmin_form: z must lie in [0, 1)");
    }
    const double big = std::acos(z * z);
    const double small = std::acos(z);
    return std::sin(big - small) / std::sin(big);
}

std::size_t BoundCurve::argmax() const {
    return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) -
                                    values.begin());
}

BoundCurve sample_curve(const std::string& name, const BoundFunction& f, double z_min,
                        double z_max, std::size_t steps) {
    if (!(z_min >= 0.0 && z_min < z_max && z_max <= 1.0)) {
        throw DomainError("sample_curve: need 0 <= z_min < z_max <= 1");
    }
    if (steps < 2) {
        throw DomainError("sample_curve: need at least 2 steps");
    }
    BoundCurve curve{name, {}, {}};
    curve.grid.reserve(steps);
    curve.values.reserve(steps);
    const double width = z_max - z_min;
    for (std::size_t i = 0; i < steps; ++i) {
        // Endpoints are hit exactly rather than through accumulated steps.
        const double z = i + 1 == steps ? z_max
                                        : z_min + width * static_cast<double>(i) /
                                                      static_cast<double>(steps - 1);
        curve.grid.push_back(z);
        curve.values.push_back(f(z));
    }
    return curve;
}

}  // namespace clonebound
