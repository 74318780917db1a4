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

#include <gtest/gtest.h>

#include <cmath>

#include "clonebound/statespace.h"

namespace clonebound {
namespace {

TEST(ReLowerBound, Values) {
    EXPECT_EQ(re_lower_bound(0.0), 0.0);
    EXPECT_NEAR(re_lower_bound(0.5), 0.5 - 0.25 / std::sqrt(1.25), 1e-15);
    EXPECT_NEAR(re_lower_bound(1.0), 1.0 - 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(re_lower_bound(-0.01), DomainError);
    EXPECT_THROW(re_lower_bound(1.01), DomainError);
}

TEST(ReLowerBound, AgreesWithAngleForm) {
    for (int i = 1; i < 100; ++i) {
        const double z = i / 100.0;
        const double big = std::acos(z * z);
        const double small = std::acos(z);
        EXPECT_NEAR(icasmin_form(z), std::sin(big - small) / std::sin(big), 1e-14);
        EXPECT_NEAR(icasmin_form(z), re_lower_bound(z), 1e-12) << z;
    }
    EXPECT_THROW(icasmin_form(1.0), DomainError);
}

TEST(ReLowerBound, SmallOverlapAsymptotics) {
    for (double z : {1e-3, 1e-4}) {
        EXPECT_NEAR(re_lower_bound(z), z - z * z, z * z * z);
    }
}

TEST(ReLowerBound, ShapeOnFineGrid) {
    // The derivative vanishes where 1 - z^2 - z^4 = 0. F rises up to that
    // point and falls towards 1 - 1/sqrt(2) after it.
    const double z_star = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
    const double h = 1e-6;
    EXPECT_GT(re_lower_bound(z_star), re_lower_bound(z_star - h));
    EXPECT_GT(re_lower_bound(z_star), re_lower_bound(z_star + h));
    const BoundCurve c = sample_curve("F", re_lower_bound, 0.0, 1.0, 1001);
    const double peak = c.grid[c.argmax()];
    EXPECT_NEAR(peak, z_star, 0.001);
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c.grid[i] <= 0.78) {
            EXPECT_GT(c.values[i], c.values[i - 1]) << c.grid[i];
        } else if (c.grid[i] >= 0.79) {
            EXPECT_LT(c.values[i], c.values[i - 1]) << c.grid[i];
        }
    }
}

TEST(AeLowerBound, Landmarks) {
    EXPECT_NEAR(ae_lower_bound(0.5), std::sqrt(3.0) * (std::sqrt(5.0) - 1.0) / 8.0, 1e-12);
    EXPECT_NEAR(ae_lower_bound(1.0 / std::sqrt(3.0)), std::sqrt(2.0 / 27.0), 1e-14);
    EXPECT_EQ(ae_lower_bound(0.0), 0.0);
    EXPECT_EQ(ae_lower_bound(1.0), 0.0);
    const BoundCurve c = sample_curve("ae", ae_lower_bound, 0.0, 1.0, 20001);
    EXPECT_NEAR(c.grid[c.argmax()], 1.0 / std::sqrt(3.0), 1e-4);
    EXPECT_NEAR(c.values[c.argmax()], std::sqrt(2.0 / 27.0), 1e-8);
}

TEST(HbBound, Landmarks) {
    EXPECT_NEAR(hb_bound(0.5), std::sqrt(5.0) - 2.0, 1e-15);
    EXPECT_EQ(hb_bound(0.0), 0.0);
    EXPECT_EQ(hb_bound(1.0), 0.0);
    // Symmetric about z = 1/2.
    for (double z : {0.1, 0.27, 0.4}) EXPECT_NEAR(hb_bound(z), hb_bound(1.0 - z), 1e-15);
    EXPECT_NEAR(ae_lower_bound(0.8) / hb_bound(0.8), 1.5, 0.02);
}

TEST(AeLowerBound, DominatesHb) {
    for (int i = 0; i <= 10000; ++i) {
        const double z = i / 10000.0;
        EXPECT_GE(ae_lower_bound(z), hb_bound(z) - 1e-12) << z;
    }
}

TEST(SampleCurve, GridAndValidation) {
    const BoundCurve c = sample_curve("hb", hb_bound, 0.0, 1.0, 201);
    ASSERT_EQ(c.size(), 201u);
    EXPECT_EQ(c.grid.front(), 0.0);
    EXPECT_EQ(c.grid.back(), 1.0);
    EXPECT_NEAR(c.grid[100], 0.5, 1e-15);
    EXPECT_EQ(c.argmax(), 100u);
    EXPECT_THROW(sample_curve("x", hb_bound, 0.5, 0.5, 10), DomainError);
    EXPECT_THROW(sample_curve("x", hb_bound, 0.0, 1.0, 1), DomainError);
    EXPECT_THROW(sample_curve("x", hb_bound, -0.1, 1.0, 10), DomainError);
}

}  // namespace
}  // namespace clonebound
