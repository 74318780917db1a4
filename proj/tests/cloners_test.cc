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

#include "clonebound/cloners.h"

#include <gtest/gtest.h>

#include <cmath>

namespace clonebound {
namespace {

// Direct transcriptions used as oracles.
double asym_re(double z) { return z - z * z / std::sqrt(1.0 + z * z); }
double asym_ae(double z) { return z * std::sqrt(1.0 - z * z * z * z) - z * z * std::sqrt(1.0 - z * z); }
double sym_ae(double z) { return 2.0 * std::sin((std::acos(z * z) - std::acos(z)) / 2.0); }

std::vector<double> z_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
    return g;
}

void expect_realizable(const ClonerResult& r) {
    const Complex overlap = inner(r.a_phi.v, r.a_psi.v);
    EXPECT_LT(std::abs(overlap - inner(r.set.phi(), r.set.psi())), 1e-10);
    EXPECT_TRUE(r.a_phi.v.is_unit());
    EXPECT_TRUE(r.a_psi.v.is_unit());
}

TEST(Spec, FactoriesAndParsing) {
    EXPECT_EQ(ClonerSpec::symmetric().kind, ClonerKind::kSymmetric);
    EXPECT_FALSE(ClonerSpec::symmetric().favored.has_value());
    EXPECT_EQ(*ClonerSpec::asymmetric(Favored::kPsi).favored, Favored::kPsi);
    EXPECT_EQ(ClonerSpec::wootters_zurek().ancilla_dim, 2u);
    EXPECT_EQ(parse_cloner_kind("wz"), ClonerKind::kWoottersZurek);
    EXPECT_EQ(to_string(ClonerKind::kSymmetric), "sym");
    EXPECT_THROW(parse_cloner_kind("nope"), DomainError);
    ClonerSpec bad = ClonerSpec::symmetric();
    bad.favored = Favored::kPhi;
    EXPECT_THROW(bad.validate(), DomainError);
}

TEST(PlaneFrame, Orthonormal) {
    const TwoStateSet set = TwoStateSet::canonical(0.4);
    const auto [e1, e2] = plane_frame(set);
    EXPECT_NEAR(std::abs(inner(e1, e2)), 0.0, 1e-15);
    const StateVector pp = tensor(set.psi(), set.psi());
    EXPECT_NEAR(inner(e1, pp).real(), 0.16, 1e-15);
    EXPECT_NEAR(inner(e2, pp).real(), std::sqrt(1.0 - 0.16 * 0.16), 1e-15);
    EXPECT_THROW(plane_frame(TwoStateSet::canonical(1.0)), DomainError);
}

TEST(Asymmetric, MatchesClosedForms) {
    for (double z : z_grid()) {
        const ClonerResult r = build_asymmetric(TwoStateSet::canonical(z));
        expect_realizable(r);
        EXPECT_NEAR(r.a_phi.x, 0.0, 1e-12);
        ASSERT_TRUE(r.re.has_value());
        EXPECT_NEAR(*r.re, asym_re(z), 1e-9) << z;
        EXPECT_NEAR(r.ae, asym_ae(z), 1e-9) << z;
    }
}

TEST(Asymmetric, FavoringPsiMirrors) {
    for (double z : {0.2, 0.6, 0.9}) {
        const TwoStateSet set = TwoStateSet::canonical(z);
        const ClonerResult a = build_asymmetric(set, Favored::kPhi);
        const ClonerResult b = build_asymmetric(set, Favored::kPsi);
        expect_realizable(b);
        EXPECT_NEAR(b.a_psi.x, 0.0, 1e-12);
        EXPECT_NEAR(b.a_phi.x, a.a_psi.x, 1e-12);
        EXPECT_NEAR(*b.re, *a.re, 1e-12);
    }
}

TEST(Symmetric, MatchesClosedForms) {
    for (double z : z_grid()) {
        const ClonerResult r = build_symmetric(TwoStateSet::canonical(z));
        expect_realizable(r);
        EXPECT_NEAR(r.a_phi.x, r.a_psi.x, 1e-12);
        EXPECT_NEAR(r.ae, sym_ae(z), 1e-12) << z;
        ASSERT_TRUE(r.re.has_value());
        EXPECT_NEAR(*r.re, closed_form_re_s(z), 1e-9) << z;
        EXPECT_GE(*r.re, asym_re(z) - 1e-12);
    }
}

TEST(Symmetric, ClosedFormValue) {
    const double z = 0.5;
    const double inner_term = (1 + z + z * z) / (1 + z + z * z + z * z * z) - 1 / std::sqrt(1 + z * z);
    EXPECT_NEAR(closed_form_re_s(z), std::sqrt(2.0) * std::sqrt(inner_term), 1e-15);
    EXPECT_NEAR(closed_form_re_s(z), 0.278949, 1e-6);
    EXPECT_EQ(closed_form_re_s(0.0), 0.0);
    EXPECT_THROW(closed_form_re_s(1.0), DomainError);
}

TEST(WoottersZurek, ErrorOnPsi) {
    for (double z : z_grid()) {
        const ClonerResult r = build_wootters_zurek(TwoStateSet::canonical(z));
        expect_realizable(r);
        EXPECT_EQ(r.dims.danc, 2u);
        EXPECT_NEAR(r.a_phi.x, 0.0, 1e-12);
        EXPECT_NEAR(r.a_psi.x, std::sqrt(3.0) * z * std::sqrt(1.0 - z * z), 1e-10) << z;
        EXPECT_NEAR(wootters_zurek_error(z), r.a_psi.x, 1e-10);
    }
    EXPECT_NEAR(closed_form_re_wz(1.0), std::sqrt(1.5), 1e-15);
    EXPECT_NEAR(closed_form_re_wz(0.5), std::sqrt(3.0) * 0.5 / std::sqrt(1.25), 1e-15);
}

TEST(OptimalCloners, KeyInequalityIsTight) {
    for (double z : z_grid()) {
        const TwoStateSet set = TwoStateSet::canonical(z);
        for (const ClonerResult& r : {build_symmetric(set), build_asymmetric(set)}) {
            const auto [ideal_bound, error_bound] = inequality_chain(r);
            EXPECT_TRUE(ideal_bound.holds);
            EXPECT_LT(std::abs(error_bound.slack), 1e-10) << z;
        }
    }
}

TEST(HigherDimension, SameNumbers) {
    const ClonerResult r2 = build_asymmetric(TwoStateSet::canonical(0.3, 2));
    const ClonerResult r4 = build_asymmetric(TwoStateSet::canonical(0.3, 4));
    EXPECT_NEAR(*r2.re, *r4.re, 1e-13);
    EXPECT_EQ(r4.a_phi.v.dim(), 16u);
}

TEST(Materialize, MapsInputsToOutputs) {
    for (double z : {0.1, 0.5, 0.9}) {
        const TwoStateSet set = TwoStateSet::canonical(z, 3);
        for (const ClonerResult& r :
             {build_symmetric(set), build_asymmetric(set), build_wootters_zurek(set)}) {
            const UnitaryMatrix u = materialize_unitary(r);
            EXPECT_LT(u.unitarity_defect(), 1e-10);
            const std::size_t d = r.dims.d1;
            const StateVector blank = StateVector::basis(d, 0);
            const StateVector anc = StateVector::basis(r.dims.danc, 0);
            EXPECT_LT(max_abs_diff(u.apply(tensor(set.phi(), blank, anc)), r.a_phi.v), 1e-9);
            EXPECT_LT(max_abs_diff(u.apply(tensor(set.psi(), blank, anc)), r.a_psi.v), 1e-9);
        }
    }
}

TEST(Build, DispatchesOnSpec) {
    const TwoStateSet set = TwoStateSet::canonical(0.5);
    EXPECT_NEAR(*build(ClonerSpec::symmetric(), set).re, closed_form_re_s(0.5), 1e-12);
    EXPECT_NEAR(*build(ClonerSpec::asymmetric(), set).re, asym_re(0.5), 1e-12);
    EXPECT_THROW(build_symmetric(TwoStateSet::canonical(1.0)), DomainError);
}

}  // namespace
}  // namespace clonebound
