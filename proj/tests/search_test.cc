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

#include "clonebound/search.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "clonebound/bounds.h"
#include "clonebound/cloners.h"
#include "clonebound/nelder_mead.h"
#include "clonebound/random.h"

namespace clonebound {
namespace {

std::vector<double> random_params(std::size_t n, Rng& rng) {
    std::vector<double> p(n);
    for (double& x : p) x = rng.gaussian();
    return p;
}

TEST(NelderMead, Quadratic) {
    const Objective f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
    };
    const NelderMeadResult r = nelder_mead(f, {0.0, 0.0});
    EXPECT_NEAR(r.x[0], 1.0, 1e-6);
    EXPECT_NEAR(r.x[1], -2.0, 1e-6);
    EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, Rosenbrock) {
    const Objective f = [](std::span<const double> x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    NelderMeadOptions opts;
    opts.max_iters = 2000;
    opts.max_restarts = 10;
    const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, opts);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(NelderMead, NanIsRejected) {
    const Objective f = [](std::span<const double> x) {
        return x[0] < 0.0 ? std::nan("") : (x[0] - 0.5) * (x[0] - 0.5);
    };
    const NelderMeadResult r = nelder_mead(f, {0.1});
    EXPECT_NEAR(r.x[0], 0.5, 1e-6);
}

TEST(NelderMead, ColdStartFindsRelativeErrorBound) {
    // No warm start: random simplex starts alone should reach the bound.
    const double z = 0.5;
    const TwoStateSet set = TwoStateSet::canonical(z, 2);
    const SearchSpace space(set, 4);
    const Objective f = [&](std::span<const double> p) {
        const auto [v, w] = parameterize_pair(p, z, 4);
        const ClonerResult r = space.evaluate(v, w);
        return r.re ? *r.re : std::nan("");
    };
    Rng rng(2024);
    double best = 1e9;
    for (int i = 0; i < 6; ++i) {
        best = std::min(best, nelder_mead(f, random_params(pair_param_count(4), rng)).value);
    }
    EXPECT_GE(best, re_lower_bound(z) - 1e-9);
    EXPECT_LT(best, re_lower_bound(z) + 1e-5);
}

TEST(Parameterization, Counts) {
    EXPECT_EQ(pair_param_count(2), 4u);
    EXPECT_EQ(pair_param_count(4), 12u);
    EXPECT_EQ(symmetric_param_count(4), 6u);
}

TEST(Parameterization, PairsAreRealizable) {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const double z = rng.uniform();
        const std::size_t m = rng.uniform_int(2, 6);
        const auto params = random_params(pair_param_count(m), rng);
        const auto [v, w] = parameterize_pair(params, z, m);
        EXPECT_TRUE(v.is_unit());
        EXPECT_TRUE(w.is_unit());
        EXPECT_LT(std::abs(inner(v, w) - Complex(z)), 1e-12);
    }
    EXPECT_THROW(parameterize_pair(std::vector<double>(3, 0.0), 0.5, 2), DimensionError);
}

TEST(Parameterization, ZeroIsAsymmetricCloner) {
    const double z = 0.4;
    const TwoStateSet set = TwoStateSet::canonical(z, 2);
    const SearchSpace space(set, 4);
    const auto [v, w] = parameterize_pair(std::vector<double>(pair_param_count(4), 0.0), z, 4);
    const ClonerResult r = space.evaluate(v, w);
    const ClonerResult ref = build_asymmetric(set);
    EXPECT_NEAR(r.ae, ref.ae, 1e-12);
    EXPECT_NEAR(*r.re, *ref.re, 1e-12);
}

TEST(Parameterization, MirrorSymmetricPairs) {
    Rng rng(4);
    const TwoStateSet set = TwoStateSet::canonical(0.6, 2);
    const SearchSpace space(set, 4);
    for (int i = 0; i < 100; ++i) {
        const auto params = random_params(symmetric_param_count(4), rng);
        const auto [v, w] = parameterize_symmetric_pair(params, space);
        EXPECT_LT(std::abs(inner(v, w) - Complex(0.6)), 1e-12);
        const ClonerResult r = space.evaluate(v, w);
        EXPECT_NEAR(r.a_phi.x, r.a_psi.x, 1e-12);
    }
}

TEST(SearchSpace, FrameIsOrthonormal) {
    const SearchSpace space(TwoStateSet::canonical(0.3, 3), 6);
    EXPECT_EQ(space.dim(), 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            EXPECT_NEAR(std::abs(inner(space.frame()[i], space.frame()[j])), i == j ? 1.0 : 0.0,
                        1e-12);
        }
    }
    EXPECT_THROW(SearchSpace(TwoStateSet::canonical(0.3, 2), 5), DomainError);
}

TEST(Minimize, ReachesBoundsAndStaysAbove) {
    for (double z : {0.3, 1.0 / std::sqrt(3.0), 0.9}) {
        SearchConfig cfg;
        cfg.z = z;
        cfg.restarts = 4;
        cfg.seed = 7;
        const TwoStateSet set = TwoStateSet::canonical(z, 2);
        const SearchOutcome ae = minimize_objective(SearchObjective::kAbsolute, cfg, set);
        const SearchOutcome re = minimize_objective(SearchObjective::kRelative, cfg, set);
        EXPECT_GE(ae.best_ae, ae_lower_bound(z) - 1e-9);
        EXPECT_LT(ae.best_ae, ae_lower_bound(z) + 1e-5);
        EXPECT_GE(re.best_re, re_lower_bound(z) - 1e-9);
        EXPECT_LT(re.best_re, re_lower_bound(z) + 1e-5);
    }
}

TEST(Minimize, SymmetricFamilyFloor) {
    for (double z : {0.3, 0.5, 0.8}) {
        SearchConfig cfg;
        cfg.z = z;
        cfg.restarts = 4;
        const SearchOutcome s = minimize_symmetric_re(cfg, TwoStateSet::canonical(z, 2));
        EXPECT_GE(s.best_re, closed_form_re_s(z) - 1e-9) << z;
        EXPECT_LT(s.best_re, closed_form_re_s(z) + 1e-5) << z;
    }
}

TEST(RandomSweep, NoFloorViolations) {
    for (double z : {0.1, 0.5, 0.9}) {
        SearchConfig cfg;
        cfg.z = z;
        cfg.seed = 3;
        const RandomSweepStats s = random_cloner_sweep(cfg, TwoStateSet::canonical(z, 2), 3000);
        EXPECT_EQ(s.samples, 3000u);
        EXPECT_EQ(s.ae_violations, 0u);
        EXPECT_EQ(s.re_violations, 0u);
        EXPECT_EQ(s.chain_violations, 0u);
        EXPECT_GE(s.min_ae, ae_lower_bound(z));
        EXPECT_LE(s.min_ae, s.mean_ae);
    }
}

TEST(VerifyPoint, DeterministicAndAttained) {
    SearchConfig cfg;
    cfg.z = 0.5;
    cfg.restarts = 3;
    cfg.seed = 11;
    const VerificationPoint a = verify_point(cfg, 500);
    const VerificationPoint b = verify_point(cfg, 500);
    EXPECT_TRUE(a.attained);
    EXPECT_EQ(a.violations, 0u);
    EXPECT_EQ(a.outcome.best_ae, b.outcome.best_ae);
    EXPECT_EQ(a.outcome.best_re, b.outcome.best_re);
    EXPECT_EQ(a.sweep.mean_re, b.sweep.mean_re);
}

TEST(SearchConfig, Validation) {
    SearchConfig cfg;
    cfg.z = 1.0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg.z = 0.5;
    cfg.subspace_dim = 1;
    EXPECT_THROW(cfg.validate(), DomainError);
}

}  // namespace
}  // namespace clonebound
