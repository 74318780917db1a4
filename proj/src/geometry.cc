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

#include "clonebound/geometry.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "clonebound/random.h"

namespace clonebound {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch");
    }
}

// Haar-random second state, or (half the time) a perturbation of the first so
// that small angles are exercised too.
StateVector partner_state(const StateVector& anchor, Rng& rng) {
    if (rng.uniform() < 0.5) {
        return random_unit_vector(anchor.dim(), rng);
    }
    const double scale = std::pow(10.0, -2.0 + 2.0 * rng.uniform());
    StateVector v = anchor;
    v += scale * gaussian_vector(anchor.dim(), rng);
    return v.normalized();
}

// Near-identity perturbation whose size spans several decades, with an
// occasional far-from-identity draw.
UnitaryMatrix perturbation(std::size_t dim, Rng& rng) {
    const double scale = std::pow(10.0, -4.0 + 4.5 * rng.uniform());
    std::vector<StateVector> columns;
    for (std::size_t i = 0; i < dim; ++i) {
        StateVector c = StateVector::basis(dim, i);
        c += scale * gaussian_vector(dim, rng);
        columns.push_back(std::move(c));
    }
    const Projector frame = Projector::span_of(columns, dim);
    return UnitaryMatrix::from_columns(complete_basis(frame.basis(), dim));
}

UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    const std::size_t n = a.dim();
    std::vector<Complex> entries(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += a(r, k) * b(k, c);
            }
            entries[r * n + c] = acc;
        }
    }
    return UnitaryMatrix(std::move(entries), n);
}

using Trial = std::function<InequalityReport(Rng&, std::size_t dim)>;

SweepSummary run_sweep(const std::string& name, const SweepOptions& opts,
                       std::uint64_t stream_tag, const Trial& trial) {
    if (opts.min_dim < 2 || opts.max_dim < opts.min_dim) {
        throw DomainError("sweep: invalid dimension range");
    }
    std::vector<double> slacks(opts.trials);
    std::vector<char> ok(opts.trials);
    const std::uint64_t master = derive_seed(opts.seed, stream_tag);
    parallel_for(opts.trials, [&](std::size_t i) {
        Rng rng(derive_seed(master, i));
        const std::size_t dim = rng.uniform_int(opts.min_dim, opts.max_dim);
        const InequalityReport r = trial(rng, dim);
        slacks[i] = r.slack;
        ok[i] = r.holds;
    });
    SweepSummary summary{name, opts.trials, std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < opts.trials; ++i) {
        summary.min_slack = std::min(summary.min_slack, slacks[i]);
        summary.violations += ok[i] ? 0 : 1;
    }
    return summary;
}

}  // namespace

InequalityReport InequalityReport::make(double lhs, double rhs, double tol) {
    InequalityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tol = tol;
    r.holds = r.slack >= -tol;
    return r;
}

InequalityReport lemma1_check(const StateVector& phi, const StateVector& ups,
                              const StateVector& psi, double tol) {
    require_same_dim(phi.dim(), ups.dim(), "lemma1_check");
    require_same_dim(phi.dim(), psi.dim(), "lemma1_check");
    const double lhs = angle(phi, psi).cos();
    const double rhs = std::cos(angle(phi, ups).radians() - angle(ups, psi).radians());
    return InequalityReport::make(lhs, rhs, tol);
}

InequalityReport lemma2_defect(const StateVector& phi, const StateVector& ups,
                               const StateVector& psi, double tol) {
    require_same_dim(phi.dim(), ups.dim(), "lemma2_defect");
    require_same_dim(phi.dim(), psi.dim(), "lemma2_defect");
    const double lhs = angle(phi, ups).radians();
    const double rhs = angle(phi, psi).radians() + angle(ups, psi).radians();
    return InequalityReport::make(lhs, rhs, tol);
}

InequalityReport lemma3_check(const StateVector& theta, const StateVector& phi,
                              const StateVector& psi, double tol) {
    require_same_dim(theta.dim(), phi.dim(), "lemma3_check");
    require_same_dim(theta.dim(), psi.dim(), "lemma3_check");
    const double lhs = std::abs(std::norm(inner(theta, phi)) - std::norm(inner(theta, psi)));
    return InequalityReport::make(lhs, angle(phi, psi).sin(), tol);
}

InequalityReport lemma4_check(const Projector& p, const StateVector& phi, const StateVector& psi,
                              double tol) {
    require_same_dim(phi.dim(), psi.dim(), "lemma4_check");
    const double lhs = std::abs(measure_prob(p, phi) - measure_prob(p, psi));
    return InequalityReport::make(lhs, angle(phi, psi).sin(), tol);
}

double gate_bound(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 2.0)) {
        throw DomainError("gate_bound: epsilon must lie in [0, 2]");
    }
    return epsilon * std::sqrt(std::max(0.0, 1.0 - epsilon * epsilon / 4.0));
}

double operator_norm_distance(const UnitaryMatrix& u, const UnitaryMatrix& v) {
    require_same_dim(u.dim(), v.dim(), "operator_norm_distance");
    const auto n = static_cast<Eigen::Index>(u.dim());
    Eigen::MatrixXcd diff(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            diff(r, c) = u(r, c) - v(r, c);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(diff);
    return svd.singularValues()(0);
}

InequalityReport gate_approx_check(const UnitaryMatrix& u, const UnitaryMatrix& v,
                                   const StateVector& sigma, const Projector& p, double tol) {
    require_same_dim(u.dim(), sigma.dim(), "gate_approx_check");
    require_same_dim(u.dim(), p.ambient_dim(), "gate_approx_check");
    const double epsilon = operator_norm_distance(u, v);
    const double lhs = std::abs(measure_prob(p, u.apply(sigma).normalized()) -
                                measure_prob(p, v.apply(sigma).normalized()));
    const double rhs = epsilon <= std::numbers::sqrt2 ? gate_bound(epsilon) : 1.0;
    return InequalityReport::make(lhs, rhs, tol);
}

Triplet coplanar_triplet(std::size_t dim, double angle_first, double angle_second,
                         double angle_third) {
    if (dim < 2) {
        throw DomainError("coplanar_triplet: dimension must be at least 2");
    }
    auto at = [dim](double a) {
        StateVector v = StateVector::zero(dim);
        v[0] = std::cos(a);
        v[1] = std::sin(a);
        return v;
    };
    return {at(angle_first), at(angle_second), at(angle_third)};
}

SweepSummary sweep_lemma1(const SweepOptions& opts) {
    return run_sweep("lemma1", opts, 1, [&](Rng& rng, std::size_t dim) {
        const StateVector phi = random_unit_vector(dim, rng);
        const StateVector ups = partner_state(phi, rng);
        const StateVector psi = partner_state(phi, rng);
        return lemma1_check(phi, ups, psi, opts.tol);
    });
}

SweepSummary sweep_lemma2(const SweepOptions& opts) {
    return run_sweep("lemma2", opts, 2, [&](Rng& rng, std::size_t dim) {
        const StateVector phi = random_unit_vector(dim, rng);
        const StateVector ups = partner_state(phi, rng);
        const StateVector psi = partner_state(ups, rng);
        return lemma2_defect(phi, ups, psi, opts.tol);
    });
}

SweepSummary sweep_lemma3(const SweepOptions& opts) {
    return run_sweep("lemma3", opts, 3, [&](Rng& rng, std::size_t dim) {
        const StateVector theta = random_unit_vector(dim, rng);
        const StateVector phi = random_unit_vector(dim, rng);
        const StateVector psi = partner_state(phi, rng);
        return lemma3_check(theta, phi, psi, opts.tol);
    });
}

SweepSummary sweep_lemma4(const SweepOptions& opts) {
    return run_sweep("lemma4", opts, 4, [&](Rng& rng, std::size_t dim) {
        const Projector p = random_projector(dim, rng.uniform_int(1, dim - 1), rng);
        const StateVector phi = random_unit_vector(dim, rng);
        const StateVector psi = partner_state(phi, rng);
        return lemma4_check(p, phi, psi, opts.tol);
    });
}

SweepSummary sweep_gate_approx(const SweepOptions& opts) {
    return run_sweep("gate_approx", opts, 5, [&](Rng& rng, std::size_t dim) {
        const UnitaryMatrix u = random_unitary(dim, rng);
        const UnitaryMatrix v = multiply(u, perturbation(dim, rng));
        const StateVector sigma = random_unit_vector(dim, rng);
        const Projector p = random_projector(dim, rng.uniform_int(1, dim - 1), rng);
        return gate_approx_check(u, v, sigma, p, opts.tol);
    });
}

std::vector<SweepSummary> sweep_all(const SweepOptions& opts) {
    return {sweep_lemma1(opts), sweep_lemma2(opts), sweep_lemma3(opts), sweep_lemma4(opts),
            sweep_gate_approx(opts)};
}

namespace {

// Triples of polar angles (degrees) in [0, 90]. For lemma 1 the middle
// argument sits at an end of the arc; for lemma 2 the third sits between.
constexpr double kWitnessDegrees[][3] = {
    {20, 0, 50}, {5, 0, 85}, {45, 10, 80}, {30, 60, 35}, {0, 90, 40}, {15, 70, 20},
};

SweepSummary run_witness(const std::string& name, std::size_t dim, bool middle_between) {
    constexpr double kDeg = std::numbers::pi / 180.0;
    Rng rng(derive_seed(0xC0FFEE, dim));
    SweepSummary summary{name, 0, 0.0, 0};
    for (const auto& deg : kWitnessDegrees) {
        // Lemma 2 wants the third argument between the other two; reorder the
        // lemma 1 layout (middle at an end) into that shape.
        double a = deg[0], b = deg[1], c = deg[2];
        if (middle_between) {
            const double lo = std::min({a, b, c}), hi = std::max({a, b, c});
            a = lo;
            b = hi;
            c = a + b + c - lo - hi;
        }
        auto t = coplanar_triplet(dim, a * kDeg, b * kDeg, c * kDeg);
        // A random unitary keeps the triplet coplanar but not axis-aligned.
        const UnitaryMatrix u = random_unitary(dim, rng);
        t = {u.apply(t.first), u.apply(t.second), u.apply(t.third)};
        const InequalityReport r = middle_between ? lemma2_defect(t.first, t.second, t.third)
                                                  : lemma1_check(t.first, t.second, t.third);
        summary.trials += 1;
        summary.min_slack = std::max(summary.min_slack, std::abs(r.slack));
        summary.violations += r.holds ? 0 : 1;
    }
    return summary;
}

}  // namespace

SweepSummary witness_lemma1(std::size_t dim) { return run_witness("lemma1_witness", dim, false); }

SweepSummary witness_lemma2(std::size_t dim) { return run_witness("lemma2_witness", dim, true); }

SweepSummary lemma4_tightness(std::size_t trials, std::uint64_t seed) {
    constexpr std::size_t kSteps = 3600;
    SweepSummary summary{"lemma4_tightness", trials, std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        const StateVector phi = random_unit_vector(2, rng);
        StateVector psi = random_unit_vector(2, rng);
        const Complex overlap = inner(phi, psi);
        if (std::abs(overlap) > 0.0) {
            psi *= std::conj(overlap) / std::abs(overlap);
        }
        const StateVector e2 = gram_schmidt_residual(psi, phi);
        const double rhs = angle(phi, psi).sin();
        const double delta = angle(phi, psi).radians();
        double best = 0.0;
        auto probe = [&](double alpha) {
            const StateVector theta = std::cos(alpha) * phi + std::sin(alpha) * e2;
            best = std::max(best, lemma4_check(Projector({theta}, 2), phi, psi).lhs);
        };
        for (std::size_t k = 0; k < kSteps; ++k) {
            probe(std::numbers::pi * static_cast<double>(k) / kSteps);
        }
        // Bisector of the pair rotated by -pi/4 maximizes the difference.
        probe((delta - std::numbers::pi / 2) / 2);
        summary.min_slack = std::min(summary.min_slack, best - rhs);
        summary.violations += (best - rhs < -1e-6) ? 1 : 0;
    }
    return summary;
}

}  // namespace clonebound
