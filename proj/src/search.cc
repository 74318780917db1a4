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

#include <algorithm>
#include <cmath>
#include <limits>

#include "clonebound/bounds.h"
#include "clonebound/cloners.h"
#include "clonebound/nelder_mead.h"
#include "clonebound/random.h"

namespace clonebound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kSweepStream = 0x5157;
constexpr std::uint64_t kSymmetricStream = 0x5359;

StateVector complex_coords(std::span<const double> reals, std::size_t count) {
    StateVector out = StateVector::zero(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = Complex(reals[2 * i], reals[2 * i + 1]);
    }
    return out;
}

double objective_value(SearchObjective objective, const ClonerResult& r) {
    if (objective == SearchObjective::kAbsolute) {
        return r.ae;
    }
    return r.re.value_or(kInf);
}

// Splits the extra frame directions between the +1 and -1 eigenspaces of the
// mirror: even frame indices go to +1, odd ones to -1.
std::pair<std::vector<StateVector>, std::vector<StateVector>> mirror_eigenbases(
    const SearchSpace& space) {
    const std::size_t m = space.dim();
    const double z2 = space.set().z() * space.set().z();
    const double s = std::sqrt(1.0 - z2 * z2);
    StateVector plus = StateVector::zero(m);
    plus[0] = 1.0 + z2;
    plus[1] = s;
    StateVector minus = StateVector::zero(m);
    minus[0] = 1.0 - z2;
    minus[1] = -s;
    std::vector<StateVector> pos{plus.normalized()};
    std::vector<StateVector> neg{minus.normalized()};
    for (std::size_t i = 2; i < m; ++i) {
        (i % 2 == 0 ? pos : neg).push_back(StateVector::basis(m, i));
    }
    return {std::move(pos), std::move(neg)};
}

StateVector combine(const std::vector<StateVector>& basis, const StateVector& coords) {
    StateVector out = StateVector::zero(basis.front().dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out += coords[i] * basis[i];
    }
    return out;
}

using PairMap = std::function<std::pair<StateVector, StateVector>(std::span<const double>)>;

SearchOutcome run_starts(SearchObjective objective, const SearchConfig& cfg,
                         const SearchSpace& space, const PairMap& to_pair,
                         std::vector<double> warm_start, std::uint64_t stream, double bound_ae,
                         double bound_re) {
    const std::size_t n_params = warm_start.size();
    const Objective f = [&](std::span<const double> params) {
        try {
            const auto pair = to_pair(params);
            return objective_value(objective, space.evaluate(pair.first, pair.second));
        } catch (const DomainError&) {
            return kInf;
        }
    };

    NelderMeadOptions opts;
    opts.max_iters = cfg.max_iters;
    opts.f_tol = cfg.objective_tol;

    const std::size_t starts = cfg.restarts + 1;
    std::vector<NelderMeadResult> results(starts);
    const std::uint64_t master = derive_seed(cfg.seed, stream);
    parallel_for(starts, [&](std::size_t i) {
        std::vector<double> x0 = warm_start;
        if (i > 0) {
            Rng rng(derive_seed(master, i));
            for (std::size_t k = 0; k < n_params; ++k) {
                x0[k] = rng.gaussian();
            }
        }
        results[i] = nelder_mead(f, std::move(x0), opts);
    });

    std::size_t best = 0;
    std::size_t evaluations = 0;
    for (std::size_t i = 0; i < starts; ++i) {
        evaluations += results[i].evaluations;
        if (results[i].value < results[best].value) {
            best = i;
        }
    }
    const auto pair = to_pair(results[best].x);
    const ClonerResult r = space.evaluate(pair.first, pair.second);

    SearchOutcome out;
    out.best_ae = r.ae;
    out.best_re = r.re.value_or(kInf);
    out.bound_ae = bound_ae;
    out.bound_re = bound_re;
    out.attained_within = objective == SearchObjective::kAbsolute ? out.best_ae - bound_ae
                                                                  : out.best_re - bound_re;
    out.best_params = results[best].x;
    out.trials = starts;
    out.evaluations = evaluations;
    return out;
}

void require_open_interval(double z, const char* what) {
    if (!(z > 0.0 && z < 1.0)) {
        throw DomainError(std::string(what) + ": z must lie in (0, 1)");
    }
}

}  // namespace

void SearchConfig::validate() const {
    if (!(z >= 0.0 && z < 1.0)) {
        throw DomainError("SearchConfig: z must lie in [0, 1)");
    }
    if (subspace_dim < 2) {
        throw DomainError("SearchConfig: subspace_dim must be at least 2");
    }
    if (restarts < 1) {
        throw DomainError("SearchConfig: restarts must be at least 1");
    }
}

std::string to_string(SearchObjective objective) {
    return objective == SearchObjective::kAbsolute ? "AE" : "RE";
}

SearchSpace::SearchSpace(const TwoStateSet& set, std::size_t subspace_dim) : set_(set) {
    const std::size_t ambient = set.dim() * set.dim();
    if (subspace_dim < 2 || subspace_dim > ambient) {
        throw DomainError("SearchSpace: subspace_dim must lie in [2, d^2]");
    }
    auto plane = plane_frame(set);
    frame_ = complete_basis({plane.first, plane.second}, ambient);
    frame_.erase(frame_.begin() + static_cast<std::ptrdiff_t>(subspace_dim), frame_.end());
}

StateVector SearchSpace::embed(const StateVector& coords) const {
    if (coords.dim() != frame_.size()) {
        throw DimensionError("SearchSpace::embed: coordinate count mismatch");
    }
    return combine(frame_, coords);
}

ClonerResult SearchSpace::evaluate(const StateVector& v_phi, const StateVector& v_psi) const {
    return make_result(set_, dims(), embed(v_phi), embed(v_psi));
}

std::size_t pair_param_count(std::size_t subspace_dim) { return 4 * subspace_dim - 4; }

std::pair<StateVector, StateVector> parameterize_pair(std::span<const double> params, double z,
                                                      std::size_t subspace_dim) {
    const std::size_t m = subspace_dim;
    if (m < 2 || params.size() != pair_param_count(m)) {
        throw DimensionError("parameterize_pair: expected 4 m - 4 parameters");
    }
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("parameterize_pair: z must lie in [0, 1]");
    }
    const std::size_t half = 2 * m - 2;
    const StateVector free_v = complex_coords(params.first(half), m - 1);
    const StateVector free_w = complex_coords(params.subspan(half), m - 1);

    StateVector v = StateVector::zero(m);
    v[0] = 1.0;
    for (std::size_t i = 1; i < m; ++i) {
        v[i] = free_v[i - 1];
    }
    v = v.normalized();

    StateVector w = StateVector::zero(m);
    w[0] = free_w[0];
    w[1] = 1.0;
    for (std::size_t i = 2; i < m; ++i) {
        w[i] = free_w[i - 1];
    }
    const double raw = w.norm();
    w -= inner(v, w) * v;
    if (w.norm() <= 1e-12 * raw) {
        throw DomainError("parameterize_pair: degenerate parameters");
    }
    w = w.normalized();

    StateVector v_psi = z * v + std::sqrt(1.0 - z * z) * w;
    return {std::move(v), std::move(v_psi)};
}

std::size_t symmetric_param_count(std::size_t subspace_dim) { return 2 * subspace_dim - 2; }

std::pair<StateVector, StateVector> parameterize_symmetric_pair(std::span<const double> params,
                                                                const SearchSpace& space) {
    const std::size_t m = space.dim();
    if (params.size() != symmetric_param_count(m)) {
        throw DimensionError("parameterize_symmetric_pair: expected 2 m - 2 parameters");
    }
    const auto [pos, neg] = mirror_eigenbases(space);
    const std::size_t pos_free = pos.size() - 1;

    StateVector a = StateVector::zero(pos.size());
    a[0] = 1.0;
    const StateVector a_free = complex_coords(params.first(2 * pos_free), pos_free);
    for (std::size_t i = 0; i < pos_free; ++i) {
        a[i + 1] = a_free[i];
    }
    const StateVector b = complex_coords(params.subspan(2 * pos_free), neg.size());
    if (b.norm() == 0.0) {
        throw DomainError("parameterize_symmetric_pair: degenerate parameters");
    }
    const double z = space.set().z();
    const StateVector plus = std::sqrt((1.0 + z) / 2.0) * combine(pos, a.normalized());
    const StateVector minus = std::sqrt((1.0 - z) / 2.0) * combine(neg, b.normalized());
    return {plus + minus, plus - minus};
}

SearchOutcome minimize_objective(SearchObjective objective, const SearchConfig& cfg,
                                 const TwoStateSet& set) {
    cfg.validate();
    require_open_interval(set.z(), "minimize_objective");
    const SearchSpace space(set, cfg.subspace_dim);
    const double z = set.z();
    const std::size_t m = cfg.subspace_dim;
    const PairMap to_pair = [z, m](std::span<const double> p) {
        return parameterize_pair(p, z, m);
    };
    // All-zero parameters give V(phi) = phi (x) phi and W along the plane
    // partner: the asymmetric cloner favoring phi.
    std::vector<double> warm(pair_param_count(m), 0.0);
    return run_starts(objective, cfg, space, to_pair, std::move(warm),
                      objective == SearchObjective::kAbsolute ? 1 : 2, ae_lower_bound(z),
                      re_lower_bound(z));
}

SearchOutcome minimize_symmetric_re(const SearchConfig& cfg, const TwoStateSet& set) {
    cfg.validate();
    require_open_interval(set.z(), "minimize_symmetric_re");
    const SearchSpace space(set, cfg.subspace_dim);
    const PairMap to_pair = [&space](std::span<const double> p) {
        return parameterize_symmetric_pair(p, space);
    };
    const auto [pos, neg] = mirror_eigenbases(space);
    std::vector<double> warm(symmetric_param_count(cfg.subspace_dim), 0.0);
    warm[2 * (pos.size() - 1)] = 1.0;
    return run_starts(SearchObjective::kRelative, cfg, space, to_pair, std::move(warm),
                      kSymmetricStream, ae_lower_bound(set.z()), closed_form_re_s(set.z()));
}

RandomSweepStats random_cloner_sweep(const SearchConfig& cfg, const TwoStateSet& set,
                                     std::size_t n) {
    cfg.validate();
    if (n < 1) {
        throw DomainError("random_cloner_sweep: need at least one sample");
    }
    const SearchSpace space(set, cfg.subspace_dim);
    const double z = set.z();
    const std::size_t m = cfg.subspace_dim;

    struct Sample {
        double ae = 0.0;
        double re = kInf;
        bool chain = false;
        double chain_slack = kInf;
    };
    std::vector<Sample> samples(n);
    const std::uint64_t master = derive_seed(cfg.seed, kSweepStream);
    parallel_for(n, [&](std::size_t i) {
        Rng rng(derive_seed(master, i));
        const StateVector v = random_unit_vector(m, rng);
        StateVector w = gaussian_vector(m, rng);
        w -= inner(v, w) * v;
        w = w.normalized();
        const ClonerResult r = space.evaluate(v, z * v + std::sqrt(1.0 - z * z) * w);
        Sample& s = samples[i];
        s.ae = r.ae;
        s.re = r.re.value_or(kInf);
        if (!r.a_phi.degenerate() && !r.a_psi.degenerate()) {
            const auto [first, second] = inequality_chain(r);
            s.chain = true;
            s.chain_slack = std::min(first.slack, second.slack);
        }
    });

    const double floor_ae = ae_lower_bound(z) - kFloorTol;
    const double floor_re = re_lower_bound(z) - kFloorTol;
    RandomSweepStats stats;
    stats.samples = n;
    stats.min_ae = stats.min_re = stats.chain_min_slack = kInf;
    stats.max_ae = stats.max_re = -kInf;
    double sum_ae = 0.0, sum_re = 0.0;
    std::size_t defined_re = 0;
    for (const Sample& s : samples) {
        stats.min_ae = std::min(stats.min_ae, s.ae);
        stats.max_ae = std::max(stats.max_ae, s.ae);
        sum_ae += s.ae;
        stats.ae_violations += s.ae < floor_ae ? 1 : 0;
        if (std::isfinite(s.re)) {
            ++defined_re;
            stats.min_re = std::min(stats.min_re, s.re);
            stats.max_re = std::max(stats.max_re, s.re);
            sum_re += s.re;
            stats.re_violations += s.re < floor_re ? 1 : 0;
        } else {
            ++stats.undefined_re;
        }
        if (s.chain) {
            ++stats.chain_checked;
            stats.chain_min_slack = std::min(stats.chain_min_slack, s.chain_slack);
            stats.chain_violations += s.chain_slack < -kInequalityTol ? 1 : 0;
        }
    }
    stats.mean_ae = sum_ae / static_cast<double>(n);
    stats.mean_re = defined_re > 0 ? sum_re / static_cast<double>(defined_re) : kInf;
    return stats;
}

VerificationPoint verify_point(const SearchConfig& cfg, std::size_t sweep_samples) {
    cfg.validate();
    require_open_interval(cfg.z, "verify_point");
    std::size_t dim = 2;
    while (dim * dim < cfg.subspace_dim) {
        ++dim;
    }
    const TwoStateSet set = TwoStateSet::canonical(cfg.z, dim);

    const SearchOutcome ae = minimize_objective(SearchObjective::kAbsolute, cfg, set);
    const SearchOutcome re = minimize_objective(SearchObjective::kRelative, cfg, set);

    VerificationPoint point;
    point.z = cfg.z;
    point.outcome.bound_ae = ae.bound_ae;
    point.outcome.bound_re = re.bound_re;
    point.outcome.best_ae = ae.best_ae;
    point.outcome.best_re = re.best_re;
    point.outcome.attained_within = std::max(ae.attained_within, re.attained_within);
    point.outcome.best_params = re.best_params;
    point.outcome.trials = ae.trials + re.trials;
    point.outcome.evaluations = ae.evaluations + re.evaluations;

    point.sweep = random_cloner_sweep(cfg, set, sweep_samples);
    point.violations = point.sweep.ae_violations + point.sweep.re_violations;
    point.violations += ae.best_ae < ae.bound_ae - kFloorTol ? 1 : 0;
    point.violations += re.best_re < re.bound_re - kFloorTol ? 1 : 0;
    point.attained = point.outcome.attained_within < kAttainmentTol;
    return point;
}

}  // namespace clonebound
