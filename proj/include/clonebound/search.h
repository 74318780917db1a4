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

#ifndef CLONEBOUND_SEARCH_H
#define CLONEBOUND_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clonebound/cloning.h"
#include "clonebound/statespace.h"

namespace clonebound {

struct SearchConfig {
    double z = 0.5;
    /// Dimension of the search subspace; it always contains the plane
    /// span{phi (x) phi, psi (x) psi}.
    std::size_t subspace_dim = 4;
    std::size_t restarts = 20;
    std::size_t max_iters = 400;
    double objective_tol = 1e-15;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class SearchObjective { kAbsolute, kRelative };

std::string to_string(SearchObjective objective);

struct SearchOutcome {
    double best_ae = 0.0;
    double best_re = 0.0;
    double bound_ae = 0.0;
    double bound_re = 0.0;
    /// Largest best - bound over the objectives that were minimized.
    double attained_within = 0.0;
    std::vector<double> best_params;
    std::size_t trials = 0;
    std::size_t evaluations = 0;
};

/// Orthonormal frame in the copy space C^d (x) C^d: plane frame first, then
/// subspace_dim - 2 further directions.
class SearchSpace {
   public:
    SearchSpace(const TwoStateSet& set, std::size_t subspace_dim);

    const TwoStateSet& set() const { return set_; }
    std::size_t dim() const { return frame_.size(); }
    const std::vector<StateVector>& frame() const { return frame_; }
    FactorDims dims() const { return {set_.dim(), set_.dim(), 1}; }

    /// Coordinates in the frame -> vector in the copy space.
    StateVector embed(const StateVector& coords) const;
    /// Full pipeline on a pair of frame coordinates.
    ClonerResult evaluate(const StateVector& v_phi, const StateVector& v_psi) const;

   private:
    TwoStateSet set_;
    std::vector<StateVector> frame_;
};

/// Number of real parameters parameterize_pair expects: 4 m - 4.
std::size_t pair_param_count(std::size_t subspace_dim);

/// Maps 4m - 4 reals to frame coordinates of a realizable output pair:
/// V(phi) from (1, p...) normalized, W from (w0, 1, w2, ...) made orthogonal
/// to V(phi) and normalized, V(psi) = z V(phi) + sqrt(1 - z^2) W. The fixed
/// entries remove the phase and scale gauges. Throws DomainError when W
/// collapses onto V(phi).
std::pair<StateVector, StateVector> parameterize_pair(std::span<const double> params, double z,
                                                      std::size_t subspace_dim);

/// Number of real parameters parameterize_symmetric_pair expects.
std::size_t symmetric_param_count(std::size_t subspace_dim);

/// Mirror-symmetric realizable pairs: with R the reflection exchanging
/// phi (x) phi and psi (x) psi, V(phi) = a + b and V(psi) = R V(phi) = a - b
/// where a (norm^2 (1+z)/2) and b (norm^2 (1-z)/2) lie in the +1 and -1
/// eigenspaces of R. Both outputs then carry equal errors.
std::pair<StateVector, StateVector> parameterize_symmetric_pair(std::span<const double> params,
                                                                const SearchSpace& space);

/// Simplex minimization of AE or RE over realizable pairs, from `restarts`
/// random starts plus a warm start at the asymmetric cloner.
SearchOutcome minimize_objective(SearchObjective objective, const SearchConfig& cfg,
                                 const TwoStateSet& set);

/// Minimizes RE over the mirror-symmetric family only.
SearchOutcome minimize_symmetric_re(const SearchConfig& cfg, const TwoStateSet& set);

struct RandomSweepStats {
    std::size_t samples = 0;
    double min_ae = 0.0, mean_ae = 0.0, max_ae = 0.0;
    double min_re = 0.0, mean_re = 0.0, max_re = 0.0;
    std::size_t ae_violations = 0;
    std::size_t re_violations = 0;
    /// Samples whose RE was undefined (degenerate or identical ideals).
    std::size_t undefined_re = 0;
    std::size_t chain_checked = 0;
    std::size_t chain_violations = 0;
    double chain_min_slack = 0.0;
};

/// Haar-random realizable pairs in the search subspace. Floors are
/// ae_lower_bound(z) - 1e-9 and re_lower_bound(z) - 1e-9; the inequality
/// chain is checked on every sample with defined ideals.
RandomSweepStats random_cloner_sweep(const SearchConfig& cfg, const TwoStateSet& set,
                                     std::size_t n);

/// One z of a tightness verification.
struct VerificationPoint {
    double z = 0.0;
    SearchOutcome outcome;
    RandomSweepStats sweep;
    /// Floor violations in the optimizer runs and the random sweep.
    std::size_t violations = 0;
    bool attained = false;
};

inline constexpr double kFloorTol = 1e-9;
inline constexpr double kAttainmentTol = 1e-5;

VerificationPoint verify_point(const SearchConfig& cfg, std::size_t sweep_samples);

}  // namespace clonebound

#endif  // CLONEBOUND_SEARCH_H
