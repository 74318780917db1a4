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

#ifndef CLONEBOUND_RANDOM_H
#define CLONEBOUND_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "clonebound/statespace.h"

namespace clonebound {

/// Mixes a master seed and a stream index into an independent 64-bit seed
/// (splitmix64 finalizer). Sweeps seed trial i with derive_seed(master, i) so
/// results do not depend on how trials are scheduled across threads.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double gaussian() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    /// Uniform integer in [lo, hi].
    std::size_t uniform_int(std::size_t lo, std::size_t hi);

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Vector with i.i.d. complex standard Gaussian components (not normalized).
StateVector gaussian_vector(std::size_t dim, Rng& rng);

/// Haar-uniform unit vector.
StateVector random_unit_vector(std::size_t dim, Rng& rng);

/// Haar-uniform unit vector within the span of an orthonormal frame.
StateVector random_unit_vector_in(const std::vector<StateVector>& frame, Rng& rng);

/// Projector of the given rank onto a Haar-random subspace.
Projector random_projector(std::size_t dim, std::size_t rank, Rng& rng);

/// Unitary obtained by orthonormalizing the columns of a Gaussian matrix.
UnitaryMatrix random_unitary(std::size_t dim, Rng& rng);

/// Runs body(i) for i in [0, count) across the available hardware threads.
/// body must only write to per-index storage.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace clonebound

#endif  // CLONEBOUND_RANDOM_H
