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

#include "clonebound/random.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace clonebound {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> dist(lo, hi);
    return dist(engine_);
}

StateVector gaussian_vector(std::size_t dim, Rng& rng) {
    std::vector<Complex> amps(dim);
    for (auto& a : amps) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        a = Complex(re, im);
    }
    return StateVector(std::move(amps));
}

StateVector random_unit_vector(std::size_t dim, Rng& rng) {
    return gaussian_vector(dim, rng).normalized();
}

StateVector random_unit_vector_in(const std::vector<StateVector>& frame, Rng& rng) {
    if (frame.empty()) {
        throw DomainError("random_unit_vector_in: empty frame");
    }
    const StateVector coords = random_unit_vector(frame.size(), rng);
    StateVector out = StateVector::zero(frame.front().dim());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        out += coords[i] * frame[i];
    }
    return out;
}

Projector random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
    if (rank > dim) {
        throw DomainError("random_projector: rank exceeds dimension");
    }
    std::vector<StateVector> spanning;
    spanning.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        spanning.push_back(gaussian_vector(dim, rng));
    }
    return Projector::span_of(spanning, dim);
}

UnitaryMatrix random_unitary(std::size_t dim, Rng& rng) {
    std::vector<StateVector> columns;
    for (std::size_t i = 0; i < dim; ++i) {
        columns.push_back(gaussian_vector(dim, rng));
    }
    const Projector frame = Projector::span_of(columns, dim);
    return UnitaryMatrix::from_columns(complete_basis(frame.basis(), dim));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace clonebound
