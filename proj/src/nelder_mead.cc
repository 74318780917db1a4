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

#include "clonebound/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "clonebound/statespace.h"

namespace clonebound {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
    std::vector<double> x;
    double f;
};

class Simplex {
   public:
    Simplex(const Objective& f, std::size_t& evaluations)
        : objective_(f), evaluations_(evaluations) {}

    double eval(const std::vector<double>& x) {
        ++evaluations_;
        const double v = objective_(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    }

    // One run from `center`; returns the best vertex reached.
    Vertex run(const Vertex& center, double step, const NelderMeadOptions& opts,
               std::size_t& iterations) {
        const std::size_t n = center.x.size();
        std::vector<Vertex> simplex{center};
        for (std::size_t i = 0; i < n; ++i) {
            Vertex v = center;
            v.x[i] += step;
            v.f = eval(v.x);
            simplex.push_back(std::move(v));
        }
        auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

        for (std::size_t it = 0; it < opts.max_iters; ++it) {
            std::stable_sort(simplex.begin(), simplex.end(), by_value);
            ++iterations;
            const double spread = simplex.back().f - simplex.front().f;
            if (std::isfinite(spread) && spread <= opts.f_tol) {
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t c = 0; c < n; ++c) {
                    centroid[c] += simplex[v].x[c];
                }
            }
            for (auto& c : centroid) {
                c /= static_cast<double>(n);
            }
            Vertex& worst = simplex.back();
            auto toward = [&](double coeff) {
                Vertex out{std::vector<double>(n), 0.0};
                for (std::size_t c = 0; c < n; ++c) {
                    out.x[c] = centroid[c] + coeff * (centroid[c] - worst.x[c]);
                }
                out.f = eval(out.x);
                return out;
            };

            Vertex reflected = toward(kReflect);
            if (reflected.f < simplex.front().f) {
                Vertex expanded = toward(kExpand);
                worst = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.f < simplex[n - 1].f) {
                worst = std::move(reflected);
                continue;
            }
            const bool outside = reflected.f < worst.f;
            Vertex contracted = toward(outside ? kContract : -kContract);
            if (contracted.f < (outside ? reflected.f : worst.f)) {
                worst = std::move(contracted);
                continue;
            }
            for (std::size_t v = 1; v <= n; ++v) {
                for (std::size_t c = 0; c < n; ++c) {
                    simplex[v].x[c] =
                        simplex[0].x[c] + kShrink * (simplex[v].x[c] - simplex[0].x[c]);
                }
                simplex[v].f = eval(simplex[v].x);
            }
        }
        return *std::min_element(simplex.begin(), simplex.end(), by_value);
    }

   private:
    const Objective& objective_;
    std::size_t& evaluations_;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& opts) {
    if (start.empty()) {
        throw DomainError("nelder_mead: empty starting point");
    }
    NelderMeadResult result;
    Simplex simplex(f, result.evaluations);
    Vertex best{std::move(start), 0.0};
    best.f = simplex.eval(best.x);

    double step = opts.initial_step;
    for (std::size_t round = 0; round <= opts.max_restarts; ++round) {
        Vertex candidate = simplex.run(best, step, opts, result.iterations);
        const bool improved = candidate.f < best.f;
        const double gain = best.f - candidate.f;
        if (improved) {
            best = std::move(candidate);
        }
        if (round > 0 && !(gain > opts.f_tol)) {
            break;
        }
        step *= 0.5;
    }
    result.x = std::move(best.x);
    result.value = best.f;
    return result;
}

}  // namespace clonebound
