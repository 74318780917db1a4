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

#ifndef CLONEBOUND_GEOMETRY_H
#define CLONEBOUND_GEOMETRY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clonebound/statespace.h"

namespace clonebound {

/// Default tolerance for inequality checks.
inline constexpr double kInequalityTol = 1e-10;

/// lhs <= rhs, evaluated numerically.
struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = true;
    double tol = kInequalityTol;

    static InequalityReport make(double lhs, double rhs, double tol = kInequalityTol);
};

/// cos d(Phi,Psi) <= cos(d(Phi,Ups) - d(Ups,Psi)).
InequalityReport lemma1_check(const StateVector& phi, const StateVector& ups,
                              const StateVector& psi, double tol = kInequalityTol);

/// Spherical triangle inequality d(Phi,Ups) <= d(Phi,Psi) + d(Ups,Psi).
InequalityReport lemma2_defect(const StateVector& phi, const StateVector& ups,
                               const StateVector& psi, double tol = kInequalityTol);

/// | |<Theta|Phi>|^2 - |<Theta|Psi>|^2 | <= sin d(Phi,Psi).
InequalityReport lemma3_check(const StateVector& theta, const StateVector& phi,
                              const StateVector& psi, double tol = kInequalityTol);

/// |P(Phi) - P(Psi)| <= sin d(Phi,Psi) for an arbitrary projector.
InequalityReport lemma4_check(const Projector& p, const StateVector& phi, const StateVector& psi,
                              double tol = kInequalityTol);

/// Worst-case shift of any outcome probability when a unitary is replaced by
/// one within operator-norm distance epsilon: epsilon * sqrt(1 - epsilon^2/4).
/// Requires 0 <= epsilon <= 2.
double gate_bound(double epsilon);

/// Largest singular value of U - V.
double operator_norm_distance(const UnitaryMatrix& u, const UnitaryMatrix& v);

/// |P(R|U sigma) - P(R|V sigma)| against the gate bound at epsilon = ||U - V||.
/// The bound is only valid for epsilon <= sqrt(2); above that the rhs is the
/// trivial probability bound 1.
InequalityReport gate_approx_check(const UnitaryMatrix& u, const UnitaryMatrix& v,
                                   const StateVector& sigma, const Projector& p,
                                   double tol = kInequalityTol);

/// Three unit vectors in the real plane span{e1, e2} of C^dim, at the given
/// polar angles.
struct Triplet {
    StateVector first;
    StateVector second;
    StateVector third;
};
Triplet coplanar_triplet(std::size_t dim, double angle_first, double angle_second,
                         double angle_third);

struct SweepSummary {
    std::string name;
    std::size_t trials = 0;
    double min_slack = 0.0;
    std::size_t violations = 0;
};

struct SweepOptions {
    std::size_t trials = 100000;
    std::size_t min_dim = 2;
    std::size_t max_dim = 8;
    std::uint64_t seed = 0;
    double tol = kInequalityTol;
};

SweepSummary sweep_lemma1(const SweepOptions& opts);
SweepSummary sweep_lemma2(const SweepOptions& opts);
SweepSummary sweep_lemma3(const SweepOptions& opts);
SweepSummary sweep_lemma4(const SweepOptions& opts);
SweepSummary sweep_gate_approx(const SweepOptions& opts);

/// All five sweeps, in lemma order followed by the gate check.
std::vector<SweepSummary> sweep_all(const SweepOptions& opts);

/// Coplanar equality witnesses for Lemmas 1 and 2. min_slack holds the
/// largest |slack| seen (it should be ~0).
SweepSummary witness_lemma1(std::size_t dim);
SweepSummary witness_lemma2(std::size_t dim);

/// For random qubit pairs, scans rank-1 projectors in the plane of the pair
/// and reports, as min_slack, the smallest sup_P lhs - rhs (about 0 when the
/// sin bound is tight).
SweepSummary lemma4_tightness(std::size_t trials, std::uint64_t seed);

}  // namespace clonebound

#endif  // CLONEBOUND_GEOMETRY_H
