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

#ifndef CLONEBOUND_CLONING_H
#define CLONEBOUND_CLONING_H

#include <cstddef>
#include <optional>
#include <utility>

#include "clonebound/geometry.h"
#include "clonebound/statespace.h"

namespace clonebound {

/// The two states a state-dependent cloner is built for. psi is stored with
/// its global phase chosen so that <phi|psi> is real and nonnegative.
class TwoStateSet {
   public:
    TwoStateSet(StateVector phi, StateVector psi);
    /// phi = e1, psi = z e1 + sqrt(1 - z^2) e2 in C^dim.
    static TwoStateSet canonical(double z, std::size_t dim = 2);

    const StateVector& phi() const { return phi_; }
    const StateVector& psi() const { return psi_; }
    std::size_t dim() const { return phi_.dim(); }
    /// |<phi|psi>|
    double z() const { return z_; }
    /// Angle between phi and psi.
    Angle delta() const { return delta_; }
    /// Angle between phi (x) phi and psi (x) psi, arccos z^2.
    Angle tensor_delta() const;

   private:
    StateVector phi_;
    StateVector psi_;
    double z_;
    Angle delta_;
};

/// Factor dimensions of original (x) copy (x) ancilla.
struct FactorDims {
    std::size_t d1 = 2;
    std::size_t d2 = 2;
    std::size_t danc = 1;

    std::size_t total() const { return d1 * d2 * danc; }
    void validate() const;
};

/// Decomposition of one cloner output V = s (x) s (x) q + perp.
struct CloneAnalysis {
    StateVector v;
    StateVector q;
    double perp_norm = 0.0;
    /// Error size X, equal to perp_norm.
    double x = 0.0;
    /// Angle between V and its closest product s (x) s (x) k.
    Angle delta_s;
    /// Unset when q vanishes: every ancilla direction is then equally far.
    std::optional<StateVector> k;
    std::optional<StateVector> ideal;

    bool degenerate() const { return !ideal.has_value(); }
};

struct ClonerResult {
    TwoStateSet set;
    FactorDims dims;
    CloneAnalysis a_phi;
    CloneAnalysis a_psi;
    double ae = 0.0;
    /// Unset when either ideal is degenerate or the ideals coincide.
    std::optional<double> re;
    /// Unset when either ideal is degenerate.
    std::optional<Angle> ideal_angle;
};

CloneAnalysis analyze_output(const StateVector& v, const StateVector& s, const FactorDims& dims);

/// Analyzes both outputs and fills AE, RE and the ideal angle.
ClonerResult make_result(const TwoStateSet& set, const FactorDims& dims, const StateVector& v_phi,
                         const StateVector& v_psi);

/// X(phi) + X(psi).
double absolute_error(const CloneAnalysis& r_phi, const CloneAnalysis& r_psi);

/// AE / sin d(Id(phi), Id(psi)); nullopt when that sine is below 1e-12.
/// Throws DomainError when either ideal output is degenerate.
std::optional<double> relative_error(const ClonerResult& r);

/// first:  d(Id(phi), Id(psi)) <= d(phi) + d(psi) + d(V(phi), V(psi))
/// second: tensor_delta - delta <= d(phi) + d(psi)
std::pair<InequalityReport, InequalityReport> inequality_chain(const ClonerResult& r,
                                                               double tol = kInequalityTol);

enum class Mode { kOriginal = 1, kCopy = 2 };

/// Lifts a single-particle projector to P (x) 1 (x) 1 or 1 (x) P (x) 1.
Projector lift_projector(const Projector& p, const FactorDims& dims, Mode mode);

/// |P(a for mode | V) - p(a | s)| <= X. Factor dimensions are read off
/// a.v and s (d1 = d2 = s.dim()).
InequalityReport measurement_deviation(const CloneAnalysis& a, const StateVector& s,
                                       const Projector& p, Mode mode,
                                       double tol = kInequalityTol);

}  // namespace clonebound

#endif  // CLONEBOUND_CLONING_H
