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

#ifndef CLONEBOUND_CLONERS_H
#define CLONEBOUND_CLONERS_H

#include <optional>
#include <string>
#include <utility>

#include "clonebound/cloning.h"
#include "clonebound/statespace.h"

namespace clonebound {

enum class ClonerKind { kSymmetric, kAsymmetric, kWoottersZurek };
enum class Favored { kPhi, kPsi };

struct ClonerSpec {
    ClonerKind kind = ClonerKind::kAsymmetric;
    /// Present iff kind is kAsymmetric.
    std::optional<Favored> favored;
    std::size_t ancilla_dim = 1;

    static ClonerSpec symmetric();
    static ClonerSpec asymmetric(Favored favored = Favored::kPhi);
    static ClonerSpec wootters_zurek();
    void validate() const;
};

std::string to_string(ClonerKind kind);
ClonerKind parse_cloner_kind(const std::string& text);

/// Orthonormal frame of span{phi (x) phi, psi (x) psi}: e1 = phi (x) phi and
/// e2 its Gram-Schmidt partner, so psi (x) psi = z^2 e1 + sqrt(1 - z^4) e2.
std::pair<StateVector, StateVector> plane_frame(const TwoStateSet& set);

/// Both errors equal to (tensor_delta - delta) / 2, outputs in the plane.
ClonerResult build_symmetric(const TwoStateSet& set);

/// Favored state copied exactly, the other absorbs tensor_delta - delta.
ClonerResult build_asymmetric(const TwoStateSet& set, Favored favored = Favored::kPhi);

/// Copies phi and omega (phi's orthogonal partner in span{phi, psi}) exactly,
/// recording which one in a two-level ancilla.
ClonerResult build_wootters_zurek(const TwoStateSet& set);

ClonerResult build(const ClonerSpec& spec, const TwoStateSet& set);

/// sqrt(2) [ (1+z+z^2)/(1+z+z^2+z^3) - 1/sqrt(1+z^2) ]^(1/2), for 0 <= z < 1.
double closed_form_re_s(double z);

/// sqrt(3) z / sqrt(1 + z^2), for 0 <= z <= 1.
double closed_form_re_wz(double z);

/// sqrt(3) z sqrt(1 - z^2): the error size on psi for the WZ machine.
double wootters_zurek_error(double z);

/// Completes {phi (x) 0 (x) m, psi (x) 0 (x) m} -> {V(phi), V(psi)} to a unitary on
/// the whole d1*d2*danc space. The blank and ancilla start in their first
/// basis state.
UnitaryMatrix materialize_unitary(const ClonerResult& r);

}  // namespace clonebound

#endif  // CLONEBOUND_CLONERS_H
