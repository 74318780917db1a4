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

#include "clonebound/cloners.h"

#include <algorithm>
#include <cmath>

namespace clonebound {

namespace {

void require_distinct(const TwoStateSet& set, const char* what) {
    if (set.z() >= 1.0 - kAlgebraicTol) {
        throw DomainError(std::string(what) +
                          ": identical states clone ideally; relative error undefined");
    }
}

StateVector in_plane(const std::pair<StateVector, StateVector>& frame, double radians) {
    return std::cos(radians) * frame.first + std::sin(radians) * frame.second;
}

}  // namespace

ClonerSpec ClonerSpec::symmetric() { return {ClonerKind::kSymmetric, std::nullopt, 1}; }

ClonerSpec ClonerSpec::asymmetric(Favored favored) {
    return {ClonerKind::kAsymmetric, favored, 1};
}

ClonerSpec ClonerSpec::wootters_zurek() { return {ClonerKind::kWoottersZurek, std::nullopt, 2}; }

void ClonerSpec::validate() const {
    if (favored.has_value() != (kind == ClonerKind::kAsymmetric)) {
        throw DomainError("ClonerSpec: a favored state is required for, and only for, asym");
    }
    const std::size_t expected = kind == ClonerKind::kWoottersZurek ? 2 : 1;
    if (ancilla_dim != expected) {
        throw DomainError("ClonerSpec: unexpected ancilla dimension for " + to_string(kind));
    }
}

std::string to_string(ClonerKind kind) {
    switch (kind) {
        case ClonerKind::kSymmetric:
            return "sym";
        case ClonerKind::kAsymmetric:
            return "asym";
        case ClonerKind::kWoottersZurek:
            return "wz";
    }
    return "unknown";
}

ClonerKind parse_cloner_kind(const std::string& text) {
    if (text == "sym") return ClonerKind::kSymmetric;
    if (text == "asym") return ClonerKind::kAsymmetric;
    if (text == "wz") return ClonerKind::kWoottersZurek;
    throw DomainError("unknown cloner kind '" + text + "' (expected sym, asym or wz)");
}

std::pair<StateVector, StateVector> plane_frame(const TwoStateSet& set) {
    require_distinct(set, "plane_frame");
    StateVector e1 = tensor(set.phi(), set.phi());
    StateVector e2 = gram_schmidt_residual(tensor(set.psi(), set.psi()), e1);
    return {std::move(e1), std::move(e2)};
}

ClonerResult build_symmetric(const TwoStateSet& set) {
    const auto frame = plane_frame(set);
    const double big = set.tensor_delta().radians();
    const double half_gap = (big - set.delta().radians()) / 2;
    // V(phi) leaves phi(x)phi toward psi(x)psi and V(psi) comes back the same
    // amount, so the pair spans exactly delta.
    const StateVector v_phi = in_plane(frame, half_gap);
    const StateVector v_psi = in_plane(frame, big - half_gap);
    return make_result(set, {set.dim(), set.dim(), 1}, v_phi, v_psi);
}

ClonerResult build_asymmetric(const TwoStateSet& set, Favored favored) {
    const auto frame = plane_frame(set);
    const double big = set.tensor_delta().radians();
    const double delta = set.delta().radians();
    const FactorDims dims{set.dim(), set.dim(), 1};
    if (favored == Favored::kPhi) {
        return make_result(set, dims, frame.first, in_plane(frame, delta));
    }
    return make_result(set, dims, in_plane(frame, big - delta), tensor(set.psi(), set.psi()));
}

ClonerResult build_wootters_zurek(const TwoStateSet& set) {
    require_distinct(set, "build_wootters_zurek");
    const double z = set.z();
    const StateVector omega = gram_schmidt_residual(set.psi(), set.phi());
    const StateVector f1 = StateVector::basis(2, 0);
    const StateVector f2 = StateVector::basis(2, 1);
    const StateVector v_phi = tensor(set.phi(), set.phi(), f1);
    const StateVector v_psi = z * v_phi + std::sqrt(1.0 - z * z) * tensor(omega, omega, f2);
    return make_result(set, {set.dim(), set.dim(), 2}, v_phi, v_psi);
}

ClonerResult build(const ClonerSpec& spec, const TwoStateSet& set) {
    spec.validate();
    switch (spec.kind) {
        case ClonerKind::kSymmetric:
            return build_symmetric(set);
        case ClonerKind::kAsymmetric:
            return build_asymmetric(set, *spec.favored);
        case ClonerKind::kWoottersZurek:
            return build_wootters_zurek(set);
    }
    throw DomainError("build: unknown cloner kind");
}

double closed_form_re_s(double z) {
    if (!(z >= 0.0 && z < 1.0)) {
        throw DomainError("closed_form_re_s: z must lie in [0, 1)");
    }
    const double z2 = z * z;
    const double ratio = (1.0 + z + z2) / (1.0 + z + z2 + z2 * z);
    return std::sqrt(2.0) * std::sqrt(std::max(0.0, ratio - 1.0 / std::sqrt(1.0 + z2)));
}

double closed_form_re_wz(double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("closed_form_re_wz: z must lie in [0, 1]");
    }
    return std::sqrt(3.0) * z / std::sqrt(1.0 + z * z);
}

double wootters_zurek_error(double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("wootters_zurek_error: z must lie in [0, 1]");
    }
    return std::sqrt(3.0) * z * std::sqrt(1.0 - z * z);
}

UnitaryMatrix materialize_unitary(const ClonerResult& r) {
    const FactorDims& dims = r.dims;
    const std::size_t n = dims.total();
    const StateVector blank = StateVector::basis(dims.d2, 0);
    const StateVector ready = StateVector::basis(dims.danc, 0);
    const StateVector in_phi = tensor(r.set.phi(), blank, ready);
    const StateVector in_psi = tensor(r.set.psi(), blank, ready);

    auto frame = [n](const StateVector& first, const StateVector& second) {
        std::vector<StateVector> basis{first, gram_schmidt_residual(second, first)};
        return complete_basis(std::move(basis), n);
    };
    const auto inputs = frame(in_phi, in_psi);
    const auto outputs = frame(r.a_phi.v, r.a_psi.v);

    std::vector<Complex> entries(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                entries[row * n + col] += outputs[k][row] * std::conj(inputs[k][col]);
            }
        }
    }
    return UnitaryMatrix(std::move(entries), n);
}

}  // namespace clonebound
