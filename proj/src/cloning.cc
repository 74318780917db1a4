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

#include "clonebound/cloning.h"

#include <algorithm>
#include <cmath>

namespace clonebound {

namespace {

// Below this norm q carries no usable direction for k.
constexpr double kDegenerateQ = 1e-12;
// Below this sine the two ideal outputs are treated as the same ray.
constexpr double kIdenticalIdeals = 1e-12;

StateVector canonical_phase(const StateVector& phi, const StateVector& psi) {
    const Complex overlap = inner(phi, psi);
    const double modulus = std::abs(overlap);
    if (modulus == 0.0) {
        return psi;
    }
    return (std::conj(overlap) / modulus) * psi;
}

}  // namespace

TwoStateSet::TwoStateSet(StateVector phi, StateVector psi)
    : phi_(std::move(phi)), psi_(std::move(psi)), z_(0.0) {
    if (phi_.dim() != psi_.dim()) {
        throw DimensionError("TwoStateSet: states have different dimensions");
    }
    if (phi_.dim() < 2) {
        throw DomainError("TwoStateSet: particle dimension must be at least 2");
    }
    if (!phi_.is_unit() || !psi_.is_unit()) {
        throw DomainError("TwoStateSet: states must be unit vectors");
    }
    psi_ = canonical_phase(phi_, psi_);
    z_ = std::min(1.0, std::abs(inner(phi_, psi_)));
    delta_ = angle(phi_, psi_);
}

TwoStateSet TwoStateSet::canonical(double z, std::size_t dim) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("TwoStateSet::canonical: overlap must lie in [0, 1]");
    }
    if (dim < 2) {
        throw DomainError("TwoStateSet::canonical: dimension must be at least 2");
    }
    StateVector phi = StateVector::basis(dim, 0);
    StateVector psi = StateVector::zero(dim);
    psi[0] = z;
    psi[1] = std::sqrt(1.0 - z * z);
    return TwoStateSet(std::move(phi), std::move(psi));
}

Angle TwoStateSet::tensor_delta() const {
    return angle(tensor(phi_, phi_), tensor(psi_, psi_));
}

void FactorDims::validate() const {
    if (d1 < 2 || danc < 1) {
        throw DomainError("FactorDims: need d1 >= 2 and danc >= 1");
    }
    if (d1 != d2) {
        throw DomainError("FactorDims: copy space must match the original space");
    }
}

CloneAnalysis analyze_output(const StateVector& v, const StateVector& s, const FactorDims& dims) {
    dims.validate();
    if (s.dim() != dims.d1 || v.dim() != dims.total()) {
        throw DimensionError("analyze_output: dimension mismatch");
    }
    if (!v.is_unit() || !s.is_unit()) {
        throw DomainError("analyze_output: output and input must be unit vectors");
    }
    const StateVector ss = tensor(s, s);
    const std::size_t danc = dims.danc;

    StateVector q = StateVector::zero(danc);
    for (std::size_t a = 0; a < ss.dim(); ++a) {
        const Complex weight = std::conj(ss[a]);
        for (std::size_t j = 0; j < danc; ++j) {
            q[j] += weight * v[a * danc + j];
        }
    }
    const StateVector perp = v - tensor(ss, q);
    const double q_norm = q.norm();

    CloneAnalysis out{v, q, 0.0, 0.0, Angle(), std::nullopt, std::nullopt};
    out.perp_norm = perp.norm();
    out.x = out.perp_norm;
    out.delta_s = Angle(std::atan2(out.perp_norm, q_norm));
    if (q_norm > kDegenerateQ) {
        StateVector k = q;
        k *= 1.0 / q_norm;
        out.ideal = tensor(ss, k);
        out.k = std::move(k);
    }
    return out;
}

ClonerResult make_result(const TwoStateSet& set, const FactorDims& dims, const StateVector& v_phi,
                         const StateVector& v_psi) {
    ClonerResult r{set,        dims, analyze_output(v_phi, set.phi(), dims),
                   analyze_output(v_psi, set.psi(), dims),
                   0.0,        std::nullopt, std::nullopt};
    r.ae = absolute_error(r.a_phi, r.a_psi);
    if (!r.a_phi.degenerate() && !r.a_psi.degenerate()) {
        r.ideal_angle = angle(*r.a_phi.ideal, *r.a_psi.ideal);
        const double s = r.ideal_angle->sin();
        if (s >= kIdenticalIdeals) {
            r.re = r.ae / s;
        }
    }
    return r;
}

double absolute_error(const CloneAnalysis& r_phi, const CloneAnalysis& r_psi) {
    if (r_phi.v.dim() != r_psi.v.dim()) {
        throw DimensionError("absolute_error: analyses over different spaces");
    }
    return r_phi.x + r_psi.x;
}

std::optional<double> relative_error(const ClonerResult& r) {
    if (r.a_phi.degenerate() || r.a_psi.degenerate()) {
        throw DomainError("relative_error: ideal output is degenerate");
    }
    const double s = angle(*r.a_phi.ideal, *r.a_psi.ideal).sin();
    if (s < kIdenticalIdeals) {
        return std::nullopt;
    }
    return absolute_error(r.a_phi, r.a_psi) / s;
}

std::pair<InequalityReport, InequalityReport> inequality_chain(const ClonerResult& r,
                                                               double tol) {
    if (r.a_phi.degenerate() || r.a_psi.degenerate()) {
        throw DomainError("inequality_chain: ideal output is degenerate");
    }
    const double errors = r.a_phi.delta_s.radians() + r.a_psi.delta_s.radians();
    const double ideal = angle(*r.a_phi.ideal, *r.a_psi.ideal).radians();
    const double outputs = angle(r.a_phi.v, r.a_psi.v).radians();
    const double gap = r.set.tensor_delta().radians() - r.set.delta().radians();
    return {InequalityReport::make(ideal, errors + outputs, tol),
            InequalityReport::make(gap, errors, tol)};
}

Projector lift_projector(const Projector& p, const FactorDims& dims, Mode mode) {
    dims.validate();
    if (p.ambient_dim() != dims.d1) {
        throw DimensionError("lift_projector: projector must act on one particle");
    }
    std::vector<StateVector> basis;
    basis.reserve(p.rank() * dims.d2 * dims.danc);
    for (const auto& b : p.basis()) {
        for (std::size_t other = 0; other < dims.d1; ++other) {
            const StateVector e = StateVector::basis(dims.d1, other);
            for (std::size_t j = 0; j < dims.danc; ++j) {
                const StateVector f = StateVector::basis(dims.danc, j);
                basis.push_back(mode == Mode::kOriginal ? tensor(b, e, f) : tensor(e, b, f));
            }
        }
    }
    return Projector(std::move(basis), dims.total());
}

InequalityReport measurement_deviation(const CloneAnalysis& a, const StateVector& s,
                                       const Projector& p, Mode mode, double tol) {
    const std::size_t d = s.dim();
    if (d < 2 || a.v.dim() % (d * d) != 0) {
        throw DimensionError("measurement_deviation: output does not factor over the input space");
    }
    const FactorDims dims{d, d, a.v.dim() / (d * d)};
    const double lifted = measure_prob(lift_projector(p, dims, mode), a.v);
    return InequalityReport::make(std::abs(lifted - measure_prob(p, s)), a.x, tol);
}

}  // namespace clonebound
