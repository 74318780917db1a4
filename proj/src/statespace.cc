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

#include "clonebound/statespace.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace clonebound {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

void require_unit(const StateVector& v, const char* what) {
    if (!v.is_unit()) {
        throw DomainError(std::string(what) + ": expected a unit vector, norm = " +
                          std::to_string(v.norm()));
    }
}

// Orthonormalizes candidate against basis with two passes of modified
// Gram-Schmidt. Returns false when the candidate is (numerically) in the span.
bool orthonormalize_into(std::vector<StateVector>& basis, StateVector candidate,
                         double drop_tol) {
    const double original = candidate.norm();
    if (original == 0.0) {
        return false;
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            candidate -= inner(b, candidate) * b;
        }
    }
    const double remaining = candidate.norm();
    if (remaining <= drop_tol * original) {
        return false;
    }
    candidate *= 1.0 / remaining;
    basis.push_back(std::move(candidate));
    return true;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw DomainError("StateVector: dimension must be at least 1");
    }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::vector<Complex>(amplitudes)) {}

StateVector StateVector::zero(std::size_t dim) {
    return StateVector(std::vector<Complex>(dim, Complex{0.0, 0.0}));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DomainError("StateVector::basis: index out of range");
    }
    StateVector v = zero(dim);
    v.amps_[index] = 1.0;
    return v;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

bool StateVector::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw DomainError("StateVector::normalized: zero vector");
    }
    StateVector out = *this;
    out *= 1.0 / n;
    return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
    require_same_dim(dim(), other.dim(), "operator+");
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] += other.amps_[i];
    }
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
    require_same_dim(dim(), other.dim(), "operator-");
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] -= other.amps_[i];
    }
    return *this;
}

StateVector& StateVector::operator*=(Complex factor) {
    for (auto& a : amps_) {
        a *= factor;
    }
    return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
StateVector operator*(Complex factor, StateVector v) { return v *= factor; }
StateVector operator*(StateVector v, Complex factor) { return v *= factor; }

double max_abs_diff(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

Angle::Angle(double radians) : radians_(std::clamp(radians, 0.0, std::numbers::pi / 2)) {}

Angle Angle::from_overlap(double overlap_modulus) {
    return Angle(std::acos(std::clamp(overlap_modulus, 0.0, 1.0)));
}

double Angle::sin() const { return std::sin(radians_); }
double Angle::cos() const { return std::cos(radians_); }

Projector::Projector(std::vector<StateVector> basis, std::size_t ambient_dim)
    : basis_(std::move(basis)), ambient_dim_(ambient_dim) {
    if (ambient_dim_ == 0) {
        throw DomainError("Projector: ambient dimension must be positive");
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        require_same_dim(basis_[i].dim(), ambient_dim_, "Projector");
        if (!basis_[i].is_unit()) {
            throw DomainError("Projector: basis vector is not unit");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(inner(basis_[j], basis_[i])) > kAlgebraicTol) {
                throw DomainError("Projector: basis vectors are not orthogonal");
            }
        }
    }
}

Projector Projector::span_of(const std::vector<StateVector>& vectors, std::size_t ambient_dim) {
    std::vector<StateVector> basis;
    for (const auto& v : vectors) {
        require_same_dim(v.dim(), ambient_dim, "Projector::span_of");
        orthonormalize_into(basis, v, 1e-10);
    }
    return Projector(std::move(basis), ambient_dim);
}

Projector Projector::complement() const {
    auto full = complete_basis(basis_, ambient_dim_);
    std::vector<StateVector> rest(full.begin() + static_cast<std::ptrdiff_t>(basis_.size()),
                                  full.end());
    return Projector(std::move(rest), ambient_dim_);
}

UnitaryMatrix::UnitaryMatrix(std::vector<Complex> entries, std::size_t dim, bool)
    : entries_(std::move(entries)), dim_(dim) {}

UnitaryMatrix::UnitaryMatrix(std::vector<Complex> entries, std::size_t dim, double tol)
    : entries_(std::move(entries)), dim_(dim) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw DimensionError("UnitaryMatrix: expected dim*dim entries");
    }
    const double defect = unitarity_defect();
    if (!(defect <= tol)) {
        throw DomainError("UnitaryMatrix: not unitary (defect " + std::to_string(defect) + ")");
    }
}

UnitaryMatrix UnitaryMatrix::from_columns(const std::vector<StateVector>& columns, double tol) {
    const std::size_t n = columns.size();
    std::vector<Complex> entries(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        require_same_dim(columns[c].dim(), n, "UnitaryMatrix::from_columns");
        for (std::size_t r = 0; r < n; ++r) {
            entries[r * n + c] = columns[c][r];
        }
    }
    return UnitaryMatrix(std::move(entries), n, tol);
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    std::vector<Complex> entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        entries[i * dim + i] = 1.0;
    }
    return UnitaryMatrix(std::move(entries), dim, true);
}

StateVector UnitaryMatrix::apply(const StateVector& v) const {
    require_same_dim(v.dim(), dim_, "UnitaryMatrix::apply");
    StateVector out = StateVector::zero(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += entries_[r * dim_ + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double UnitaryMatrix::unitarity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj(entries_[k * dim_ + i]) * entries_[k * dim_ + j];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

Angle angle(const StateVector& a, const StateVector& b) {
    require_same_dim(a.dim(), b.dim(), "angle");
    require_unit(a, "angle");
    require_unit(b, "angle");
    // arccos loses half the digits near overlap 1; atan2 of the rejection
    // length keeps small angles accurate. Averaging both rejections keeps the
    // result exactly symmetric.
    const Complex ab = inner(a, b);
    const double rejection = 0.5 * ((b - ab * a).norm() + (a - std::conj(ab) * b).norm());
    return Angle(std::atan2(rejection, std::abs(ab)));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out.push_back(a[i] * b[j]);
        }
    }
    return StateVector(std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c) {
    return tensor(tensor(a, b), c);
}

StateVector gram_schmidt_residual(const StateVector& target, const StateVector& anchor) {
    require_same_dim(target.dim(), anchor.dim(), "gram_schmidt_residual");
    require_unit(target, "gram_schmidt_residual");
    require_unit(anchor, "gram_schmidt_residual");
    const Complex overlap = inner(anchor, target);
    const double modulus = std::abs(overlap);
    if (modulus >= 1.0 - kAlgebraicTol) {
        throw DomainError("gram_schmidt_residual: inputs are collinear");
    }
    StateVector residual = target - overlap * anchor;
    residual *= 1.0 / std::sqrt(1.0 - modulus * modulus);
    // Renormalize to absorb the rounding in 1 - |overlap|^2.
    return residual.normalized();
}

StateVector apply_projector(const Projector& p, const StateVector& v) {
    require_same_dim(p.ambient_dim(), v.dim(), "apply_projector");
    StateVector out = StateVector::zero(v.dim());
    for (const auto& b : p.basis()) {
        out += inner(b, v) * b;
    }
    return out;
}

double measure_prob(const Projector& p, const StateVector& s) {
    require_same_dim(p.ambient_dim(), s.dim(), "measure_prob");
    require_unit(s, "measure_prob");
    double prob = 0.0;
    for (const auto& b : p.basis()) {
        prob += std::norm(inner(b, s));
    }
    return std::clamp(prob, 0.0, 1.0);
}

std::vector<StateVector> complete_basis(std::vector<StateVector> orthonormal, std::size_t dim) {
    for (const auto& v : orthonormal) {
        require_same_dim(v.dim(), dim, "complete_basis");
    }
    for (std::size_t i = 0; i < dim && orthonormal.size() < dim; ++i) {
        orthonormalize_into(orthonormal, StateVector::basis(dim, i), 1e-8);
    }
    return orthonormal;
}

}  // namespace clonebound
