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

#ifndef CLONEBOUND_STATESPACE_H
#define CLONEBOUND_STATESPACE_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clonebound {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (norms, orthogonality, idempotency).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for unitarity of dense matrices.
inline constexpr double kUnitaryTol = 1e-10;

/// Operand dimensions do not agree.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain where the operation is defined.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Finite-dimensional vector of complex amplitudes. Not necessarily unit;
/// operations that need a physical state check the norm themselves.
class StateVector {
   public:
    explicit StateVector(std::vector<Complex> amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    static StateVector zero(std::size_t dim);
    /// Standard basis vector e_index (zero-based).
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    Complex& operator[](std::size_t i) { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;
    bool is_unit(double tol = kAlgebraicTol) const;
    /// Throws DomainError for a zero vector.
    StateVector normalized() const;

    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);
    StateVector& operator*=(Complex factor);

   private:
    std::vector<Complex> amps_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(Complex factor, StateVector v);
StateVector operator*(StateVector v, Complex factor);

/// Largest absolute componentwise difference.
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Angle between two rays, always in [0, pi/2].
class Angle {
   public:
    constexpr Angle() = default;
    /// Clamps into [0, pi/2].
    explicit Angle(double radians);
    static Angle from_overlap(double overlap_modulus);

    double radians() const { return radians_; }
    double sin() const;
    double cos() const;

    friend bool operator==(Angle, Angle) = default;

   private:
    double radians_ = 0.0;
};

/// Orthogonal projector stored as an orthonormal basis of its range.
class Projector {
   public:
    /// Basis must already be orthonormal within kAlgebraicTol.
    Projector(std::vector<StateVector> basis, std::size_t ambient_dim);
    /// Orthonormalizes the given spanning set first (modified Gram-Schmidt).
    static Projector span_of(const std::vector<StateVector>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<StateVector>& basis() const { return basis_; }

    /// Projector onto the orthogonal complement of the range.
    Projector complement() const;

   private:
    std::vector<StateVector> basis_;
    std::size_t ambient_dim_;
};

/// Dense square matrix checked to be unitary on construction.
class UnitaryMatrix {
   public:
    /// Row-major entries, dim*dim of them.
    UnitaryMatrix(std::vector<Complex> entries, std::size_t dim, double tol = kUnitaryTol);
    /// Columns are the images of the standard basis vectors.
    static UnitaryMatrix from_columns(const std::vector<StateVector>& columns,
                                      double tol = kUnitaryTol);
    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const { return entries_; }

    StateVector apply(const StateVector& v) const;
    /// Max-abs entry deviation of U^dagger U from the identity.
    double unitarity_defect() const;

   private:
    UnitaryMatrix(std::vector<Complex> entries, std::size_t dim, bool /*unchecked*/);

    std::vector<Complex> entries_;
    std::size_t dim_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

/// arccos |<a|b>| for unit vectors, evaluated stably for small angles.
Angle angle(const StateVector& a, const StateVector& b);

/// Kronecker product; component (i, j) lives at index i * b.dim() + j.
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c);

/// Unit vector along target with its anchor component removed.
/// Throws DomainError when |<anchor|target>| >= 1 - kAlgebraicTol.
StateVector gram_schmidt_residual(const StateVector& target, const StateVector& anchor);

StateVector apply_projector(const Projector& p, const StateVector& v);

/// <s|P|s> for a unit state s.
double measure_prob(const Projector& p, const StateVector& s);

/// Extends an orthonormal set to an orthonormal basis of C^dim using
/// standard basis vectors as candidates.
std::vector<StateVector> complete_basis(std::vector<StateVector> orthonormal, std::size_t dim);

}  // namespace clonebound

#endif  // CLONEBOUND_STATESPACE_H
