// Copyright 2026 The LRPQ Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file StateVector.hpp
 * Dense double-precision statevector with in-place single-qubit and CNOT
 * application.
 *
 * Basis ordering: qubit 0 is the most significant bit of the basis index,
 * i.e. index i = b_0 b_1 ... b_{n-1} in binary.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lrpq {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

/// Row-major 4x4 complex matrix.
using Matrix4 = std::array<Complex, 16>;

inline constexpr std::size_t kMaxQubits = 20;

/// Tolerance used to reject non-unitary gates.
inline constexpr double kUnitarityTolerance = 1e-9;

namespace gates {

Matrix2 identity();
Matrix2 rx(double angle);
Matrix2 ry(double angle);
Matrix2 rz(double angle);
Matrix2 pauliY();
Matrix2 pauliZ();

/// CNOT with the control on the first (most significant) qubit.
Matrix4 cnot();

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b);
Matrix2 adjoint(const Matrix2 &m);

/// max_ij |(U^dagger U - I)_ij|
double unitarityDeviation(const Matrix2 &m);

} // namespace gates

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits; throws ConfigError outside [1, max_qubits].
    explicit StateVector(std::size_t num_qubits,
                         std::size_t max_qubits = kMaxQubits);

    /**
     * @brief Build a state from explicit amplitudes.
     *
     * The length must be a power of two and the vector must be normalized to
     * within 1e-10.
     */
    static StateVector fromAmplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t numQubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    /// Apply a 2x2 unitary to `qubit`; rejects non-unitary matrices.
    void applyGate(const Matrix2 &gate, std::size_t qubit);

    void applyCnot(std::size_t control, std::size_t target);

    /// Multiply every amplitude by a diagonal real weight.
    void scaleDiagonal(std::span<const double> weights);

    [[nodiscard]] std::vector<double> probabilities() const;

    /// <psi|Z_qubit|psi>
    [[nodiscard]] double expectationZ(std::size_t qubit) const;

    [[nodiscard]] double squaredNorm() const;

    /// <bra| (op acting on `qubit`) |this>, no unitarity requirement on op.
    [[nodiscard]] Complex braket(const StateVector &bra, const Matrix2 &op,
                                 std::size_t qubit) const;

    /// Bit mask selecting `qubit` inside a basis index.
    [[nodiscard]] std::size_t qubitMask(std::size_t qubit) const {
        return std::size_t{1} << (num_qubits_ - 1 - qubit);
    }

  private:
    StateVector() = default;
    void checkQubit(std::size_t qubit) const;

    std::size_t num_qubits_{0};
    std::vector<Complex> amplitudes_;
};

} // namespace lrpq
