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
#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "DenseOracle.hpp"
#include "lrpq/Error.hpp"
#include "lrpq/StateVector.hpp"

using namespace lrpq;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

void requireProbs(const StateVector &s, const std::vector<double> &expected,
                  double tol = 1e-12) {
    const auto p = s.probabilities();
    REQUIRE(p.size() == expected.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK_THAT(p[i], WithinAbs(expected[i], tol));
    }
}

Matrix2 toMatrix2(const testing::Dense &d) {
    return {d(0, 0), d(0, 1), d(1, 0), d(1, 1)};
}

} // namespace

TEST_CASE("New states start in the all-zeros basis state", "[statevector]") {
    for (std::size_t n = 1; n <= 3; ++n) {
        StateVector s(n);
        REQUIRE(s.size() == (std::size_t{1} << n));
        CHECK(s[0] == Complex{1.0, 0.0});
        for (std::size_t i = 1; i < s.size(); ++i) {
            CHECK(s[i] == Complex{0.0, 0.0});
        }
    }
}

TEST_CASE("Qubit count outside the supported range is rejected",
          "[statevector]") {
    CHECK_THROWS_AS(StateVector(0), ConfigError);
    CHECK_THROWS_AS(StateVector(kMaxQubits + 1), ConfigError);
    CHECK_THROWS_AS(StateVector(5, 4), ConfigError);
}

TEST_CASE("Single-qubit rotations act on the right amplitudes",
          "[statevector]") {
    SECTION("Rx(pi) flips |0> to -i|1>") {
        StateVector s(1);
        s.applyGate(gates::rx(kPi), 0);
        CHECK_THAT(s[0].real(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s[0].imag(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s[1].real(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(s[1].imag(), WithinAbs(-1.0, 1e-15));
        requireProbs(s, {0.0, 1.0});
    }
    SECTION("Rz leaves basis-state probabilities alone") {
        StateVector s(1);
        s.applyGate(gates::rz(0.731), 0);
        requireProbs(s, {1.0, 0.0});
    }
    SECTION("Ry(pi/2) on qubit 1 touches the least significant bit") {
        StateVector s(2);
        s.applyGate(gates::ry(kPi / 2), 1);
        requireProbs(s, {0.5, 0.5, 0.0, 0.0});
    }
}

TEST_CASE("CNOT follows its truth table", "[statevector]") {
    const double r = 1.0 / std::sqrt(2.0);
    auto s10 = StateVector::fromAmplitudes({0, 0, 1, 0});
    s10.applyCnot(0, 1);
    requireProbs(s10, {0, 0, 0, 1});

    StateVector s00(2);
    s00.applyCnot(0, 1);
    requireProbs(s00, {1, 0, 0, 0});

    auto bell = StateVector::fromAmplitudes({r, 0, r, 0});
    bell.applyCnot(0, 1);
    requireProbs(bell, {0.5, 0, 0, 0.5});
}

TEST_CASE("CNOT rejects equal or out-of-range qubits", "[statevector]") {
    StateVector s(3);
    CHECK_THROWS_AS(s.applyCnot(1, 1), IndexError);
    CHECK_THROWS_AS(s.applyCnot(0, 3), IndexError);
    CHECK_THROWS_AS(s.applyGate(gates::rx(0.1), 3), IndexError);
}

TEST_CASE("Non-unitary gates are refused", "[statevector]") {
    StateVector s(2);
    const Matrix2 bad{Complex{1.0}, Complex{0.1}, Complex{0.0}, Complex{1.0}};
    CHECK_THROWS_AS(s.applyGate(bad, 0), NumericError);
}

TEST_CASE("Explicit amplitudes are validated", "[statevector]") {
    CHECK_THROWS_AS(StateVector::fromAmplitudes({1, 0, 0}), ConfigError);
    CHECK_THROWS_AS(StateVector::fromAmplitudes({1, 1}), NumericError);
    const auto s = StateVector::fromAmplitudes(
        {Complex{0.5, 0.5}, Complex{0.5, -0.5}});
    requireProbs(s, {0.5, 0.5});
}

TEST_CASE("Z expectation examples", "[statevector]") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(StateVector(1).expectationZ(0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(StateVector::fromAmplitudes({r, r}).expectationZ(0),
               WithinAbs(0.0, 1e-15));
    const auto s =
        StateVector::fromAmplitudes({std::sqrt(0.7), std::sqrt(0.3)});
    CHECK_THAT(s.expectationZ(0), WithinAbs(0.4, 1e-14));
}

TEST_CASE("Gate application matches the dense Kronecker oracle",
          "[statevector][oracle]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        StateVector s(n);
        std::vector<testing::C> ref(dim, 0.0);
        ref[0] = 1.0;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int step = 0; step < 40; ++step) {
            const std::size_t q = pick(rng);
            testing::Dense g(2);
            switch (step % 3) {
            case 0:
                g = testing::denseRx(angle(rng));
                break;
            case 1:
                g = testing::denseRy(angle(rng));
                break;
            default:
                g = testing::denseRz(angle(rng));
            }
            s.applyGate(toMatrix2(g), q);
            const auto full = testing::lift(g, q, n);
            std::vector<testing::C> next(dim, 0.0);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    next[i] += full(i, j) * ref[j];
                }
            }
            ref = next;
            if (n >= 2 && step % 5 == 4) {
                const std::size_t c = pick(rng);
                const std::size_t t = (c + 1 + pick(rng) % (n - 1)) % n;
                s.applyCnot(c, t);
                const auto cx = testing::denseCnot(c, t, n);
                std::vector<testing::C> permuted(dim, 0.0);
                for (std::size_t i = 0; i < dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j) {
                        permuted[i] += cx(i, j) * ref[j];
                    }
                }
                ref = permuted;
            }
        }
        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(std::abs(s[i] - ref[i]) < 1e-12);
        }
    }
}

TEST_CASE("Norm, probabilities and Z stay consistent under random gates",
          "[statevector][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        StateVector s(n);
        for (int k = 0; k < 30; ++k) {
            const std::size_t q = static_cast<std::size_t>(k) % n;
            s.applyGate(gates::multiply(gates::ry(angle(rng)),
                                        gates::rz(angle(rng))),
                        q);
            if (n > 1) {
                s.applyCnot(q, (q + 1) % n);
            }
        }
        REQUIRE_THAT(s.squaredNorm(), WithinAbs(1.0, 1e-12));
        const auto p = s.probabilities();
        for (std::size_t q = 0; q < n; ++q) {
            double z = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                z += (i & s.qubitMask(q)) ? -p[i] : p[i];
            }
            CHECK_THAT(s.expectationZ(q), WithinAbs(z, 1e-12));
        }
    }
}

TEST_CASE("Braket agrees with an explicit inner product", "[statevector]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    StateVector ket(3);
    StateVector bra(3);
    for (std::size_t q = 0; q < 3; ++q) {
        ket.applyGate(gates::ry(angle(rng)), q);
        bra.applyGate(gates::rx(angle(rng)), q);
    }
    ket.applyCnot(0, 2);
    const auto y = gates::pauliY();
    auto applied = ket;
    applied.applyGate(y, 1);
    Complex expected{0.0, 0.0};
    for (std::size_t i = 0; i < 8; ++i) {
        expected += std::conj(bra[i]) * applied[i];
    }
    CHECK(std::abs(ket.braket(bra, y, 1) - expected) < 1e-13);
}

TEST_CASE("Diagonal scaling multiplies amplitudes elementwise",
          "[statevector]") {
    StateVector s(2);
    s.applyGate(gates::ry(kPi / 2), 0);
    s.applyGate(gates::ry(kPi / 2), 1);
    const std::vector<double> w{1.0, 2.0, 3.0, 4.0};
    s.scaleDiagonal(w);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK_THAT(s[i].real(), WithinAbs(0.5 * w[i], 1e-14));
    }
    CHECK_THROWS_AS(s.scaleDiagonal(std::vector<double>{1.0}), ConfigError);
}
