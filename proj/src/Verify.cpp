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
#include "lrpq/Verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lrpq/Autodiff.hpp"
#include "lrpq/Circuit.hpp"
#include "lrpq/Error.hpp"
#include "lrpq/Experiments.hpp"
#include "lrpq/Outputs.hpp"
#include "lrpq/StateVector.hpp"
#include "lrpq/Training.hpp"

namespace lrpq {

bool gradientsAgree(double analytic, double numeric, double rel_tol,
                    double abs_tol) {
    const double err = std::abs(analytic - numeric);
    return err <= abs_tol ||
           err <= rel_tol * std::max(std::abs(analytic), std::abs(numeric));
}

namespace {

std::string sci(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << v;
    return ss.str();
}

template <class Fn> CheckResult check(std::string name, Fn &&fn) {
    try {
        auto [ok, detail] = fn();
        return {std::move(name), ok, std::move(detail)};
    } catch (const std::exception &e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

} // namespace

std::vector<CheckResult> runVerification(std::uint64_t seed) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    results.push_back(check("rotation unitarity", [&] {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double a = angle(rng), b = angle(rng), c = angle(rng);
            for (const auto &m : {gates::rx(a), gates::ry(a), gates::rz(a),
                                  rotGate(a, b, c)}) {
                worst = std::max(worst, gates::unitarityDeviation(m));
            }
        }
        return std::pair{worst < 1e-12, "max |U^dag U - I| = " + sci(worst)};
    }));

    results.push_back(check("rotation = Rz Ry Rz product", [&] {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double a = angle(rng), b = angle(rng), c = angle(rng);
            const Matrix2 direct = rotGate(a, b, c);
            const Matrix2 product = gates::multiply(
                gates::rz(c), gates::multiply(gates::ry(b), gates::rz(a)));
            for (std::size_t k = 0; k < 4; ++k) {
                worst = std::max(worst, std::abs(direct[k] - product[k]));
            }
        }
        return std::pair{worst < 1e-12, "max element error = " + sci(worst)};
    }));

    results.push_back(check("norm preservation", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const CircuitSpec spec{1 + static_cast<std::size_t>(rng() % 6),
                                   1 + static_cast<std::size_t>(rng() % 8),
                                   rng() % 2 ? Entangler::Chain
                                             : Entangler::Ring};
            const auto state =
                forward(spec, initParams(spec, rng()), angle(rng));
            worst = std::max(worst, std::abs(state.squaredNorm() - 1.0));
        }
        return std::pair{worst < 1e-12, "max |norm^2 - 1| = " + sci(worst)};
    }));

    results.push_back(check("Z expectation vs probabilities", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const CircuitSpec spec{1 + static_cast<std::size_t>(rng() % 5), 3,
                                   Entangler::Chain};
            const auto state =
                forward(spec, initParams(spec, rng()), angle(rng));
            const auto probs = state.probabilities();
            const std::size_t n = spec.num_qubits;
            for (std::size_t q = 0; q < n; ++q) {
                double z = 0.0;
                for (std::size_t b = 0; b < probs.size(); ++b) {
                    z += ((b >> (n - 1 - q)) & 1U) ? -probs[b] : probs[b];
                }
                worst = std::max(worst, std::abs(z - state.expectationZ(q)));
            }
        }
        return std::pair{worst < 1e-12, "max deviation = " + sci(worst)};
    }));

    results.push_back(check("adjoint gradient vs finite differences", [&] {
        std::size_t failures = 0;
        std::size_t components = 0;
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng() % 2);
            const CircuitSpec spec{n, 1 + static_cast<std::size_t>(rng() % 3),
                                   Entangler::Chain};
            const Head head = i % 2 ? Head::Lrp : Head::Pauli;
            const LossKind loss = (i / 2) % 2 ? LossKind::Nll : LossKind::Mse;
            std::normal_distribution<double> target(0.0, 1.0);
            std::vector<Sample> batch(2);
            for (auto &s : batch) {
                s.x = angle(rng);
                const std::size_t len =
                    loss == LossKind::Nll ? 1 : numOutputs(head, n);
                for (std::size_t k = 0; k < len; ++k) {
                    s.target.push_back(target(rng));
                }
            }
            const Objective obj{head, loss, kDefaultClampEps, {}, 1.0};
            const auto params = initParams(spec, rng());
            const auto exact = lossGradient(spec, params, batch, obj);
            const auto fd = finiteDiffGradient(spec, params, batch, obj, 1e-5);
            for (std::size_t k = 0; k < exact.size(); ++k) {
                ++components;
                failures += gradientsAgree(exact[k], fd[k]) ? 0 : 1;
            }
        }
        return std::pair{failures == 0,
                         std::to_string(failures) + " of " +
                             std::to_string(components) +
                             " components disagree"};
    }));

    results.push_back(check("LRP round trip", [&] {
        double worst = 0.0;
        std::exponential_distribution<double> expo(1.0);
        for (int i = 0; i < 1000; ++i) {
            std::vector<double> p(std::size_t{1} << (1 + rng() % 4));
            double total = 0.0;
            for (double &v : p) {
                v = expo(rng) + 1e-3;
                total += v;
            }
            for (double &v : p) {
                v /= total;
            }
            const auto back = lrpInverse(lrpOutputs(p).values);
            for (std::size_t k = 0; k < p.size(); ++k) {
                worst = std::max(worst, std::abs(back[k] - p[k]));
            }
        }
        return std::pair{worst < 1e-12, "max error = " + sci(worst)};
    }));

    results.push_back(check("Pauli outputs bounded", [&] {
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const CircuitSpec spec{2, 3, Entangler::Chain};
            const auto out =
                pauliOutputs(forward(spec, initParams(spec, rng()), angle(rng)));
            for (double v : out.values) {
                ok = ok && v >= -1.0 && v <= 1.0;
            }
        }
        return std::pair{ok, ok ? "all within [-1, 1]" : "bound violated"};
    }));

    results.push_back(check("uncertainty decomposition identity", [&] {
        double worst = 0.0;
        std::normal_distribution<double> g(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            std::vector<double> mus(10);
            std::vector<double> vars(10);
            for (std::size_t k = 0; k < 10; ++k) {
                mus[k] = g(rng);
                vars[k] = std::exp(g(rng));
            }
            const auto p = decomposeUncertainty(0.0, mus, vars);
            worst = std::max(worst,
                             std::abs(p.total - (p.aleatoric + p.epistemic)));
        }
        return std::pair{worst <= 1e-12, "max |total - sum| = " + sci(worst)};
    }));

    results.push_back(check("multinomial counts sum to N", [&] {
        bool ok = true;
        const auto probs = balancedState(3).probabilities();
        for (std::uint64_t n : {1ULL, 7ULL, 1000ULL, 123457ULL}) {
            std::uint64_t total = 0;
            for (auto c : sampleShots(probs, n, rng)) {
                total += c;
            }
            ok = ok && total == n;
        }
        return std::pair{ok, ok ? "ok" : "count mismatch"};
    }));

    return results;
}

} // namespace lrpq
