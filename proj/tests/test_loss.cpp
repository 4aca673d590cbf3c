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

#include <cmath>
#include <numbers>

#include "lrpq/Error.hpp"
#include "lrpq/Loss.hpp"

using namespace lrpq;
using Catch::Matchers::WithinAbs;

TEST_CASE("Mean squared error examples", "[loss]") {
    const std::vector<double> a{0.3, -1.2, 4.0};
    CHECK(mse(a, a) == 0.0);
    CHECK_THAT(mse(std::vector{1.0, 0.0}, std::vector{0.0, 0.0}),
               WithinAbs(0.5, 1e-15));
    CHECK_THAT(mse(std::vector{2.0, -1.0, 3.0}, std::vector{0.0, 0.0, 0.0}),
               WithinAbs(14.0 / 3.0, 1e-14));
}

TEST_CASE("Mean squared error input checks", "[loss]") {
    CHECK_THROWS_AS(mse(std::vector{1.0}, std::vector{1.0, 2.0}), InputError);
    CHECK_THROWS_AS(mse(std::vector<double>{}, std::vector<double>{}),
                    InputError);
    CHECK_THROWS_AS(batchMean(std::vector<double>{}), InputError);
    CHECK(batchMean(std::vector{1.0, 2.0, 6.0}) == 3.0);
}

TEST_CASE("MSE gradient matches finite differences", "[loss]") {
    const std::vector<double> y{0.4, -0.7, 1.9};
    std::vector<double> yhat{1.1, 0.2, -0.5};
    const auto g = mseGradient(yhat, y);
    for (std::size_t i = 0; i < yhat.size(); ++i) {
        auto up = yhat;
        auto dn = yhat;
        up[i] += 1e-6;
        dn[i] -= 1e-6;
        CHECK_THAT(g[i], WithinAbs((mse(up, y) - mse(dn, y)) / 2e-6, 1e-8));
    }
}

TEST_CASE("Gaussian mapping examples", "[loss]") {
    const auto a = toGaussian(std::vector{0.3, 0.0, 9.0});
    CHECK(a.mu == 0.3);
    CHECK_THAT(a.sigma, WithinAbs(1.0, 1e-15));
    CHECK_FALSE(a.saturated);

    const auto b = toGaussian(std::vector{0.0, -2.0, 9.0});
    CHECK_THAT(b.sigma * b.sigma, WithinAbs(0.1353353, 1e-7));
    CHECK_THAT(b.sigma, WithinAbs(0.3678794, 1e-7));

    const auto c = toGaussian(std::vector{1.5, 27.6, 0.0});
    CHECK_THAT(std::log(c.sigma), WithinAbs(13.8, 1e-12));
    CHECK(c.saturated);
}

TEST_CASE("Gaussian index configuration is checked", "[loss]") {
    const std::vector<double> y{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(toGaussian(y, {1, 1}), ConfigError);
    CHECK_THROWS_AS(toGaussian(y, {0, 3}), IndexError);
    const auto swapped = toGaussian(std::vector{-1.0, 0.7, 0.0}, {1, 0});
    CHECK(swapped.mu == 0.7);
}

TEST_CASE("Gaussian negative log-likelihood examples", "[loss]") {
    CHECK_THAT(gaussianNll({0.2, 1.0}, 0.2), WithinAbs(0.9189385, 1e-7));
    CHECK_THAT(gaussianNll({0.0, 1.0}, 1.0), WithinAbs(1.4189385, 1e-7));

    // For a fixed residual r the NLL is smallest at sigma^2 = r^2.
    const double r = 0.37;
    const double best = gaussianNll({0.0, r}, r);
    CHECK_THAT(best, WithinAbs(0.5 * std::log(2.0 * std::numbers::pi * r * r) +
                                   0.5,
                               1e-14));
    CHECK(gaussianNll({0.0, 1.01 * r}, r) > best);
    CHECK(gaussianNll({0.0, 0.99 * r}, r) > best);
    CHECK_THROWS_AS(gaussianNll({0.0, 0.0}, 1.0), InputError);
}

TEST_CASE("NLL gradient in mean and log-variance matches finite differences",
          "[loss]") {
    const auto nll = [](double mu, double s, double y) {
        return gaussianNll({mu, std::exp(0.5 * s)}, y);
    };
    for (double mu : {-1.0, 0.0, 0.8}) {
        for (double s : {-3.0, 0.0, 2.0}) {
            const double y = 0.25;
            const auto [dmu, ds] = gaussianNllGradient(mu, s, y);
            const double h = 1e-6;
            CHECK_THAT(dmu, WithinAbs((nll(mu + h, s, y) - nll(mu - h, s, y)) /
                                          (2 * h),
                                      1e-6));
            CHECK_THAT(ds, WithinAbs((nll(mu, s + h, y) - nll(mu, s - h, y)) /
                                         (2 * h),
                                     1e-6));
        }
    }
}
