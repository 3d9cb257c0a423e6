// Copyright 2026 The ksb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ksb/asymptotic.hpp"
#include "ksb/exact.hpp"

using ksb::Boundary;
using ksb::Method;
using ksb::q_bridge;
using ksb::q_exact;
using ksb::q_theorem1;
using ksb::q_theorem2;
using ksb::smirnov_limit;
using ksb::smirnov_second_order;

TEST_CASE("theorem1: pinned values") {
    const auto a = q_theorem1({1000, 10.0, 1000.0});  // w = 10
    CHECK(a.value == doctest::Approx(0.18126924692201815).epsilon(1e-15));
    CHECK(*a.error_bound == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(a.method == Method::theorem1);

    const auto b = q_theorem1({100, 10.0, 100.0});  // lambda = 1
    CHECK(b.value == doctest::Approx(0.8646647167633873).epsilon(1e-15));

    // u -> 0 sends the exponent to 0.
    CHECK(q_theorem1({100, 1e-13, 101.0}).value <= 1e-12);

    const auto zero = q_theorem1({5, 1.0, 4.0});  // w = 0
    CHECK(zero.value == 0.0);
    CHECK(zero.method == Method::trivial_zero);
}

TEST_CASE("theorem2: agrees with exact within its bound scale") {
    for (const auto& [n, u, w] :
         {std::tuple{1000L, 20.0, 20.0}, std::tuple{100L, 1.0, 1.0},
          std::tuple{400L, 5.0, 10.0}, std::tuple{3200L, 57.0, 2.0}}) {
        const Boundary boundary{n, u, static_cast<double>(n) + w - u};
        const auto t2 = q_theorem2(boundary);
        REQUIRE(t2.error_bound.has_value());
        CHECK(std::fabs(q_exact(boundary).value - t2.value) <=
              *t2.error_bound);
    }
}

TEST_CASE("theorem2: pinned main term") {
    // Frozen against a 40-digit evaluation of the closed form with the
    // independently bisected barrier shift b(1001, 20).
    CHECK(q_theorem2({1000, 20.0, 1000.0}).value ==
          doctest::Approx(0.5556163371822055).epsilon(1e-12));
}

TEST_CASE("theorem2: hard error outside the stated range") {
    CHECK_THROWS_WITH_AS(q_theorem2({100, 15.0, 100.0}),
                         doctest::Contains("n/10"), std::domain_error);
    CHECK_THROWS_AS(q_theorem2({100, 0.5, 101.0}), std::domain_error);  // u < 1
    CHECK_THROWS_AS(q_theorem2({100, 5.0, 110.0}), std::domain_error);  // w > n/10
    CHECK_THROWS_AS(q_theorem2({100, 2.0, 98.5}), std::domain_error);   // w < 1
}

TEST_CASE("smirnov_limit: pinned values") {
    CHECK(smirnov_limit(1.0) ==
          doctest::Approx(0.8646647167633873).epsilon(1e-15));
    CHECK(smirnov_limit(0.0) == 0.0);
    CHECK(smirnov_limit(3.0) ==
          doctest::Approx(0.9999999847700203).epsilon(1e-15));
    CHECK_THROWS_AS(smirnov_limit(-0.5), std::domain_error);
}

TEST_CASE("smirnov_second_order: pinned values") {
    const auto a = smirnov_second_order({100, 1.0});
    CHECK(a.value == doctest::Approx(0.8736870689791615).epsilon(1e-15));
    CHECK(*a.error_bound == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(a.method == Method::smirnov2);

    CHECK(smirnov_second_order({50, 0.0}).value == 0.0);
    CHECK_THROWS_AS(smirnov_second_order({0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(smirnov_second_order({10, -1.0}), std::domain_error);
}

TEST_CASE("smirnov_second_order: tracks exact at lambda = 1, n = 1600") {
    const auto s2 = smirnov_second_order({1600, 1.0});
    const double exact = q_exact({1600, 40.0, 1600.0}).value;
    CHECK(std::fabs(s2.value - exact) <= *s2.error_bound);
}

TEST_CASE("bridge: identical main term, weaker bound") {
    std::mt19937_64 gen(404);
    std::uniform_int_distribution<std::int64_t> pick_n(1, 5000);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = pick_n(gen);
        std::uniform_real_distribution<double> pick_u(0.01, 0.5 * n + 1.0);
        std::uniform_real_distribution<double> pick_w(-1.0, 0.5 * n + 1.0);
        const double u = pick_u(gen);
        const double w = pick_w(gen);
        const double v = static_cast<double>(n) + w - u;
        if (!(v > 0.0)) continue;
        const Boundary boundary{n, u, v};
        const auto t1 = q_theorem1(boundary);
        const auto br = q_bridge(boundary);
        CHECK(br.value == t1.value);  // argument-level identity
        if (boundary.w() > 0.0 && n >= 2) {
            const double log_n = std::log(static_cast<double>(n));
            CHECK(*br.error_bound ==
                  doctest::Approx((u + boundary.w() + log_n) * log_n / n)
                      .epsilon(1e-15));
            CHECK(*br.error_bound >= *t1.error_bound);
        }
    }
    // Spec'd spot value for the bound at n = 10, u = w = 1.
    const auto br = q_bridge({10, 1.0, 10.0});
    const double log10 = std::log(10.0);
    CHECK(*br.error_bound ==
          doctest::Approx((2.0 + log10) * log10 / 10.0).epsilon(1e-15));
}

TEST_CASE("theorem1 empirical rate: smoke check at two sizes") {
    // Full doubling chain lives in the acceptance suite.
    auto scaled_err = [](std::int64_t n) {
        const double dn = static_cast<double>(n);
        double worst = 0.0;
        for (const double u : {1.0, 5.0, std::ceil(std::sqrt(dn))}) {
            for (const double w : {1.0, 5.0, std::ceil(std::sqrt(dn))}) {
                const Boundary boundary{n, u, dn + w - u};
                worst = std::max(
                    worst, dn *
                               std::fabs(q_exact(boundary).value -
                                         q_theorem1(boundary).value) /
                               (u + w));
            }
        }
        return worst;
    };
    const double s200 = scaled_err(200);
    const double s400 = scaled_err(400);
    CHECK(s400 <= 1.25 * s200);
}
