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

#include "ksb/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ksb/density.hpp"

namespace ksb {

namespace {

// Shared main term 1 - e^{-2uw/n}; uw/n spans many orders of magnitude
// across the study grids, hence expm1.
double bridge_main_term(const Boundary& boundary) {
    const double w = boundary.w();
    return -std::expm1(-2.0 * boundary.u * w /
                       static_cast<double>(boundary.n));
}

}  // namespace

ProbabilityResult q_theorem1(const Boundary& boundary) {
    boundary.validate();
    const double w = boundary.w();
    if (w <= 0.0) return {0.0, Method::trivial_zero, std::nullopt};
    const double n = static_cast<double>(boundary.n);
    return {bridge_main_term(boundary), Method::theorem1,
            (boundary.u + w) / n};
}

ProbabilityResult q_bridge(const Boundary& boundary) {
    boundary.validate();
    const double w = boundary.w();
    if (w <= 0.0) return {0.0, Method::trivial_zero, std::nullopt};
    const double n = static_cast<double>(boundary.n);
    const double log_n = std::log(n);
    return {bridge_main_term(boundary), Method::bridge,
            (boundary.u + w + log_n) * log_n / n};
}

ProbabilityResult q_theorem2(const Boundary& boundary) {
    boundary.validate();
    const double u = boundary.u;
    const double w = boundary.w();
    const double n = static_cast<double>(boundary.n);
    if (!(u >= 1.0 && u <= n / 10.0 && w >= 1.0 && w <= n / 10.0)) {
        throw std::domain_error(
            "q_theorem2: outside the valid range 1 <= u <= n/10, "
            "1 <= w <= n/10 (u=" + std::to_string(u) +
            ", w=" + std::to_string(w) + ", n=" + std::to_string(boundary.n) +
            ")");
    }
    const double b = solve_b(boundary.n + 1, w).b;
    const double arg = u * (2.0 * w - b) / ((n - w + b) * (n + w - u));
    const double value = -std::expm1(n * std::log1p(-arg));
    const double error_bound = ((u + w) / n + u * w * w / (n * n)) *
                               std::exp(-u * w / (n + w - u));
    return {std::clamp(value, 0.0, 1.0), Method::theorem2, error_bound};
}

double smirnov_limit(double lambda) {
    if (!(lambda >= 0.0)) {
        throw std::domain_error("smirnov_limit: lambda must be >= 0");
    }
    return -std::expm1(-2.0 * lambda * lambda);
}

ProbabilityResult smirnov_second_order(const SmirnovQuery& query) {
    if (query.n < 1) {
        throw std::domain_error("smirnov_second_order: n must be >= 1");
    }
    if (!(query.lambda >= 0.0)) {
        throw std::domain_error("smirnov_second_order: lambda must be >= 0");
    }
    const double n = static_cast<double>(query.n);
    const double lambda = query.lambda;
    const double value =
        1.0 - std::exp(-2.0 * lambda * lambda) *
                  (1.0 - 2.0 * lambda / (3.0 * std::sqrt(n)));
    const double l2 = lambda * lambda;
    return {std::clamp(value, 0.0, 1.0), Method::smirnov2,
            (l2 * l2 + 1.0) / n};
}

}  // namespace ksb
