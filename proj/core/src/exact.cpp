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

#include "ksb/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ksb {

namespace {

constexpr double kClampBand = 1e-12;

double clamp_probability(double q, const char* where) {
    if (q < -kClampBand || q > 1.0 + kClampBand) {
        throw std::runtime_error(std::string(where) +
                                 ": value " + std::to_string(q) +
                                 " outside [0,1] beyond roundoff");
    }
    return std::min(1.0, std::max(0.0, q));
}

}  // namespace

void Boundary::validate() const {
    if (n < 1) {
        throw std::domain_error("boundary: n must be >= 1, got " +
                                std::to_string(n));
    }
    if (!(u > 0.0) || !std::isfinite(u)) {
        throw std::domain_error("boundary: u must be finite and > 0");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error("boundary: v must be finite and > 0");
    }
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::daniels: return "daniels";
        case Method::pyke: return "pyke";
        case Method::trivial_zero: return "trivial_zero";
        case Method::trivial_one: return "trivial_one";
        case Method::theorem1: return "theorem1";
        case Method::theorem2: return "theorem2";
        case Method::bridge: return "bridge";
        case Method::smirnov2: return "smirnov2";
        case Method::reflection: return "reflection";
        case Method::montecarlo: return "montecarlo";
    }
    return "unknown";
}

ProbabilityResult q_daniels(const Boundary& boundary) {
    boundary.validate();
    const double w = boundary.w();
    if (!(w > 0.0)) {
        throw std::domain_error(
            "q_daniels: requires n - v < u (equivalently w = u+v-n > 0)");
    }
    if (boundary.u > 1.0) {
        throw std::domain_error("q_daniels: requires u <= 1");
    }
    const double n = static_cast<double>(boundary.n);
    const double q = std::exp(std::log(w) - std::log(boundary.v) +
                              (n - 1.0) * std::log1p(boundary.u / boundary.v));
    return {clamp_probability(q, "q_daniels"), Method::daniels, std::nullopt};
}

ProbabilityResult q_pyke(const Boundary& boundary) {
    boundary.validate();
    const double u = boundary.u;
    const double v = boundary.v;
    const double w = boundary.w();
    if (!(w > 0.0)) {
        throw std::domain_error("q_pyke: requires w = u+v-n > 0");
    }
    if (u >= static_cast<double>(boundary.n)) {
        throw std::domain_error("q_pyke: requires u < n");
    }

    // Q = 1 - (w / v^n) sum_{u<j<=n} C(n,j) (v+u-j)^{n-j-1} (j-u)^j.
    // Every term is positive: v+u-j = w + (n-j) > 0 and j-u > 0, so the
    // sum is a streaming log-sum-exp with a running maximum, j descending
    // from n.  The j = n term's power (v+u-n)^{-1} = w^{-1} falls out of
    // the same expression.
    const std::int64_t n = boundary.n;
    const double dn = static_cast<double>(n);
    const double lgamma_n1 = std::lgamma(dn + 1.0);
    const std::int64_t j_min = static_cast<std::int64_t>(std::floor(u)) + 1;

    double log_max = -std::numeric_limits<double>::infinity();
    double scaled_sum = 0.0;
    for (std::int64_t j = n; j >= j_min; --j) {
        const double dj = static_cast<double>(j);
        const double log_term = lgamma_n1 - std::lgamma(dj + 1.0) -
                                std::lgamma(dn - dj + 1.0) +
                                (dn - dj - 1.0) * std::log(v + u - dj) +
                                dj * std::log(dj - u);
        if (log_term <= log_max) {
            scaled_sum += std::exp(log_term - log_max);
        } else {
            scaled_sum = scaled_sum * std::exp(log_max - log_term) + 1.0;
            log_max = log_term;
        }
    }

    const double log_sum = log_max + std::log(scaled_sum);
    const double q =
        1.0 - std::exp(std::log(w) - dn * std::log(v) + log_sum);
    return {clamp_probability(q, "q_pyke"), Method::pyke, std::nullopt};
}

ProbabilityResult q_exact(const Boundary& boundary) {
    boundary.validate();
    if (boundary.w() <= 0.0) {
        // F_n(1) = 1 > (v+u)/n: the line dips below the EDF's endpoint.
        return {0.0, Method::trivial_zero, std::nullopt};
    }
    if (boundary.u >= static_cast<double>(boundary.n)) {
        // The line sits at or above 1 on all of [0,1].
        return {1.0, Method::trivial_one, std::nullopt};
    }
    return boundary.u <= 1.0 ? q_daniels(boundary) : q_pyke(boundary);
}

}  // namespace ksb
