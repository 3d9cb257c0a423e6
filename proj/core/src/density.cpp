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

#include "ksb/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ksb {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kResidualTol = 1e-12;
constexpr double kBracketTol = 1e-14;
}  // namespace

bool LogDensity::is_zero() const { return log_value == kNegInf; }

double LogDensity::value() const { return std::exp(log_value); }

LogDensity log_f(std::int64_t n, double x) {
    if (n < 1) {
        throw std::domain_error("log_f: n must be >= 1, got " +
                                std::to_string(n));
    }
    const double dn = static_cast<double>(n);
    if (x > dn) return {kNegInf};
    if (x == dn) {
        // By continuity: (n-x)^{n-1} -> 1 for n = 1 (empty power), 0 for
        // n >= 2.
        return n == 1 ? LogDensity{0.0} : LogDensity{kNegInf};
    }
    return {(dn - 1.0) * std::log(dn - x) - (dn - x) - std::lgamma(dn)};
}

double f(std::int64_t n, double x) { return log_f(n, x).value(); }

double b_asymptotic(std::int64_t n, double z) {
    if (n < 2) {
        throw std::domain_error("b_asymptotic: n must be >= 2, got " +
                                std::to_string(n));
    }
    return 2.0 * z * z / (3.0 * static_cast<double>(n - 1));
}

bool b_asymptotic_in_range(std::int64_t n, double z) {
    return n >= 20 && z >= 0.0 && z <= static_cast<double>(n) / 10.0;
}

BarrierShift solve_b(std::int64_t n, double z) {
    if (n < 2) {
        throw std::domain_error("solve_b: n must be >= 2, got " +
                                std::to_string(n));
    }
    if (!(z >= 0.0) || z > static_cast<double>(n - 1)) {
        throw std::domain_error("solve_b: z must satisfy 0 <= z <= n-1, got z=" +
                                std::to_string(z));
    }
    if (z == 0.0) return {0.0, n, z, 0.0};

    const double target = log_f(n, 1.0 - z).log_value;
    const auto g = [&](double b) {
        return log_f(n, 1.0 + z - b).log_value - target;
    };

    // g is nondecreasing on [0, z]: shrinking the argument 1+z-b toward
    // the mode raises f.  g(0) <= 0 <= g(z) by the one-sided domination
    // f_n(1+x) <= f_n(1-x).
    double lo = 0.0;
    double hi = z;
    // Seed the first midpoint with the small-z asymptotic, which lands
    // inside (0, z) for every admissible z (it is at most 2z/3 here).
    double mid = std::clamp(b_asymptotic(n, z), 0.0, z);
    if (mid == 0.0 || mid == z) mid = 0.5 * z;

    double gm = g(mid);
    for (int iter = 0; iter < 200 && std::fabs(gm) > kResidualTol; ++iter) {
        (gm < 0.0 ? lo : hi) = mid;
        if (hi - lo <= kBracketTol) break;
        mid = 0.5 * (lo + hi);
        gm = g(mid);
    }
    return {mid, n, z, gm};
}

}  // namespace ksb
