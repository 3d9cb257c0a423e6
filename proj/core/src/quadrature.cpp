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

#include "ksb/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ksb {

QuadratureRule gauss_legendre(int g, double lo, double hi) {
    if (g < 1) {
        throw std::domain_error("gauss_legendre: need at least one node");
    }
    if (!(hi > lo)) {
        throw std::domain_error("gauss_legendre: empty interval");
    }

    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(g));
    rule.weights.resize(static_cast<std::size_t>(g));

    const int half = (g + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-angle initial guess for the i-th root of P_g.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (g + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_g(x) and P_g'(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= g; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = g * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - x * x) * dp * dp);

        const double mid = 0.5 * (lo + hi);
        const double halfwidth = 0.5 * (hi - lo);
        rule.nodes[static_cast<std::size_t>(i)] = mid - halfwidth * x;
        rule.nodes[static_cast<std::size_t>(g - 1 - i)] = mid + halfwidth * x;
        rule.weights[static_cast<std::size_t>(i)] = halfwidth * weight;
        rule.weights[static_cast<std::size_t>(g - 1 - i)] = halfwidth * weight;
    }
    return rule;
}

}  // namespace ksb
