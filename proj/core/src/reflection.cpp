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

#include "ksb/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "ksb/density.hpp"
#include "ksb/quadrature.hpp"

namespace ksb {

namespace {

// Below this log threshold the conditioning density cannot be
// represented in double precision and the linear-space recurrence is
// meaningless.
constexpr double kLogUnderflow = -700.0;

// Interior support breakpoint of the table integrands.  Row k of the
// table is smooth in xi except where y + xi crosses the support edge of
// f entering row ceil(y); the breakpoint sits at xi = ceil(y) - y, is a
// jump for y < 1 and an increasingly smooth kink for larger y.  Integer
// barriers put it on the interval ends.
std::optional<double> interior_breakpoint(double y, std::int64_t n) {
    const double k0 = std::ceil(y);
    if (k0 == y || k0 > static_cast<double>(n)) return std::nullopt;
    const double c = k0 - y;
    if (c < 1e-9 || c > 1.0 - 1e-9) return std::nullopt;
    return c;
}

QuadratureRule table_rule(std::int64_t n, double y, int grid) {
    const auto split = interior_breakpoint(y, n);
    if (!split) return gauss_legendre(grid);
    // Two panels joined at the breakpoint, nodes roughly in proportion
    // to panel length, at least 4 per panel.
    const int left = std::clamp(static_cast<int>(std::lround(grid * *split)),
                                4, grid - 4);
    QuadratureRule rule = gauss_legendre(left, 0.0, *split);
    const QuadratureRule right = gauss_legendre(grid - left, *split, 1.0);
    rule.nodes.insert(rule.nodes.end(), right.nodes.begin(),
                      right.nodes.end());
    rule.weights.insert(rule.weights.end(), right.weights.begin(),
                        right.weights.end());
    return rule;
}

}  // namespace

ReflectionTable build_table(std::int64_t n, double y, int grid, double a) {
    if (n < 1) {
        throw std::domain_error("build_table: n must be >= 1");
    }
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw std::domain_error("build_table: barrier y must be > 0");
    }
    if (grid < 8) {
        throw std::domain_error("build_table: need at least 8 grid points");
    }
    if (!(a >= 1.0)) {
        throw std::domain_error("build_table: free parameter a must be >= 1");
    }

    ReflectionTable table;
    table.y = y;
    QuadratureRule rule = table_rule(n, y, grid);
    table.nodes = std::move(rule.nodes);
    table.weights = std::move(rule.weights);

    const std::size_t g = table.nodes.size();
    const std::size_t rows = static_cast<std::size_t>(n);

    // f_m(y + xi_i) and f_m(y + a) for every row.
    std::vector<std::vector<double>> f_y(rows);
    std::vector<double> f_ya(rows);
    for (std::size_t m = 0; m < rows; ++m) {
        f_y[m].resize(g);
        for (std::size_t i = 0; i < g; ++i) {
            f_y[m][i] = f(static_cast<std::int64_t>(m + 1), y + table.nodes[i]);
        }
        f_ya[m] = f(static_cast<std::int64_t>(m + 1), y + a);
    }

    // Step-density kernels used by the recurrence: f_d(a - xi_j) and
    // f_d(xi_i - xi_j) for d = 1..n-1 (row i contiguous).
    const std::size_t depths = rows > 0 ? rows - 1 : 0;
    std::vector<std::vector<double>> f_a(depths);
    std::vector<std::vector<double>> f_diff(depths);
    for (std::size_t d = 0; d < depths; ++d) {
        const auto order = static_cast<std::int64_t>(d + 1);
        f_a[d].resize(g);
        for (std::size_t j = 0; j < g; ++j) {
            f_a[d][j] = f(order, a - table.nodes[j]);
        }
        f_diff[d].resize(g * g);
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) {
                f_diff[d][i * g + j] =
                    f(order, table.nodes[i] - table.nodes[j]);
            }
        }
    }

    table.values.assign(rows, std::vector<double>(g, 0.0));
    // Weight-scaled rows, maintained as the table grows.
    std::vector<std::vector<double>> weighted(rows,
                                              std::vector<double>(g, 0.0));

    // Base row: S_0 = 0 is below any y > 0, so R_1(x, y) = f_1(x).
    for (std::size_t i = 0; i < g; ++i) {
        table.values[0][i] = f_y[0][i];
        weighted[0][i] = table.weights[i] * f_y[0][i];
    }

    for (std::size_t m = 2; m <= rows; ++m) {
        // x-independent part of the integral term.
        double a_term = 0.0;
        for (std::size_t k = 1; k < m; ++k) {
            const auto& wr = weighted[k - 1];
            const auto& fa = f_a[m - k - 1];
            double acc = 0.0;
            for (std::size_t j = 0; j < g; ++j) acc += wr[j] * fa[j];
            a_term += acc;
        }
        for (std::size_t i = 0; i < g; ++i) {
            double b_term = 0.0;
            for (std::size_t k = 1; k < m; ++k) {
                const auto& wr = weighted[k - 1];
                const double* fd = f_diff[m - k - 1].data() + i * g;
                double acc = 0.0;
                for (std::size_t j = 0; j < g; ++j) acc += wr[j] * fd[j];
                b_term += acc;
            }
            double value = f_y[m - 1][i] - f_ya[m - 1] + a_term - b_term;
            // The exact value is a sub-density, hence nonnegative; tiny
            // negative excursions are quadrature roundoff.
            if (value < 0.0 && value > -1e-12) value = 0.0;
            table.values[m - 1][i] = value;
            weighted[m - 1][i] = table.weights[i] * value;
        }
    }
    return table;
}

ProbabilityResult q_via_reflection(const Boundary& boundary, int grid,
                                   double a) {
    boundary.validate();
    const std::int64_t n = boundary.n;
    const double y = boundary.u;
    const double x_end = static_cast<double>(n + 1) - boundary.v;

    const LogDensity end_density = log_f(n + 1, x_end);
    if (end_density.is_zero() || end_density.log_value < kLogUnderflow) {
        throw std::domain_error(
            "q_via_reflection: conditioning density f_{n+1}(n+1-v) is zero "
            "or underflows (v too small or too large for this oracle)");
    }
    const double f_end = end_density.value();

    const ReflectionTable table = build_table(n, y, grid, a);
    const std::size_t g = table.grid();

    // One more application of the recurrence, at m = n+1 and x = n+1-v.
    double integral = 0.0;
    for (std::size_t k = 1; k <= table.rows(); ++k) {
        const auto order = static_cast<std::int64_t>(n + 1) -
                           static_cast<std::int64_t>(k);
        const auto& row = table.values[k - 1];
        double acc = 0.0;
        for (std::size_t j = 0; j < g; ++j) {
            const double xi = table.nodes[j];
            acc += table.weights[j] * row[j] *
                   (f(order, a - xi) - f(order, x_end - y - xi));
        }
        integral += acc;
    }
    const double numerator = f_end - f(n + 1, y + a) + integral;
    const double q = numerator / f_end;

    if (q < -1e-3 || q > 1.0 + 1e-3) {
        throw std::runtime_error(
            "q_via_reflection: value " + std::to_string(q) +
            " far outside [0,1]; the quadrature grid is too coarse");
    }
    return {std::clamp(q, 0.0, 1.0), Method::reflection, std::nullopt};
}

}  // namespace ksb
