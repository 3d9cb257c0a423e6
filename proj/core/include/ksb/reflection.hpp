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

#ifndef KSB_REFLECTION_HPP
#define KSB_REFLECTION_HPP

#include <cstdint>
#include <vector>

#include "ksb/boundary.hpp"

namespace ksb {

// Independent, non-Monte-Carlo oracle for Q_n(u, v) via the random-walk
// representation: with S_j the walk of centered-exponential steps,
//
//   Q_n(u, v) = P( max_{0<=j<=n} S_j < u | S_{n+1} = n+1-v ),
//
// and with R_m(x, y) the sub-density of {max_{0<=j<=m-1} S_j < y,
// S_m = x}, the reflection principle becomes the exact recurrence
//
//   R_m(x, y) = f_m(x) - f_m(y+a)
//             + int_0^1 sum_{k=1}^{m-1} R_k(y+xi, y)
//                 (f_{m-k}(a-xi) - f_{m-k}(x-y-xi)) dxi
//
// valid for any a >= 1.  Evaluating the xi-integral on a fixed
// Gauss-Legendre grid closes the recurrence over the table
// R_k(y + xi_i, y), and one final application at m = n+1, x = n+1-v
// yields Q_n(u, v) = R_{n+1}(n+1-v, u) / f_{n+1}(n+1-v).
//
// The recurrence itself is exact; all numerical error is quadrature.
// The integrands are piecewise-analytic in xi with a single interior
// breakpoint at xi = ceil(y) - y (the support edge of f entering row
// ceil(y); for y < 1 it is a genuine jump in R_1(y+xi, y) = f_1(y+xi)),
// so the grid is a composite of two Gauss-Legendre panels split there.
// Cost is O(n^2 G^2): an oracle for n up to a few hundred, not a
// production path.

struct ReflectionTable {
    double y = 0.0;                            // barrier
    std::vector<double> nodes;                 // G abscissae in (0,1), ascending
    std::vector<double> weights;               // positive, sum to 1
    std::vector<std::vector<double>> values;   // values[k-1][i] = R_k(y+nodes[i], y)

    std::size_t rows() const { return values.size(); }
    std::size_t grid() const { return nodes.size(); }
};

// Builds rows k = 1..n of the table for barrier y on a G-point grid.
// Requires n >= 1, y > 0, G >= 8, a >= 1.
ReflectionTable build_table(std::int64_t n, double y, int grid, double a = 1.0);

// Q_n(u, v) through the table.  Throws std::domain_error when the
// conditioning density f_{n+1}(n+1-v) is zero (v <= 0) or numerically
// indistinguishable from zero.
ProbabilityResult q_via_reflection(const Boundary& boundary, int grid,
                                   double a = 1.0);

}  // namespace ksb

#endif  // KSB_REFLECTION_HPP
