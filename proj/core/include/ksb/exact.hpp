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

#ifndef KSB_EXACT_HPP
#define KSB_EXACT_HPP

#include "ksb/boundary.hpp"

namespace ksb {

// Closed forms for Q_n(u, v).
//
// Daniels (1945): for n - v < u <= 1,
//   Q_n(u, v) = (w / v) (1 + u / v)^{n-1},            w = u + v - n.
//
// Pyke (1959): for 0 <= u < n and w > 0,
//   Q_n(u, v) = 1 - (w / v^n) sum_{u < j <= n} C(n, j)
//                 (v + u - j)^{n-j-1} (j - u)^j.
//
// The v = n case of Pyke's sum goes back to Smirnov (1939).  Every term
// of the sum is strictly positive, so it is evaluated as a streaming
// log-sum-exp over per-term logs built from lgamma.  Absolute error is
// below 1e-10 for n <= 1e6; when Q < 1e-12 the relative error is
// uncontrolled (there is no complementary series for the non-crossing
// side).

// Daniels' closed form.  Throws std::domain_error unless w > 0 and u <= 1.
ProbabilityResult q_daniels(const Boundary& boundary);

// Pyke's sum.  Throws std::domain_error unless 0 <= u < n and w > 0;
// throws std::runtime_error if the computed value leaves [0,1] by more
// than 1e-12 (roundoff excursions within that band are clamped).
ProbabilityResult q_pyke(const Boundary& boundary);

// Dispatch: 0 when w <= 0, 1 when u >= n, Daniels for u <= 1, else Pyke.
ProbabilityResult q_exact(const Boundary& boundary);

}  // namespace ksb

#endif  // KSB_EXACT_HPP
