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

#ifndef KSB_ASYMPTOTIC_HPP
#define KSB_ASYMPTOTIC_HPP

#include <cstdint>

#include "ksb/boundary.hpp"

namespace ksb {

// Approximations to Q_n(u, v), each tagged with the scale of its
// theoretical error term.  error_bound fields are scales only: the
// underlying estimates hold up to unspecified absolute constants, and
// the study harness measures those constants empirically.

// Threshold query for the one-sided Smirnov statistic
// D_n^+ = sqrt(n) sup_t (F_n(t) - t); P(D_n^+ <= lambda) = Q_n(lambda
// sqrt(n), n).
struct SmirnovQuery {
    std::int64_t n = 1;
    double lambda = 0.0;  // >= 0
};

// First-order uniform estimate: Q_n(u, v) ~ 1 - e^{-2uw/n} with error
// scale (u + w)/n.  Returns 0 (trivial_zero) when w <= 0.
ProbabilityResult q_theorem1(const Boundary& boundary);

// Sharper main term built from the barrier shift b = solve_b(n+1, w):
//
//   Q_n(u, v) ~ 1 - (1 - u (2w - b) / ((n - w + b)(n + w - u)))^n,
//
// with error scale ((u+w)/n + u w^2/n^2) e^{-uw/(n+w-u)}.  Only valid on
// 1 <= u <= n/10, 1 <= w <= n/10; outside that range this throws
// std::domain_error rather than extrapolate.
ProbabilityResult q_theorem2(const Boundary& boundary);

// Brownian-bridge crossing main term.  Identical value to q_theorem1 --
// the bridge against the line has crossing probability 1 - e^{-2uw/n} --
// but carries the weaker strong-approximation error scale
// (u + w + ln n) ln n / n, so the study harness can show the direct
// estimate beats it.
ProbabilityResult q_bridge(const Boundary& boundary);

// Limiting Smirnov law: P(D_n^+ <= lambda) -> 1 - e^{-2 lambda^2}.
double smirnov_limit(double lambda);

// Second-order expansion 1 - e^{-2 lambda^2}(1 - 2 lambda / (3 sqrt(n)))
// with error scale (lambda^4 + 1)/n.
ProbabilityResult smirnov_second_order(const SmirnovQuery& query);

}  // namespace ksb

#endif  // KSB_ASYMPTOTIC_HPP
