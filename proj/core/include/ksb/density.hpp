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

#ifndef KSB_DENSITY_HPP
#define KSB_DENSITY_HPP

#include <cstdint>

namespace ksb {

// Density of the n-step sum S_n = X_1 + ... + X_n where each X_i has the
// centered-exponential density e^{x-1} on (-inf, 1].  In closed form
//
//   f_n(x) = (n - x)^{n-1} e^{x-n} / (n-1)!   for x <= n,  0 for x > n.
//
// f_n is unimodal with mode at x = 1 and f_n(1) ~ 1/sqrt(2 pi n).  The
// values underflow double precision for n in the thousands, so all
// arithmetic here is done on log f_n.

// Natural log of a density value.  A distinguished -infinity state
// encodes a density that is exactly zero (arguments beyond the support).
struct LogDensity {
    double log_value;

    bool is_zero() const;
    // exp(log_value); 0 in the zero state.
    double value() const;
};

// log f_n(x).  At the support edge x = n the value is taken by
// continuity: f_1(1) = 1, and 0 for n >= 2.  Throws std::domain_error
// for n < 1.
LogDensity log_f(std::int64_t n, double x);

// Convenience: f_n(x) in linear space (may underflow for large n).
double f(std::int64_t n, double x);

// The unique b in [0, z] with f_n(1 - z) = f_n(1 + z - b), measuring how
// far the density's right flank must be pulled in to match the left
// flank.  Exists and is unique because f_n is unimodal with mode 1 and
// f_n(1 + x) <= f_n(1 - x) for x >= 0.
struct BarrierShift {
    double b;            // solution, 0 <= b <= z
    std::int64_t n;      // density order
    double z;            // offset from the mode
    double residual;     // log f_n(1+z-b) - log f_n(1-z) at the returned b
};

// Safeguarded bisection on g(b) = log f_n(1+z-b) - log f_n(1-z), which is
// nondecreasing on [0, z].  First midpoint is the small-z asymptotic
// 2 z^2 / (3 (n-1)); terminates when |g| <= 1e-12 or the bracket width is
// <= 1e-14.  Requires n >= 2 and 0 <= z <= n-1.
BarrierShift solve_b(std::int64_t n, double z);

// Leading-order approximation 2 z^2 / (3 (n-1)) to solve_b(n, z).b.
// Pure arithmetic; meaningful as an approximation when
// b_asymptotic_in_range(n, z) holds, but callers may evaluate it anywhere
// (extrapolation is their call to flag).
double b_asymptotic(std::int64_t n, double z);

// The validity window n >= 20, 0 <= z <= n/10 of the asymptotic.
bool b_asymptotic_in_range(std::int64_t n, double z);

}  // namespace ksb

#endif  // KSB_DENSITY_HPP
