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

#ifndef KSB_BOUNDARY_HPP
#define KSB_BOUNDARY_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace ksb {

// A line barrier for the empirical distribution function of n uniform
// samples.  The quantity of interest throughout this library is
//
//   Q_n(u, v) = P( F_n(t) <= (v t + u) / n  for all t in [0, 1] ),
//
// where F_n is the EDF of n independent Uniform[0,1] variables.
struct Boundary {
    std::int64_t n = 1;  // sample count, >= 1
    double u = 1.0;      // intercept, > 0 (in units of 1/n)
    double v = 1.0;      // slope, > 0

    // Excess of the line over the EDF's terminal value at t = 1.  Always
    // recomputed; Q_n(u,v) = 0 whenever w <= 0 because F_n(1) = 1.
    double w() const { return u + v - static_cast<double>(n); }

    // Throws std::domain_error unless n >= 1, u > 0, v > 0 (all finite).
    void validate() const;
};

enum class Method {
    daniels,
    pyke,
    trivial_zero,
    trivial_one,
    theorem1,
    theorem2,
    bridge,
    smirnov2,
    reflection,
    montecarlo,
};

std::string_view method_name(Method m);

// A probability in [0, 1] plus the method that produced it.  error_bound
// carries the scale of the method's theoretical error term where one
// exists (approximation methods); it is absent for exact and oracle
// methods.  The implied constants of the underlying estimates are not
// part of the bound.
struct ProbabilityResult {
    double value = 0.0;
    Method method = Method::daniels;
    std::optional<double> error_bound;
};

}  // namespace ksb

#endif  // KSB_BOUNDARY_HPP
