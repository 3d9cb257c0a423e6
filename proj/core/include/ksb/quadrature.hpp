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

#ifndef KSB_QUADRATURE_HPP
#define KSB_QUADRATURE_HPP

#include <vector>

namespace ksb {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule with g points on [lo, hi] (default [0, 1]).
// Nodes by Newton iteration on the Legendre recurrence; accurate to a
// few ulp for g up to several hundred.  Throws std::domain_error for
// g < 1 or hi <= lo.
QuadratureRule gauss_legendre(int g, double lo = 0.0, double hi = 1.0);

}  // namespace ksb

#endif  // KSB_QUADRATURE_HPP
