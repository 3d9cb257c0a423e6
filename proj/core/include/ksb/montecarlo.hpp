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

#ifndef KSB_MONTECARLO_HPP
#define KSB_MONTECARLO_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ksb/boundary.hpp"
#include "ksb/rng.hpp"

namespace ksb {

// Two ways of drawing uniform order statistics:
//   sort:      n uniforms, sorted (O(n log n));
//   spacings:  normalized partial sums of n+1 unit exponentials (O(n)).
// They have identical distributions by Renyi's representation, which is
// exactly what the agreement tests exercise.
enum class Sampler { sort, spacings };

std::string_view sampler_name(Sampler s);

struct McEstimate {
    double p_hat = 0.0;           // fraction of samples below the line
    double std_err = 0.0;         // sqrt(p_hat (1 - p_hat) / samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Sampler sampler = Sampler::sort;
};

// Draws the order statistics of n uniforms into `out` (resized to n),
// sorted ascending, all values in (0,1).
void sample_order_stats(std::int64_t n, CounterRng& rng, Sampler sampler,
                        std::vector<double>& out);

// True iff the sorted sample satisfies xi_j >= (j - u)/v for every
// j = 1..n, i.e. its EDF stays weakly below the line (v t + u)/n.  Ties
// count as staying below.  Throws std::domain_error on length mismatch.
bool stays_below(const Boundary& boundary, std::span<const double> sorted_sample);

// One-sided Smirnov statistic sqrt(n) max_j (j/n - xi_j), floored at 0.
// Throws std::domain_error on an empty sample.
double d_plus(std::span<const double> sorted_sample);

// Unbiased estimate of Q_n(u,v) from `samples` independent draws.  The
// sample index space is split statically into `workers` partitions; each
// partition consumes its own counter-based stream derived from
// (seed, partition index), so results are bit-identical for a fixed
// (seed, workers) pair regardless of scheduling.  Changing `workers`
// reassigns streams and may change the estimate within noise.
McEstimate estimate_q(const Boundary& boundary, std::uint64_t samples,
                      std::uint64_t seed, Sampler sampler,
                      unsigned workers = 1);

}  // namespace ksb

#endif  // KSB_MONTECARLO_HPP
