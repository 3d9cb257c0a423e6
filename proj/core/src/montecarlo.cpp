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

#include "ksb/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace ksb {

std::string_view sampler_name(Sampler s) {
    return s == Sampler::sort ? "sort" : "spacings";
}

void sample_order_stats(std::int64_t n, CounterRng& rng, Sampler sampler,
                        std::vector<double>& out) {
    if (n < 1) {
        throw std::domain_error("sample_order_stats: n must be >= 1");
    }
    out.resize(static_cast<std::size_t>(n));
    if (sampler == Sampler::sort) {
        for (auto& x : out) x = rng.uniform();
        std::sort(out.begin(), out.end());
        return;
    }
    // Renyi: the order statistics of n uniforms are distributed as the
    // first n normalized partial sums of n+1 unit exponentials.
    double sum = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        sum += rng.exponential();
        out[static_cast<std::size_t>(k)] = sum;
    }
    sum += rng.exponential();
    for (auto& x : out) x /= sum;
}

bool stays_below(const Boundary& boundary,
                 std::span<const double> sorted_sample) {
    if (static_cast<std::int64_t>(sorted_sample.size()) != boundary.n) {
        throw std::domain_error(
            "stays_below: sample length " +
            std::to_string(sorted_sample.size()) + " != n = " +
            std::to_string(boundary.n));
    }
    // The constraint xi_j >= (j-u)/v is vacuous while j <= u.
    const std::int64_t first =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                      std::floor(boundary.u)) + 1);
    for (std::int64_t j = first; j <= boundary.n; ++j) {
        const double line = (static_cast<double>(j) - boundary.u) / boundary.v;
        if (sorted_sample[static_cast<std::size_t>(j - 1)] < line) {
            return false;
        }
    }
    return true;
}

double d_plus(std::span<const double> sorted_sample) {
    if (sorted_sample.empty()) {
        throw std::domain_error("d_plus: sample must be nonempty");
    }
    const double n = static_cast<double>(sorted_sample.size());
    double worst = 0.0;
    for (std::size_t j = 0; j < sorted_sample.size(); ++j) {
        worst = std::max(worst,
                         static_cast<double>(j + 1) / n - sorted_sample[j]);
    }
    return std::sqrt(n) * worst;
}

McEstimate estimate_q(const Boundary& boundary, std::uint64_t samples,
                      std::uint64_t seed, Sampler sampler, unsigned workers) {
    boundary.validate();
    if (samples < 1) {
        throw std::domain_error("estimate_q: samples must be >= 1");
    }
    if (workers < 1) workers = 1;
    if (workers > samples) workers = static_cast<unsigned>(samples);

    // Static partition of the sample index space; partition p owns the
    // Philox stream (seed, p).  Counts are exact integers merged in
    // partition order, so the result is a pure function of
    // (boundary, samples, seed, sampler, workers).
    std::vector<std::uint64_t> hits(workers, 0);
    const std::uint64_t base = samples / workers;
    const std::uint64_t extra = samples % workers;

    auto run_partition = [&](unsigned p) {
        const std::uint64_t quota = base + (p < extra ? 1 : 0);
        CounterRng rng(seed, p);
        std::vector<double> sample;
        std::uint64_t count = 0;
        for (std::uint64_t i = 0; i < quota; ++i) {
            sample_order_stats(boundary.n, rng, sampler, sample);
            count += stays_below(boundary, sample) ? 1 : 0;
        }
        hits[p] = count;
    };

    if (workers == 1) {
        run_partition(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned p = 0; p < workers; ++p) {
            pool.emplace_back(run_partition, p);
        }
        for (auto& t : pool) t.join();
    }

    std::uint64_t total = 0;
    for (const auto h : hits) total += h;

    McEstimate estimate;
    estimate.p_hat = static_cast<double>(total) / static_cast<double>(samples);
    estimate.std_err = std::sqrt(estimate.p_hat * (1.0 - estimate.p_hat) /
                                 static_cast<double>(samples));
    estimate.samples = samples;
    estimate.seed = seed;
    estimate.sampler = sampler;
    return estimate;
}

}  // namespace ksb
