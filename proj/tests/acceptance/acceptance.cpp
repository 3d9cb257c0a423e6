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

// Acceptance suite: every release-gating check in one binary, one
// pass/fail line per criterion.  Run with no arguments for the full
// suite, or pass criterion numbers to run a subset.  The Theorem-1 rate
// study is written out as acceptance_theorem1_study.csv plus a JSON
// summary next to it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ksb/asymptotic.hpp"
#include "ksb/density.hpp"
#include "ksb/exact.hpp"
#include "ksb/montecarlo.hpp"
#include "ksb/reflection.hpp"
#include "ksb/study.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << message;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) { return ksb::format_double(x); }

// ---- 1. Exact-formula overlap -------------------------------------------

Outcome criterion_overlap() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (const std::int64_t n : {2, 5, 10, 50, 200}) {
        for (const double u : {0.25, 0.5, 1.0}) {
            for (const double w : {0.5, 1.0, 2.0, 5.0}) {
                const ksb::Boundary boundary{n, u,
                                             static_cast<double>(n) + w - u};
                worst = std::max(worst,
                                 std::fabs(ksb::q_daniels(boundary).value -
                                           ksb::q_pyke(boundary).value));
            }
        }
    }
    const double elapsed = seconds_since(start);
    Check check;
    check.require(worst <= 1e-10, "max |daniels - pyke| = " + fmt(worst));
    check.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s >= 1 s");
    return {check.ok, "max |daniels - pyke| = " + fmt(worst) + ", " +
                          fmt(elapsed) + " s"};
}

// ---- 2. Small-n analytic oracle ------------------------------------------

Outcome criterion_small_n() {
    Check check;
    const double q2 = ksb::q_exact({2, 0.5, 2.5}).value;
    check.require(std::fabs(q2 - 0.48) <= 1e-12,
                  "Q_2(0.5, 2.5) = " + fmt(q2) + " != 0.48");

    std::mt19937_64 gen(1939);
    std::uniform_real_distribution<double> pick_u(0.01, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double u = pick_u(gen);
        std::uniform_real_distribution<double> pick_v(1.0 - u + 0.05, 6.0);
        const double v = pick_v(gen);
        const double expected = 1.0 - (1.0 - u) / v;
        worst = std::max(worst,
                         std::fabs(ksb::q_exact({1, u, v}).value - expected));
    }
    check.require(worst <= 1e-12,
                  "n=1 closed-form max error = " + fmt(worst));
    return {check.ok, "n=2 point exact, n=1 grid max err = " + fmt(worst)};
}

// ---- 3. Monte Carlo consistency ------------------------------------------

Outcome criterion_monte_carlo() {
    const auto start = Clock::now();
    Check check;
    std::ostringstream seen;
    for (const auto& [n, u, w] :
         {std::tuple{10L, 2.0, 2.0}, std::tuple{100L, 5.0, 5.0},
          std::tuple{1000L, 20.0, 30.0}}) {
        const ksb::Boundary boundary{n, u, static_cast<double>(n) + w - u};
        const double expected = ksb::q_exact(boundary).value;
        for (const auto sampler :
             {ksb::Sampler::sort, ksb::Sampler::spacings}) {
            const auto est =
                ksb::estimate_q(boundary, 1000000, 1939, sampler, 4);
            const double gap = std::fabs(est.p_hat - expected);
            check.require(gap <= 4.0 * est.std_err,
                          "n=" + std::to_string(n) + " " +
                              std::string(ksb::sampler_name(sampler)) +
                              ": |p_hat - q| = " + fmt(gap) + " > 4se = " +
                              fmt(4.0 * est.std_err));
        }
        seen << " n=" << n << " q=" << fmt(expected);
    }
    const double elapsed = seconds_since(start);
    check.require(elapsed < 120.0, "runtime " + fmt(elapsed) + " s >= 120 s");
    return {check.ok, "3 boundaries x 2 samplers at N=1e6 within 4se," +
                          seen.str() + ", " + fmt(elapsed) + " s"};
}

// ---- 4. Reflection oracle -------------------------------------------------

Outcome criterion_reflection() {
    const auto start = Clock::now();
    Check check;
    double worst_gap = 0.0, worst_conv = 0.0, worst_a = 0.0;
    int points = 0;
    for (const std::int64_t n : {1, 2, 5, 10, 20, 40}) {
        for (const double u : {0.5, 1.0, 2.0, 4.0}) {
            for (const double w : {0.5, 1.0, 3.0}) {
                const double v = static_cast<double>(n) + w - u;
                if (!(v > 0.0)) continue;  // not a valid boundary
                const ksb::Boundary boundary{n, u, v};
                ++points;
                const double q64 = ksb::q_via_reflection(boundary, 64).value;
                const double q128 = ksb::q_via_reflection(boundary, 128).value;
                const double qa2 =
                    ksb::q_via_reflection(boundary, 64, 2.0).value;
                const double exact = ksb::q_exact(boundary).value;
                worst_gap = std::max(worst_gap, std::fabs(q64 - exact));
                worst_conv = std::max(worst_conv, std::fabs(q128 - q64));
                worst_a = std::max(worst_a, std::fabs(qa2 - q64));
            }
        }
    }
    const double elapsed = seconds_since(start);
    check.require(worst_gap <= 1e-6,
                  "max |reflection - exact| = " + fmt(worst_gap));
    check.require(worst_conv <= 1e-8,
                  "max G=64->128 delta = " + fmt(worst_conv));
    check.require(worst_a <= 1e-8, "max a=1 vs a=2 delta = " + fmt(worst_a));
    check.require(elapsed < 300.0, "runtime " + fmt(elapsed) + " s >= 300 s");
    return {check.ok, std::to_string(points) + " boundaries: |refl-exact| <= " +
                          fmt(worst_gap) + ", grid delta <= " +
                          fmt(worst_conv) + ", a delta <= " + fmt(worst_a) +
                          ", " + fmt(elapsed) + " s"};
}

// ---- 5. Smirnov limit ------------------------------------------------------

Outcome criterion_smirnov_limit() {
    Check check;
    const double limit = ksb::smirnov_limit(1.0);
    std::vector<double> errors;
    std::ostringstream seen;
    for (const std::int64_t n : {100, 400, 1600}) {
        const double u = std::sqrt(static_cast<double>(n));
        const double q = ksb::q_exact({n, u, static_cast<double>(n)}).value;
        errors.push_back(std::fabs(q - limit));
        seen << " err(" << n << ")=" << fmt(errors.back());
    }
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        check.require(errors[i + 1] < errors[i],
                      "error did not decrease at step " + std::to_string(i));
        check.require(errors[i] >= 1.5 * errors[i + 1],
                      "decay factor " + fmt(errors[i] / errors[i + 1]) +
                          " < 1.5 per quadrupling");
    }
    return {check.ok, "lambda=1 convergence:" + seen.str()};
}

// ---- 6. Smirnov second order ----------------------------------------------

Outcome criterion_smirnov_second_order() {
    Check check;
    std::ostringstream seen;
    for (const std::int64_t n : {400, 1600, 6400}) {
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        const double q =
            ksb::q_exact({n, sqrt_n, static_cast<double>(n)}).value;
        const double ratio = (q - (1.0 - std::exp(-2.0))) /
                             (std::exp(-2.0) * 2.0 / (3.0 * sqrt_n));
        seen << " ratio(" << n << ")=" << fmt(ratio);
        check.require(ratio >= 0.8 && ratio <= 1.2,
                      "ratio at n=" + std::to_string(n) + " is " + fmt(ratio));
    }
    return {check.ok, "correction ratios in [0.8, 1.2]:" + seen.str()};
}

// ---- 7. Theorem 1 rate ------------------------------------------------------

std::vector<double> rate_grid(std::int64_t n) {
    return {1.0, 2.0, 5.0, 10.0,
            std::ceil(std::sqrt(static_cast<double>(n)))};
}

Outcome criterion_theorem1_rate() {
    Check check;
    std::map<std::int64_t, double> s;
    ksb::StudyResult merged;
    for (const std::int64_t n : {200, 400, 800, 1600, 3200}) {
        const std::int64_t ns[] = {n};
        const auto grid = rate_grid(n);
        const auto result = ksb::run_study(ns, grid, grid);
        s[n] = result.s_by_n.at(n);
        merged.rows.insert(merged.rows.end(), result.rows.begin(),
                           result.rows.end());
        merged.s_by_n[n] = s[n];
    }

    // Record the study artifact next to the binary.
    {
        std::ofstream csv("acceptance_theorem1_study.csv");
        ksb::write_study_csv(merged, csv);
        std::ofstream summary("acceptance_theorem1_summary.json");
        summary << "{\"s_by_n\":{";
        bool first = true;
        for (const auto& [n, value] : merged.s_by_n) {
            if (!first) summary << ",";
            first = false;
            summary << "\"" << n << "\":" << fmt(value);
        }
        summary << "}}\n";
    }

    std::ostringstream seen;
    for (const auto& [n, value] : s) seen << " s(" << n << ")=" << fmt(value);
    for (const std::int64_t n : {200, 400, 800, 1600}) {
        check.require(s.at(2 * n) <= 1.25 * s.at(n),
                      "s(" + std::to_string(2 * n) + ") = " + fmt(s.at(2 * n)) +
                          " > 1.25 s(" + std::to_string(n) + ") = 1.25 * " +
                          fmt(s.at(n)));
    }
    return {check.ok,
            "artifact acceptance_theorem1_study.csv;" + seen.str()};
}

// ---- 8. Theorem 2 rate ------------------------------------------------------

Outcome criterion_theorem2_rate() {
    Check check;

    const auto in_range = [](std::int64_t n, double u, double w) {
        const double dn = static_cast<double>(n);
        return u >= 1.0 && u <= dn / 10.0 && w >= 1.0 && w <= dn / 10.0;
    };
    const auto max_ratio = [&](std::int64_t n) {
        double worst = 0.0;
        for (const double u : rate_grid(n)) {
            for (const double w : rate_grid(n)) {
                if (!in_range(n, u, w)) continue;
                const ksb::Boundary boundary{n, u,
                                             static_cast<double>(n) + w - u};
                const auto t2 = ksb::q_theorem2(boundary);
                worst = std::max(
                    worst, std::fabs(ksb::q_exact(boundary).value - t2.value) /
                               *t2.error_bound);
            }
        }
        return worst;
    };

    const double c2 = max_ratio(200);
    std::ostringstream seen;
    seen << "C2(200)=" << fmt(c2);
    for (const std::int64_t n : {400, 800, 1600, 3200}) {
        const double ratio = max_ratio(n);
        seen << " ratio(" << n << ")=" << fmt(ratio);
        check.require(ratio <= c2,
                      "max|q_exact-q_t2|/bound at n=" + std::to_string(n) +
                          " is " + fmt(ratio) + " > calibrated C2 = " +
                          fmt(c2));
    }

    // Dominance where w >= sqrt(n).
    int total = 0, wins = 0;
    for (const std::int64_t n : {200, 400, 800, 1600, 3200}) {
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        for (const double u : rate_grid(n)) {
            for (const double w : rate_grid(n)) {
                if (!in_range(n, u, w) || w < sqrt_n) continue;
                const ksb::Boundary boundary{n, u,
                                             static_cast<double>(n) + w - u};
                const double exact = ksb::q_exact(boundary).value;
                const double e2 =
                    std::fabs(exact - ksb::q_theorem2(boundary).value);
                const double e1 =
                    std::fabs(exact - ksb::q_theorem1(boundary).value);
                ++total;
                wins += e2 <= e1 ? 1 : 0;
            }
        }
    }
    const double share =
        total > 0 ? static_cast<double>(wins) / total : 0.0;
    seen << " dominance=" << wins << "/" << total;
    check.require(share >= 0.9,
                  "theorem2 beats theorem1 on only " + std::to_string(wins) +
                      "/" + std::to_string(total) +
                      " points with w >= sqrt(n)");
    return {check.ok, seen.str() +
                          (check.ok ? "" : " [" + check.detail.str() + "]")};
}

// ---- 9. Barrier-shift solver -------------------------------------------------

Outcome criterion_solver() {
    Check check;
    double worst_residual = 0.0;
    for (const std::int64_t n : {20, 50, 100, 400, 1600, 3200}) {
        const double dn = static_cast<double>(n);
        for (const double z :
             {0.25, 1.0, 2.0, 5.0, std::sqrt(dn), dn / 10.0}) {
            const auto shift = ksb::solve_b(n, z);
            worst_residual = std::max(worst_residual,
                                      std::fabs(shift.residual));
            if (n >= 20 && z <= dn / 10.0) {
                check.require(shift.b <= z / 3.0 + 1e-12,
                              "b(" + std::to_string(n) + ", " + fmt(z) +
                                  ") = " + fmt(shift.b) + " > z/3");
            }
        }
    }
    check.require(worst_residual <= 1e-12,
                  "max residual = " + fmt(worst_residual));

    std::vector<double> constants;
    std::ostringstream seen;
    for (const std::int64_t n : {100, 200, 400, 800, 1600}) {
        const double dn = static_cast<double>(n);
        double worst = 0.0;
        for (const double z : {1.0, 2.0, 5.0, std::sqrt(dn)}) {
            const double gap =
                std::fabs(ksb::solve_b(n, z).b - ksb::b_asymptotic(n, z));
            worst = std::max(worst, gap * dn * dn / (z * z * z));
        }
        constants.push_back(worst);
        seen << " K(" << n << ")=" << fmt(worst);
    }
    for (std::size_t i = 0; i + 1 < constants.size(); ++i) {
        check.require(constants[i + 1] <= 1.5 * constants[i] &&
                          constants[i + 1] >= constants[i] / 1.5,
                      "asymptotic constant unstable across a doubling");
    }
    return {check.ok, "max residual = " + fmt(worst_residual) + ";" +
                          seen.str()};
}

// ---- 10. Density suite --------------------------------------------------------

double simpson(const std::function<double(double)>& fn, double lo, double hi,
               int panels) {
    const double h = (hi - lo) / (2.0 * panels);
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < 2 * panels; i += 2) odd += fn(lo + i * h);
    for (int i = 2; i < 2 * panels; i += 2) even += fn(lo + i * h);
    return h / 3.0 * (fn(lo) + fn(hi) + 4.0 * odd + 2.0 * even);
}

Outcome criterion_density() {
    Check check;
    double worst_mass = 0.0;
    for (const std::int64_t n : {1, 2, 5, 20, 50}) {
        const double lo =
            -(12.0 * std::sqrt(static_cast<double>(n)) + 45.0);
        const double mass = simpson([n](double x) { return ksb::f(n, x); },
                                    lo, static_cast<double>(n), 1 << 17);
        worst_mass = std::max(worst_mass, std::fabs(mass - 1.0));
    }
    check.require(worst_mass <= 1e-9,
                  "normalization off by " + fmt(worst_mass));

    double worst_rel = 0.0;
    const double h = 1e-5;
    for (const std::int64_t n : {2, 5, 20, 50}) {
        const double span = std::sqrt(static_cast<double>(n));
        for (int i = 0; i <= 60; ++i) {
            const double x = -0.95 * span + i * (1.9 * span / 60.0);
            if (std::fabs(x - 1.0) < 0.05) continue;
            const double fd = (ksb::f(n, x + h) - ksb::f(n, x - h)) / (2.0 * h);
            const double expected =
                (1.0 - x) / (static_cast<double>(n) - x) * ksb::f(n, x);
            worst_rel = std::max(worst_rel, std::fabs(fd - expected) /
                                                std::fabs(expected));
        }
    }
    check.require(worst_rel <= 1e-6,
                  "derivative relation rel err = " + fmt(worst_rel));

    for (const std::int64_t n : {2, 10, 100}) {
        double prev = -1.0;
        bool up_ok = true, dom_ok = true;
        for (double x = -10.0; x <= 1.0; x += 0.05) {
            const double cur = ksb::f(n, x);
            up_ok = up_ok && cur >= prev * (1.0 - 1e-12);
            prev = cur;
        }
        double prev_down = ksb::f(n, 1.0);
        for (double x = 1.05; x <= static_cast<double>(n); x += 0.05) {
            const double cur = ksb::f(n, x);
            up_ok = up_ok && cur <= prev_down * (1.0 + 1e-12);
            prev_down = cur;
        }
        for (double x = 0.0; x <= 5.0; x += 0.1) {
            dom_ok = dom_ok &&
                     ksb::f(n, 1.0 + x) <= ksb::f(n, 1.0 - x) * (1.0 + 1e-12) +
                                               1e-300;
        }
        check.require(up_ok, "unimodality violated at n=" + std::to_string(n));
        check.require(dom_ok, "domination violated at n=" + std::to_string(n));
    }

    const double scaled =
        ksb::f(10000, 1.0) * std::sqrt(2.0 * 3.14159265358979323846 * 1e4);
    check.require(scaled >= 0.98 && scaled <= 1.02,
                  "f_n(1) sqrt(2 pi n) = " + fmt(scaled));
    return {check.ok, "normalization off by " + fmt(worst_mass) +
                          ", derivative rel err " + fmt(worst_rel) +
                          ", mode height " + fmt(scaled)};
}

// ---- 11. Performance ---------------------------------------------------------

Outcome criterion_performance() {
    Check check;
    const auto pyke_start = Clock::now();
    const auto result = ksb::q_pyke({1000000, 500.5, 1000000.0});
    const double pyke_elapsed = seconds_since(pyke_start);
    check.require(pyke_elapsed < 2.0,
                  "q_pyke at n=1e6 took " + fmt(pyke_elapsed) + " s");
    check.require(result.value >= 0.0 && result.value <= 1.0,
                  "q_pyke value out of range");

    const auto mc_start = Clock::now();
    const auto estimate = ksb::estimate_q({100, 5.0, 100.0}, 1000000, 1939,
                                          ksb::Sampler::spacings, 4);
    const double mc_elapsed = seconds_since(mc_start);
    check.require(mc_elapsed < 30.0, "estimate_q at n=100, N=1e6 took " +
                                         fmt(mc_elapsed) + " s");
    check.require(estimate.samples == 1000000, "sample count mismatch");
    return {check.ok, "q_pyke(n=1e6) " + fmt(pyke_elapsed) +
                          " s, estimate_q(n=100, N=1e6, 4 workers) " +
                          fmt(mc_elapsed) + " s"};
}

struct Criterion {
    int index;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "exact-formula overlap", criterion_overlap},
        {2, "small-n analytic oracle", criterion_small_n},
        {3, "monte carlo consistency", criterion_monte_carlo},
        {4, "reflection oracle", criterion_reflection},
        {5, "smirnov limit convergence", criterion_smirnov_limit},
        {6, "smirnov second-order ratio", criterion_smirnov_second_order},
        {7, "theorem-1 error rate", criterion_theorem1_rate},
        {8, "theorem-2 error rate and dominance", criterion_theorem2_rate},
        {9, "barrier-shift solver", criterion_solver},
        {10, "density suite", criterion_density},
        {11, "performance", criterion_performance},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }

    int failures = 0;
    for (const auto& criterion : criteria()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.index) ==
                selected.end()) {
            continue;
        }
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %2d: %s — %s\n",
                    outcome.pass ? "PASS" : "FAIL", criterion.index,
                    criterion.name, outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
