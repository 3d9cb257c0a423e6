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

#include "ksb/study.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <system_error>

#include "ksb/asymptotic.hpp"
#include "ksb/exact.hpp"

namespace ksb {

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: to_chars failed");
    }
    return std::string(buf, ptr);
}

StudyResult run_study(std::span<const std::int64_t> n_list,
                      std::span<const double> u_list,
                      std::span<const double> w_list) {
    if (n_list.empty() || u_list.empty() || w_list.empty()) {
        throw std::domain_error("run_study: all three grid lists must be nonempty");
    }

    StudyResult result;
    result.rows.reserve(n_list.size() * u_list.size() * w_list.size());
    for (const auto n : n_list) {
        double s_max = 0.0;
        for (const auto u : u_list) {
            for (const auto w : w_list) {
                if (!(u > 0.0) || !(w > 0.0)) {
                    throw std::domain_error(
                        "run_study: grid values u and w must be > 0");
                }
                const double v = static_cast<double>(n) + w - u;
                if (!(v > 0.0)) {
                    throw std::domain_error(
                        "run_study: grid point (n=" + std::to_string(n) +
                        ", u=" + format_double(u) + ", w=" + format_double(w) +
                        ") gives v <= 0");
                }
                const Boundary boundary{n, u, v};

                StudyRow row;
                row.n = n;
                row.u = u;
                row.v = v;
                row.w = boundary.w();
                row.q_exact = q_exact(boundary).value;
                const auto t1 = q_theorem1(boundary);
                row.q_t1 = t1.value;
                row.q_bridge = q_bridge(boundary).value;
                row.scaled_err_t1 = static_cast<double>(n) *
                                    std::fabs(row.q_exact - row.q_t1) /
                                    (u + row.w);
                s_max = std::max(s_max, row.scaled_err_t1);

                const double dn = static_cast<double>(n);
                if (u >= 1.0 && u <= dn / 10.0 && row.w >= 1.0 &&
                    row.w <= dn / 10.0) {
                    const auto t2 = q_theorem2(boundary);
                    row.q_t2 = t2.value;
                    row.scaled_err_t2 =
                        std::fabs(row.q_exact - t2.value) / *t2.error_bound;
                }

                if (u == w) {  // v = n: the Smirnov case
                    const double lambda = u / std::sqrt(dn);
                    row.q_smirnov2 =
                        smirnov_second_order({n, lambda}).value;
                    const double correction = std::exp(-2.0 * lambda * lambda) *
                                              2.0 * lambda /
                                              (3.0 * std::sqrt(dn));
                    row.smirnov2_ratio =
                        (row.q_exact - smirnov_limit(lambda)) / correction;
                }
                result.rows.push_back(row);
            }
        }
        result.s_by_n[n] = s_max;
    }
    return result;
}

void write_study_csv(const StudyResult& result, std::ostream& out) {
    out << "n,u,v,w,q_exact,q_t1,q_t2,q_bridge,scaled_err_t1,scaled_err_t2\n";
    for (const auto& row : result.rows) {
        out << row.n << ',' << format_double(row.u) << ','
            << format_double(row.v) << ',' << format_double(row.w) << ','
            << format_double(row.q_exact) << ',' << format_double(row.q_t1)
            << ',' << (row.q_t2 ? format_double(*row.q_t2) : std::string{})
            << ',' << format_double(row.q_bridge) << ','
            << format_double(row.scaled_err_t1) << ','
            << (row.scaled_err_t2 ? format_double(*row.scaled_err_t2)
                                  : std::string{})
            << '\n';
    }
}

}  // namespace ksb
