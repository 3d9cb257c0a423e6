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

#ifndef KSB_STUDY_HPP
#define KSB_STUDY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "ksb/boundary.hpp"

namespace ksb {

// One grid point of the approximation-error study: exact value next to
// the approximations, plus their scaled errors.  scaled_err_t1 is
// n |q_exact - q_t1| / (u + w), the empirical constant of the first-order
// estimate; scaled_err_t2 is |q_exact - q_t2| divided by the sharper
// estimate's error-bound scale, present only where that estimate is
// valid.  When the boundary reduces to the Smirnov case v = n, the row
// also carries the second-order value and the correction ratio
// (q_exact - smirnov_limit) / (e^{-2 lambda^2} 2 lambda / (3 sqrt n)).
struct StudyRow {
    std::int64_t n = 0;
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    double q_exact = 0.0;
    double q_t1 = 0.0;
    std::optional<double> q_t2;
    double q_bridge = 0.0;
    double scaled_err_t1 = 0.0;
    std::optional<double> scaled_err_t2;
    std::optional<double> q_smirnov2;
    std::optional<double> smirnov2_ratio;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    // s(n) = max scaled_err_t1 over the grid points at each n.
    std::map<std::int64_t, double> s_by_n;
};

// Evaluates the full cross product of the three lists.  Each (n, u, w)
// defines v = n + w - u; requires u > 0, w > 0 and the resulting v > 0.
StudyResult run_study(std::span<const std::int64_t> n_list,
                      std::span<const double> u_list,
                      std::span<const double> w_list);

// CSV with the fixed header
//   n,u,v,w,q_exact,q_t1,q_t2,q_bridge,scaled_err_t1,scaled_err_t2
// Missing optional fields render as empty.  Numbers are written in the
// shortest form that round-trips (locale-independent).
void write_study_csv(const StudyResult& result, std::ostream& out);

// Shortest round-tripping decimal form of a double (std::to_chars).
std::string format_double(double x);

}  // namespace ksb

#endif  // KSB_STUDY_HPP
