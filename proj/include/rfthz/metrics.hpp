// SPDX-License-Identifier: Apache-2.0
//
// rfthz: user association simulator for coexisting RF / THz downlink networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "rfthz/assignment.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/rate.hpp"

namespace rfthz {

/// Population standard deviation of a per-BS load vector. Empty input gives 0.
double load_std(std::span<const int> load);

/// Jain's index (sum x)^2 / (n sum x^2). Defined as 0 for an all-zero or
/// empty input.
double jain_index(std::span<const double> x);

struct MetricsReport {
    double load_std = 0.0;  // pooled over both tiers
    double load_std_rf = 0.0;
    double load_std_thz = 0.0;
    double jain = 0.0;         // over all UEs, unassociated ones at rate 0
    double jain_served = 0.0;  // over associated UEs only
    double jain_load = 0.0;    // over the per-BS load vector
    double mean_rate = 0.0;    // over all UEs
    double sum_rate = 0.0;
    double p5_rate = 0.0;  // nearest-rank 5th percentile over all UEs
    int unassociated_count = 0;
    int thz_served_count = 0;
    std::vector<double> convergence_trace;
};

MetricsReport compute_metrics(const Assignment& assign, const RateVector& rates, const SinrMatrix& sinr);

void to_json(nlohmann::json& j, const MetricsReport& m);

}  // namespace rfthz
