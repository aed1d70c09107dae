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

#include "rfthz/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rfthz {

double load_std(std::span<const int> load) {
    if (load.empty()) return 0.0;
    const double n = static_cast<double>(load.size());
    const double mean = std::accumulate(load.begin(), load.end(), 0.0) / n;
    double ss = 0.0;
    for (int l : load) ss += (l - mean) * (l - mean);
    return std::sqrt(ss / n);
}

double jain_index(std::span<const double> x) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : x) {
        sum += v;
        sum_sq += v * v;
    }
    if (x.empty() || sum_sq == 0.0) return 0.0;
    return sum * sum / (static_cast<double>(x.size()) * sum_sq);
}

namespace {

double tier_load_std(const Assignment& a, const SinrMatrix& s, Tier tier) {
    std::vector<int> sub;
    for (std::size_t b = 0; b < a.load.size(); ++b) {
        if (s.bs_tier[b] == tier) sub.push_back(a.load[b]);
    }
    return load_std(sub);
}

}  // namespace

MetricsReport compute_metrics(const Assignment& assign, const RateVector& rates, const SinrMatrix& sinr) {
    MetricsReport m;
    m.load_std = load_std(assign.load);
    m.load_std_rf = tier_load_std(assign, sinr, Tier::kRf);
    m.load_std_thz = tier_load_std(assign, sinr, Tier::kThz);

    const auto& r = rates.rate_bps;
    m.jain = jain_index(r);
    std::vector<double> served;
    for (std::size_t u = 0; u < r.size(); ++u) {
        if (assign.serving_bs[u]) served.push_back(r[u]);
        if (rates.tier[u] == Tier::kThz) ++m.thz_served_count;
    }
    m.jain_served = jain_index(served);
    std::vector<double> load(assign.load.begin(), assign.load.end());
    m.jain_load = jain_index(load);

    m.sum_rate = std::accumulate(r.begin(), r.end(), 0.0);
    m.mean_rate = r.empty() ? 0.0 : m.sum_rate / static_cast<double>(r.size());
    if (!r.empty()) {
        std::vector<double> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        const auto rank = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(sorted.size())));
        m.p5_rate = sorted[std::max<std::size_t>(rank, 1) - 1];
    }
    m.unassociated_count = assign.unassociated_count();
    m.convergence_trace = assign.trace;
    return m;
}

void to_json(nlohmann::json& j, const MetricsReport& m) {
    j = {{"load_std", m.load_std},
         {"load_std_rf", m.load_std_rf},
         {"load_std_thz", m.load_std_thz},
         {"jain", m.jain},
         {"jain_served", m.jain_served},
         {"jain_load", m.jain_load},
         {"mean_rate", m.mean_rate},
         {"sum_rate", m.sum_rate},
         {"p5_rate", m.p5_rate},
         {"unassociated_count", m.unassociated_count},
         {"thz_served_count", m.thz_served_count},
         {"convergence_trace", m.convergence_trace}};
}

}  // namespace rfthz
