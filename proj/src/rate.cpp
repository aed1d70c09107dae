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

#include "rfthz/rate.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rfthz/errors.hpp"

namespace rfthz {

Assignment Assignment::from_serving(std::vector<std::optional<int>> serving, int n_bs) {
    Assignment a;
    a.serving_bs = std::move(serving);
    a.load.assign(static_cast<std::size_t>(n_bs), 0);
    for (const auto& s : a.serving_bs) {
        if (s) ++a.load.at(static_cast<std::size_t>(*s));
    }
    return a;
}

bool Assignment::load_consistent() const {
    std::vector<int> hist(load.size(), 0);
    for (const auto& s : serving_bs) {
        if (!s) continue;
        if (*s < 0 || static_cast<std::size_t>(*s) >= hist.size()) return false;
        ++hist[static_cast<std::size_t>(*s)];
    }
    return hist == load;
}

int Assignment::unassociated_count() const {
    int n = 0;
    for (const auto& s : serving_bs) n += s ? 0 : 1;
    return n;
}

double tier_bandwidth(const NetworkConfig& cfg, Tier tier) {
    return tier == Tier::kRf ? cfg.w_rf_hz : cfg.w_thz_hz;
}

double single_user_rate(double sinr, double w_hz) { return w_hz * std::log2(1.0 + sinr); }

RateVector shared_rates(const Assignment& assign, const SinrMatrix& sinr, const NetworkConfig& cfg) {
    if (assign.serving_bs.size() != sinr.sinr.rows() || assign.load.size() != sinr.sinr.cols()) {
        throw DimensionMismatch(fmt::format("assignment {}x{} vs sinr {}x{}", assign.serving_bs.size(),
                                            assign.load.size(), sinr.sinr.rows(), sinr.sinr.cols()));
    }
    RateVector out;
    out.rate_bps.assign(assign.serving_bs.size(), 0.0);
    out.tier.assign(assign.serving_bs.size(), std::nullopt);
    for (std::size_t u = 0; u < assign.serving_bs.size(); ++u) {
        if (!assign.serving_bs[u]) continue;
        const auto b = static_cast<std::size_t>(*assign.serving_bs[u]);
        const Tier tier = sinr.bs_tier[b];
        const double share = tier_bandwidth(cfg, tier) / assign.load[b];
        out.rate_bps[u] = single_user_rate(sinr.sinr(u, b), share);
        out.tier[u] = tier;
    }
    return out;
}

}  // namespace rfthz
