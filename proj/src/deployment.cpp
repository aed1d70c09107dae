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

#include "rfthz/deployment.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rfthz/errors.hpp"
#include "rfthz/hash.hpp"
#include "rfthz/random.hpp"

namespace rfthz {

double distance(const BaseStation& b, const UserEquipment& u) {
    return std::hypot(b.x_m - u.x_m, b.y_m - u.y_m);
}

double distance(const BaseStation& a, const BaseStation& b) {
    return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m);
}

double link_distance(const BaseStation& b, const UserEquipment& u) {
    return std::max(distance(b, u), kMinLinkDistanceM);
}

namespace {

void place_tier(std::vector<BaseStation>& out, Tier tier, int count, double min_dist,
                const NetworkConfig& cfg, Rng& rng) {
    const std::size_t first = out.size();
    for (int i = 0; i < count; ++i) {
        BaseStation cand{static_cast<int>(out.size()), tier, 0.0, 0.0};
        int attempts = 0;
        for (;;) {
            if (attempts++ >= cfg.placement_attempt_cap) {
                throw PlacementInfeasible(fmt::format(
                    "{} BS {} of {}: no position at >= {} m from its tier after {} attempts",
                    to_string(tier), i, count, min_dist, cfg.placement_attempt_cap));
            }
            cand.x_m = rng.uniform(0.0, cfg.area_side_m);
            cand.y_m = rng.uniform(0.0, cfg.area_side_m);
            const bool clear = std::all_of(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                                           [&](const BaseStation& o) { return distance(o, cand) >= min_dist; });
            if (clear) break;
        }
        out.push_back(cand);
    }
}

}  // namespace

Deployment generate_deployment(const NetworkConfig& cfg, std::uint64_t trial) {
    validate(cfg);
    Deployment d;
    d.bs.reserve(static_cast<std::size_t>(cfg.n_bs()));
    Rng rf_rng(cfg.seed, Stream::kRfPlacement, trial);
    Rng thz_rng(cfg.seed, Stream::kThzPlacement, trial);
    place_tier(d.bs, Tier::kRf, cfg.n_mbs, cfg.min_dist_rf_m, cfg, rf_rng);
    place_tier(d.bs, Tier::kThz, cfg.n_tbs, cfg.min_dist_thz_m, cfg, thz_rng);

    Rng ue_rng(cfg.seed, Stream::kUePlacement, trial);
    d.ue.reserve(static_cast<std::size_t>(cfg.n_ue));
    for (int u = 0; u < cfg.n_ue; ++u) {
        const double x = ue_rng.uniform(0.0, cfg.area_side_m);
        const double y = ue_rng.uniform(0.0, cfg.area_side_m);
        d.ue.push_back({u, x, y});
    }
    return d;
}

std::vector<Violation> validate_deployment(const Deployment& d, const NetworkConfig& cfg) {
    std::vector<Violation> out;
    auto in_area = [&](double x, double y) {
        return x >= 0.0 && x <= cfg.area_side_m && y >= 0.0 && y <= cfg.area_side_m;
    };

    for (std::size_t i = 0; i < d.bs.size(); ++i) {
        const auto& b = d.bs[i];
        if (b.id != static_cast<int>(i)) out.push_back({"bs ids must be dense 0..B-1", {b.id}});
        if (!in_area(b.x_m, b.y_m)) out.push_back({"bs outside working area", {b.id}});
    }
    for (std::size_t i = 0; i < d.ue.size(); ++i) {
        const auto& u = d.ue[i];
        if (u.id != static_cast<int>(i)) out.push_back({"ue ids must be dense 0..U-1", {u.id}});
        if (!in_area(u.x_m, u.y_m)) out.push_back({"ue outside working area", {u.id}});
    }
    for (std::size_t i = 0; i < d.bs.size(); ++i) {
        for (std::size_t j = i + 1; j < d.bs.size(); ++j) {
            const auto& a = d.bs[i];
            const auto& b = d.bs[j];
            if (a.tier != b.tier) continue;
            const double min_dist = a.tier == Tier::kRf ? cfg.min_dist_rf_m : cfg.min_dist_thz_m;
            if (distance(a, b) < min_dist) {
                out.push_back({fmt::format("{} bs pair closer than {} m", to_string(a.tier), min_dist),
                               {a.id, b.id}});
            }
        }
    }
    return out;
}

std::uint64_t content_hash(const Deployment& d) {
    Fnv1a h;
    for (const auto& b : d.bs) {
        h.add(b.id);
        h.add(static_cast<int>(b.tier));
        h.add(b.x_m);
        h.add(b.y_m);
    }
    for (const auto& u : d.ue) {
        h.add(u.id);
        h.add(u.x_m);
        h.add(u.y_m);
    }
    return h.value();
}

}  // namespace rfthz
