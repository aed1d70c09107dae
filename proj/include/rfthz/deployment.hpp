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

#include <cstdint>
#include <string>
#include <vector>

#include "rfthz/config.hpp"

namespace rfthz {

struct BaseStation {
    int id = 0;
    Tier tier = Tier::kRf;
    double x_m = 0.0;
    double y_m = 0.0;

    bool operator==(const BaseStation&) const = default;
};

struct UserEquipment {
    int id = 0;
    double x_m = 0.0;
    double y_m = 0.0;

    bool operator==(const UserEquipment&) const = default;
};

/// Positions of all BSs and UEs of one realization. RF macro BSs occupy ids
/// [0, n_mbs), THz BSs [n_mbs, n_mbs + n_tbs).
struct Deployment {
    std::vector<BaseStation> bs;
    std::vector<UserEquipment> ue;

    bool operator==(const Deployment&) const = default;

    int n_bs() const { return static_cast<int>(bs.size()); }
    int n_ue() const { return static_cast<int>(ue.size()); }
};

/// UE-BS distances below this are clamped, keeping rho^-alpha finite.
inline constexpr double kMinLinkDistanceM = 1.0;

double distance(const BaseStation& b, const UserEquipment& u);
double distance(const BaseStation& a, const BaseStation& b);
/// Euclidean UE-BS distance floored at kMinLinkDistanceM.
double link_distance(const BaseStation& b, const UserEquipment& u);

/// Uniform placement inside the working area. Same-tier BSs keep the
/// configured minimum separation via rejection sampling; UEs are
/// unconstrained. Each population draws from its own substream of
/// (cfg.seed, trial). Throws PlacementInfeasible when a point exceeds
/// cfg.placement_attempt_cap rejected candidates.
Deployment generate_deployment(const NetworkConfig& cfg, std::uint64_t trial = 0);

struct Violation {
    std::string rule;
    std::vector<int> ids;  // offending BS or UE ids, per rule
};

/// Checks every Deployment invariant; an empty result means valid.
std::vector<Violation> validate_deployment(const Deployment& d, const NetworkConfig& cfg);

/// FNV-1a over the raw coordinates and ids; used to assert pairing.
std::uint64_t content_hash(const Deployment& d);

}  // namespace rfthz
