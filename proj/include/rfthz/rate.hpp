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

#include <optional>
#include <vector>

#include "rfthz/assignment.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/config.hpp"

namespace rfthz {

/// Per-UE downlink rate and serving tier; unassociated UEs get rate 0 and no tier.
struct RateVector {
    std::vector<double> rate_bps;
    std::vector<std::optional<Tier>> tier;
};

double tier_bandwidth(const NetworkConfig& cfg, Tier tier);

/// W log2(1 + sinr), with the MIMO prefactor already folded into sinr.
double single_user_rate(double sinr, double w_hz);

/// Equal bandwidth sharing: UE u on BS b of tier k gets W_k / L_b * log2(1 + sinr(u, b)).
RateVector shared_rates(const Assignment& assign, const SinrMatrix& sinr, const NetworkConfig& cfg);

}  // namespace rfthz
