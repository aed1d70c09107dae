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
#include <vector>

#include "rfthz/assignment.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/config.hpp"

namespace rfthz {

struct OracleResult {
    double min_std = 0.0;
    Assignment best;
    std::uint64_t evaluated = 0;
};

/// Enumerates every assignment in which each UE picks one of its feasible
/// BSs (UEs with none stay unassociated) and returns one minimizing the
/// pooled load STD. Throws InvalidSpec if the search space exceeds
/// `max_assignments`.
OracleResult exhaustive_min_std(const SinrMatrix& sinr, std::uint64_t max_assignments = 1u << 24);

struct OracleRow {
    std::uint64_t instance = 0;
    int n_ue = 0;
    int n_bs = 0;
    double lstd_std = 0.0;
    double max_sinr_std = 0.0;
    double optimum_std = 0.0;
};

/// Runs LSTD, max-SINR and the exhaustive search on `instances` seeded
/// realizations of a small scenario.
std::vector<OracleRow> run_oracle(const NetworkConfig& cfg, int instances);

}  // namespace rfthz
