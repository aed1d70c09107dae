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
#include <string_view>
#include <vector>

#include "rfthz/assignment.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/config.hpp"
#include "rfthz/deployment.hpp"

namespace rfthz {

enum class Policy { kLstd, kRbl, kMaxSinr, kSinrThreshold, kCre, kRateBased };

std::string_view to_string(Policy p);
Policy parse_policy(std::string_view name);
/// Comma-separated list, e.g. "lstd,rbl,max-sinr". Throws InvalidSpec.
std::vector<Policy> parse_policy_list(std::string_view csv);

/// Baselines whose exact rule had to be reconstructed are flagged so the
/// experiment manifest can label them.
bool is_reconstruction(Policy p);
std::string_view policy_rule(Policy p);

struct DegreeCounts {
    std::vector<int> nbs_u;  // feasible BSs per UE (row sums)
    std::vector<int> nu_bs;  // feasible UEs per BS (column sums)
};

DegreeCounts degree_counts(const Matrix<std::uint8_t>& feasible);

/// Least-standard-deviation clustering.
///
/// One pass visits UEs in ascending order of feasible-BS count. A UE with a
/// single feasible BS is forced onto it; otherwise it joins its feasible BS
/// with the smallest current load (ties: higher SINR, then lower id). UEs
/// with no feasible BS stay unassociated. After each pass the pooled load STD
/// is appended to the trace; passes stop once it is <= cfg.std_epsilon or
/// after cfg.max_iters. Pass 0 breaks equal-count ties by UE id, later passes
/// by a random key drawn from the (cfg.seed, trial) tie substream, each pass
/// starting from an empty assignment. The minimum-STD pass is returned
/// (earliest on ties).
Assignment lstd_associate(const SinrMatrix& sinr, const NetworkConfig& cfg, std::uint64_t trial = 0);

/// Mean UEs per BS for each tier, the pivot between overloaded and accepting.
struct TierCapacity {
    double mu_rf = 1.0;
    double mu_thz = 1.0;

    double mu(Tier t) const { return t == Tier::kRf ? mu_rf : mu_thz; }
};

/// mu_tier = min(U, floor(W_tier / demand) * B_tier) / B_tier. A zero demand
/// means no per-BS cap, i.e. mu_tier = U / B_tier.
TierCapacity compute_mu(const NetworkConfig& cfg, int n_ue, int n_mbs, int n_tbs);
TierCapacity compute_mu(const NetworkConfig& cfg, const Deployment& d);

/// Redistribution of BS load.
///
/// Starts from max-SINR. Per tier, BSs with load above ceil(mu) shed UEs,
/// strongest serving SINR first, each to the accepting BS (load < mu) of the
/// same tier with the highest SINR from that UE among its feasible links.
/// A UE with no such target stays put. The moved UE's SINR is read at its
/// new server; with every BS always transmitting the interference seen by a
/// link does not depend on the association, so the matrix is unchanged.
/// The trace holds the pooled load STD after each move.
struct RblMove {
    int ue = 0;
    int from = 0;
    int to = 0;
};

Assignment rbl_associate(const SinrMatrix& sinr, const TierCapacity& cap, const NetworkConfig& cfg,
                         std::vector<RblMove>* moves = nullptr);

/// argmax_b sinr(u, b), ties to the lowest BS id.
Assignment max_sinr_associate(const SinrMatrix& sinr);

/// max-SINR restricted to links with sinr >= cfg.sinr_threshold; UEs with no
/// such link are unassociated.
Assignment sinr_threshold_associate(const SinrMatrix& sinr, const NetworkConfig& cfg);

/// Cell range expansion: argmax_b sinr(u, b) * bias(tier(b)), biases in dB.
Assignment cre_associate(const SinrMatrix& sinr, double bias_db_rf, double bias_db_thz);

/// argmax_b of the full-bandwidth single-user rate W_tier * log2(1 + sinr(u, b)).
Assignment rate_based_associate(const SinrMatrix& sinr, const NetworkConfig& cfg);

/// Dispatches to the policy; `trial` seeds LSTD's tie substream.
Assignment associate(Policy p, const SinrMatrix& sinr, const NetworkConfig& cfg, std::uint64_t trial = 0);

}  // namespace rfthz
