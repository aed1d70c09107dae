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

#include "rfthz/association.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rfthz/errors.hpp"
#include "rfthz/metrics.hpp"
#include "rfthz/random.hpp"
#include "rfthz/rate.hpp"

namespace rfthz {

namespace {

struct PolicyInfo {
    Policy policy;
    std::string_view name;
    bool reconstruction;
    std::string_view rule;
};

constexpr PolicyInfo kPolicies[] = {
    {Policy::kLstd, "lstd", false, "least-STD clustering over feasible links, best of restarted passes"},
    {Policy::kRbl, "rbl", false, "max-SINR start, per-tier shedding from overloaded to accepting BSs"},
    {Policy::kMaxSinr, "max-sinr", false, "argmax SINR, ties to lowest BS id"},
    {Policy::kSinrThreshold, "sinr-threshold", true, "argmax SINR over links meeting the SINR threshold"},
    {Policy::kCre, "cre", true, "argmax SINR times per-tier dB bias (default THz +10 dB)"},
    {Policy::kRateBased, "rate-based", true, "argmax full-bandwidth single-user rate W log2(1+SINR)"},
};

const PolicyInfo& info(Policy p) {
    for (const auto& i : kPolicies) {
        if (i.policy == p) return i;
    }
    throw InvalidSpec("unknown policy value");
}

}  // namespace

std::string_view to_string(Policy p) { return info(p).name; }
bool is_reconstruction(Policy p) { return info(p).reconstruction; }
std::string_view policy_rule(Policy p) { return info(p).rule; }

Policy parse_policy(std::string_view name) {
    for (const auto& i : kPolicies) {
        if (i.name == name) return i.policy;
    }
    throw InvalidSpec(fmt::format("unknown policy '{}'", name));
}

std::vector<Policy> parse_policy_list(std::string_view csv) {
    std::vector<Policy> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t end = std::min(csv.find(',', start), csv.size());
        const auto token = csv.substr(start, end - start);
        if (!token.empty()) out.push_back(parse_policy(token));
        start = end + 1;
    }
    if (out.empty()) throw InvalidSpec("policy list is empty");
    return out;
}

DegreeCounts degree_counts(const Matrix<std::uint8_t>& feasible) {
    DegreeCounts dc;
    dc.nbs_u.assign(feasible.rows(), 0);
    dc.nu_bs.assign(feasible.cols(), 0);
    for (std::size_t u = 0; u < feasible.rows(); ++u) {
        for (std::size_t b = 0; b < feasible.cols(); ++b) {
            if (feasible(u, b)) {
                ++dc.nbs_u[u];
                ++dc.nu_bs[b];
            }
        }
    }
    return dc;
}

Assignment lstd_associate(const SinrMatrix& sinr, const NetworkConfig& cfg, std::uint64_t trial) {
    const std::size_t n_ue = sinr.sinr.rows();
    const std::size_t n_bs = sinr.sinr.cols();
    const DegreeCounts dc = degree_counts(sinr.feasible);

    const auto no_option = std::count(dc.nbs_u.begin(), dc.nbs_u.end(), 0);
    if (no_option > 0) spdlog::debug("lstd: {} UEs have no feasible BS and stay unassociated", no_option);

    Rng ties(cfg.seed, Stream::kLstdTies, trial);
    std::vector<std::uint64_t> key(n_ue);
    std::vector<std::size_t> order(n_ue);

    Assignment best;
    double best_std = std::numeric_limits<double>::infinity();
    std::vector<double> trace;

    for (int pass = 0; pass < cfg.max_iters; ++pass) {
        for (std::size_t u = 0; u < n_ue; ++u) key[u] = pass == 0 ? u : ties.bits();
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (dc.nbs_u[a] != dc.nbs_u[b]) return dc.nbs_u[a] < dc.nbs_u[b];
            if (key[a] != key[b]) return key[a] < key[b];
            return a < b;
        });

        std::vector<std::optional<int>> serving(n_ue);
        std::vector<int> load(n_bs, 0);
        for (std::size_t u : order) {
            // A single feasible BS is the only candidate, so the forced case
            // falls out of the same scan.
            std::optional<std::size_t> pick;
            for (std::size_t b = 0; b < n_bs; ++b) {
                if (!sinr.feasible(u, b)) continue;
                if (!pick || load[b] < load[*pick] ||
                    (load[b] == load[*pick] && sinr.sinr(u, b) > sinr.sinr(u, *pick))) {
                    pick = b;
                }
            }
            if (!pick) continue;
            serving[u] = static_cast<int>(*pick);
            ++load[*pick];
        }

        const double std_now = load_std(load);
        trace.push_back(std_now);
        if (std_now < best_std) {
            best_std = std_now;
            best.serving_bs = std::move(serving);
            best.load = std::move(load);
        }
        if (std_now <= cfg.std_epsilon) break;
    }
    best.trace = std::move(trace);
    return best;
}

TierCapacity compute_mu(const NetworkConfig& cfg, int n_ue, int n_mbs, int n_tbs) {
    auto tier_mu = [&](double w_hz, int n_tier) {
        double cap = n_ue;
        if (cfg.demand_per_ue_hz > 0) {
            cap = std::min<double>(n_ue, std::floor(w_hz / cfg.demand_per_ue_hz) * n_tier);
        }
        return cap / n_tier;
    };
    return {tier_mu(cfg.w_rf_hz, n_mbs), tier_mu(cfg.w_thz_hz, n_tbs)};
}

TierCapacity compute_mu(const NetworkConfig& cfg, const Deployment& d) {
    int n_rf = 0;
    for (const auto& b : d.bs) n_rf += b.tier == Tier::kRf ? 1 : 0;
    return compute_mu(cfg, d.n_ue(), n_rf, d.n_bs() - n_rf);
}

namespace {

// argmax over b of score(u, b) for admissible links, ties to the lowest id.
template <typename Score, typename Admit>
Assignment argmax_associate(const SinrMatrix& sinr, Score&& score, Admit&& admit) {
    const std::size_t n_ue = sinr.sinr.rows();
    const std::size_t n_bs = sinr.sinr.cols();
    std::vector<std::optional<int>> serving(n_ue);
    for (std::size_t u = 0; u < n_ue; ++u) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < n_bs; ++b) {
            if (!admit(u, b)) continue;
            const double s = score(u, b);
            if (!serving[u] || s > best) {
                best = s;
                serving[u] = static_cast<int>(b);
            }
        }
    }
    return Assignment::from_serving(std::move(serving), static_cast<int>(n_bs));
}

constexpr auto kAnyLink = [](std::size_t, std::size_t) { return true; };

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

Assignment max_sinr_associate(const SinrMatrix& sinr) {
    return argmax_associate(sinr, [&](std::size_t u, std::size_t b) { return sinr.sinr(u, b); }, kAnyLink);
}

Assignment sinr_threshold_associate(const SinrMatrix& sinr, const NetworkConfig& cfg) {
    return argmax_associate(
        sinr, [&](std::size_t u, std::size_t b) { return sinr.sinr(u, b); },
        [&](std::size_t u, std::size_t b) { return sinr.sinr(u, b) >= cfg.sinr_threshold; });
}

Assignment cre_associate(const SinrMatrix& sinr, double bias_db_rf, double bias_db_thz) {
    const double bias_rf = db_to_linear(bias_db_rf);
    const double bias_thz = db_to_linear(bias_db_thz);
    return argmax_associate(
        sinr,
        [&](std::size_t u, std::size_t b) {
            return sinr.sinr(u, b) * (sinr.bs_tier[b] == Tier::kRf ? bias_rf : bias_thz);
        },
        kAnyLink);
}

Assignment rate_based_associate(const SinrMatrix& sinr, const NetworkConfig& cfg) {
    return argmax_associate(
        sinr,
        [&](std::size_t u, std::size_t b) {
            return single_user_rate(sinr.sinr(u, b), tier_bandwidth(cfg, sinr.bs_tier[b]));
        },
        kAnyLink);
}

Assignment rbl_associate(const SinrMatrix& sinr, const TierCapacity& cap, const NetworkConfig& /*cfg*/,
                         std::vector<RblMove>* moves) {
    Assignment a = max_sinr_associate(sinr);
    const std::size_t n_ue = sinr.sinr.rows();
    const std::size_t n_bs = sinr.sinr.cols();

    for (Tier tier : {Tier::kRf, Tier::kThz}) {
        const double mu = cap.mu(tier);
        const int ceil_mu = static_cast<int>(std::ceil(mu));

        std::vector<std::size_t> tier_bs;
        for (std::size_t b = 0; b < n_bs; ++b) {
            if (sinr.bs_tier[b] == tier) tier_bs.push_back(b);
        }
        std::vector<std::size_t> overloaded;
        for (std::size_t b : tier_bs) {
            if (a.load[b] > mu) overloaded.push_back(b);
        }
        std::stable_sort(overloaded.begin(), overloaded.end(),
                         [&](std::size_t x, std::size_t y) { return a.load[x] > a.load[y]; });

        for (std::size_t b : overloaded) {
            std::vector<std::size_t> members;
            for (std::size_t u = 0; u < n_ue; ++u) {
                if (a.serving_bs[u] == static_cast<int>(b)) members.push_back(u);
            }
            std::stable_sort(members.begin(), members.end(),
                             [&](std::size_t x, std::size_t y) { return sinr.sinr(x, b) > sinr.sinr(y, b); });

            for (std::size_t u : members) {
                if (a.load[b] <= ceil_mu) break;
                std::optional<std::size_t> target;
                for (std::size_t t : tier_bs) {
                    if (t == b || a.load[t] >= mu || !sinr.feasible(u, t)) continue;
                    if (!target || sinr.sinr(u, t) > sinr.sinr(u, *target)) target = t;
                }
                if (!target) {
                    spdlog::debug("rbl: NoAcceptingTarget for UE {} on overloaded BS {}", u, b);
                    continue;
                }
                a.serving_bs[u] = static_cast<int>(*target);
                --a.load[b];
                ++a.load[*target];
                a.trace.push_back(load_std(a.load));
                if (moves) moves->push_back({static_cast<int>(u), static_cast<int>(b), static_cast<int>(*target)});
            }
        }
    }
    return a;
}

Assignment associate(Policy p, const SinrMatrix& sinr, const NetworkConfig& cfg, std::uint64_t trial) {
    switch (p) {
        case Policy::kLstd:
            return lstd_associate(sinr, cfg, trial);
        case Policy::kRbl: {
            int n_rf = 0;
            for (Tier t : sinr.bs_tier) n_rf += t == Tier::kRf ? 1 : 0;
            return rbl_associate(sinr, compute_mu(cfg, sinr.n_ue(), n_rf, sinr.n_bs() - n_rf), cfg);
        }
        case Policy::kMaxSinr:
            return max_sinr_associate(sinr);
        case Policy::kSinrThreshold:
            return sinr_threshold_associate(sinr, cfg);
        case Policy::kCre:
            return cre_associate(sinr, cfg.cre_bias_db_rf, cfg.cre_bias_db_thz);
        case Policy::kRateBased:
            return rate_based_associate(sinr, cfg);
    }
    throw InvalidSpec("unknown policy value");
}

}  // namespace rfthz
