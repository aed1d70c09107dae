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

// Command-line front end: `rfthz simulate ...` and `rfthz oracle ...`.
// Log verbosity comes from RFTHZ_LOG (trace, debug, info, warn, error, off).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rfthz/association.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/config.hpp"
#include "rfthz/errors.hpp"
#include "rfthz/harness.hpp"
#include "rfthz/oracle.hpp"

namespace {

struct Overrides {
    std::string scenario;
    std::optional<double> cre_bias_db;
    std::optional<int> max_iters;
    std::optional<double> std_epsilon;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> interference;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--scenario", o.scenario, "Scenario JSON; omitted keys keep the reference defaults");
    cmd->add_option("--cre-bias-db", o.cre_bias_db, "THz cell-range-expansion bias in dB");
    cmd->add_option("--max-iters", o.max_iters, "LSTD pass limit");
    cmd->add_option("--std-epsilon", o.std_epsilon, "LSTD stopping threshold on load STD");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--interference", o.interference, "full | noise_limited");
}

rfthz::NetworkConfig resolve(const Overrides& o) {
    rfthz::NetworkConfig cfg = o.scenario.empty() ? rfthz::NetworkConfig{} : rfthz::load_scenario(o.scenario);
    if (o.cre_bias_db) cfg.cre_bias_db_thz = *o.cre_bias_db;
    if (o.max_iters) cfg.max_iters = *o.max_iters;
    if (o.std_epsilon) cfg.std_epsilon = *o.std_epsilon;
    if (o.seed) cfg.seed = *o.seed;
    if (o.interference) cfg.interference_mode = rfthz::parse_interference_mode(*o.interference);
    rfthz::validate(cfg);
    return cfg;
}

void print_summary(const std::vector<rfthz::TrialResult>& trials) {
    fmt::print("{:>6} {:<15} {:>14} {:>12} {:>10} {:>10} {:>10}\n", "n_ue", "policy", "mean_rate_Mbps",
               "se_Mbps", "jain_srv", "jain_se", "load_std");
    for (const auto& s : rfthz::summarize(trials)) {
        fmt::print("{:>6} {:<15} {:>14.3f} {:>12.3f} {:>10.4f} {:>10.4f} {:>10.3f}\n", s.n_ue,
                   rfthz::to_string(s.policy), s.mean_rate / 1e6, s.mean_rate_se / 1e6, s.jain_served,
                   s.jain_served_se, s.load_std);
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* level = std::getenv("RFTHZ_LOG")) {
        spdlog::set_level(spdlog::level::from_str(level));
    }

    CLI::App app{"User association simulator for coexisting RF macro / THz small-cell downlinks"};
    app.require_subcommand(1);

    Overrides sim_o;
    std::string policies = "lstd,rbl,max-sinr";
    int trials = 20;
    int threads = 1;
    std::string out_dir;
    std::vector<int> sweep;
    std::string dump_sinr;
    auto* sim = app.add_subcommand("simulate", "Run Monte-Carlo trials and write figure data");
    add_overrides(sim, sim_o);
    sim->add_option("--policy", policies, "Comma-separated: lstd,rbl,max-sinr,sinr-threshold,cre,rate-based");
    sim->add_option("--trials", trials, "Trials per sweep point")->check(CLI::PositiveNumber);
    sim->add_option("--threads", threads, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
    sim->add_option("--sweep-n-ue", sweep, "UE counts to sweep, e.g. 100,200,300")->delimiter(',');
    sim->add_option("--out", out_dir, "Output directory")->required();
    sim->add_option("--dump-sinr", dump_sinr, "Write trial 0's SINR and feasibility matrices as CSV");

    Overrides orc_o;
    int instances = 50;
    auto* orc = app.add_subcommand("oracle", "Compare LSTD with exhaustive search on small instances");
    add_overrides(orc, orc_o);
    orc->add_option("--instances", instances, "Number of seeded instances")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            rfthz::ExperimentSpec spec;
            spec.base = resolve(sim_o);
            spec.policies = rfthz::parse_policy_list(policies);
            spec.n_trials = trials;
            spec.threads = threads;
            spec.n_ue_sweep = sweep;
            spec.out_dir = out_dir;
            if (!dump_sinr.empty()) {
                rfthz::NetworkConfig cfg = spec.base;
                if (!sweep.empty()) cfg.n_ue = sweep.front();
                rfthz::write_sinr_csv(rfthz::trial_sinr(cfg, 0), dump_sinr);
            }
            print_summary(rfthz::run_experiment(spec));
        } else if (*orc) {
            const auto cfg = resolve(orc_o);
            const auto rows = rfthz::run_oracle(cfg, instances);
            fmt::print("instance,n_ue,n_bs,lstd_std,max_sinr_std,optimum_std\n");
            double gap = 0.0;
            for (const auto& r : rows) {
                fmt::print("{},{},{},{:.6f},{:.6f},{:.6f}\n", r.instance, r.n_ue, r.n_bs, r.lstd_std,
                           r.max_sinr_std, r.optimum_std);
                gap += r.lstd_std - r.optimum_std;
            }
            fmt::print(stderr, "mean optimality gap (LSTD - optimum STD): {:.6f}\n",
                       gap / static_cast<double>(rows.size()));
        }
    } catch (const rfthz::Error& e) {
        fmt::print(stderr, "error: {}: {}\n", e.name(), e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: Internal: {}\n", e.what());
        return 3;
    }
    return 0;
}
