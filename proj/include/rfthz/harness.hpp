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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfthz/association.hpp"
#include "rfthz/channel.hpp"
#include "rfthz/config.hpp"
#include "rfthz/metrics.hpp"

namespace rfthz {

/// Deployment, fading and SINR matrix of one trial.
SinrMatrix trial_sinr(const NetworkConfig& cfg, std::uint64_t trial);

struct PolicyReport {
    Policy policy;
    MetricsReport metrics;
};

struct TrialResult {
    int n_ue = 0;
    std::uint64_t trial = 0;
    std::uint64_t deployment_hash = 0;
    std::uint64_t sinr_hash = 0;
    std::vector<PolicyReport> reports;  // in requested policy order
};

/// One realization evaluated under every policy. All policies see the same
/// SinrMatrix; the hashes are recorded so the pairing can be checked.
TrialResult run_trial(const NetworkConfig& cfg, std::uint64_t trial, std::span<const Policy> policies);

struct ExperimentSpec {
    NetworkConfig base;
    std::vector<int> n_ue_sweep;  // empty: base.n_ue only
    std::vector<Policy> policies;
    int n_trials = 20;
    std::filesystem::path out_dir;
    int threads = 1;
};

/// Throws InvalidSpec.
void validate(const ExperimentSpec& spec);

/// Trials ordered by sweep point, then trial index. The result does not
/// depend on spec.threads.
std::vector<TrialResult> run_trials(const ExperimentSpec& spec);

struct SummaryRow {
    int n_ue = 0;
    Policy policy = Policy::kLstd;
    int n_trials = 0;
    double mean_rate = 0.0, mean_rate_se = 0.0;
    double sum_rate = 0.0;
    double p5_rate = 0.0;
    double jain_served = 0.0, jain_served_se = 0.0;
    double jain = 0.0, jain_se = 0.0;
    double jain_load = 0.0, jain_load_se = 0.0;
    double load_std = 0.0, load_std_se = 0.0;
    double passes = 0.0;  // mean trace length
};

/// Trial means and standard errors per (n_ue, policy).
std::vector<SummaryRow> summarize(std::span<const TrialResult> trials);

/// Mean and standard error (sample std / sqrt(n); 0 when n < 2).
std::pair<double, double> mean_and_se(std::span<const double> x);

/// Writes fig2.csv (LSTD traces), fig3.csv (rates), fig4.csv (fairness),
/// trials.csv and manifest.json into spec.out_dir. Throws IoError.
void write_outputs(const ExperimentSpec& spec, std::span<const TrialResult> trials);

/// run_trials followed by write_outputs.
std::vector<TrialResult> run_experiment(const ExperimentSpec& spec);

nlohmann::json make_manifest(const ExperimentSpec& spec);

}  // namespace rfthz
