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
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "rfthz/errors.hpp"
#include "rfthz/harness.hpp"
#include "test_util.hpp"

using namespace rfthz;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("rfthz_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentSpec small_spec(const std::string& name) {
    ExperimentSpec spec;
    spec.base.n_ue = 60;
    spec.base.max_iters = 5;
    spec.policies = {Policy::kLstd, Policy::kRbl, Policy::kMaxSinr};
    spec.n_trials = 3;
    spec.out_dir = scratch(name);
    return spec;
}

}  // namespace

TEST_CASE("policies in a trial share one channel realization") {
    NetworkConfig cfg;
    cfg.n_ue = 80;
    const std::vector<Policy> two = {Policy::kLstd, Policy::kMaxSinr};
    const auto t = run_trial(cfg, 2, two);
    REQUIRE(t.reports.size() == 2u);
    CHECK(t.reports[0].policy == Policy::kLstd);
    CHECK(t.sinr_hash == content_hash(trial_sinr(cfg, 2)));

    const std::vector<Policy> one = {Policy::kRbl};
    const auto u = run_trial(cfg, 2, one);
    CHECK(u.deployment_hash == t.deployment_hash);
    CHECK(u.sinr_hash == t.sinr_hash);
}

TEST_CASE("experiment output is byte-identical across reruns and thread counts") {
    auto a = small_spec("det_a");
    auto b = small_spec("det_b");
    b.threads = 3;
    run_experiment(a);
    run_experiment(b);
    for (const char* f : {"fig2.csv", "fig3.csv", "fig4.csv", "trials.csv"}) {
        CHECK_MESSAGE(slurp(a.out_dir / f) == slurp(b.out_dir / f), f);
        CHECK(!slurp(a.out_dir / f).empty());
    }

    auto ma = nlohmann::json::parse(slurp(a.out_dir / "manifest.json"));
    auto mb = nlohmann::json::parse(slurp(b.out_dir / "manifest.json"));
    ma.erase("created_utc");
    mb.erase("created_utc");
    CHECK(ma == mb);
    CHECK(ma.at("policies").size() == 3u);
    fs::remove_all(a.out_dir);
    fs::remove_all(b.out_dir);
}

TEST_CASE("adding trials leaves earlier trials unchanged") {
    auto spec = small_spec("indep");
    spec.n_trials = 1;
    const auto one = run_trials(spec);
    spec.n_trials = 3;
    const auto three = run_trials(spec);
    CHECK(one[0].sinr_hash == three[0].sinr_hash);
    CHECK(one[0].reports[0].metrics.mean_rate == three[0].reports[0].metrics.mean_rate);
}

TEST_CASE("fig2 carries one convergence series per UE count") {
    auto spec = small_spec("fig2");
    spec.n_ue_sweep = {250, 500};
    spec.n_trials = 1;
    run_experiment(spec);
    std::ifstream in(spec.out_dir / "fig2.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "n_ue,trial,iteration,load_std");
    std::set<std::string> series;
    while (std::getline(in, line)) series.insert(line.substr(0, line.find(',')));
    CHECK(series == std::set<std::string>{"250", "500"});

    const auto summary = summarize(run_trials(spec));
    CHECK(summary.size() == 6u);
    fs::remove_all(spec.out_dir);
}

TEST_CASE("invalid experiment specs") {
    auto spec = small_spec("invalid");
    spec.policies.clear();
    CHECK_THROWS_AS(run_experiment(spec), InvalidSpec);
    spec = small_spec("invalid");
    spec.n_trials = 0;
    CHECK_THROWS_AS(run_experiment(spec), InvalidSpec);
    spec = small_spec("invalid");
    spec.n_ue_sweep = {10, -5};
    CHECK_THROWS_AS(run_experiment(spec), InvalidSpec);
}

TEST_CASE("unwritable output directory raises IoError") {
    const auto blocker = fs::temp_directory_path() / "rfthz_test_blocker";
    std::ofstream(blocker) << "x";
    auto spec = small_spec("io");
    spec.n_trials = 1;
    spec.out_dir = blocker / "sub";
    CHECK_THROWS_AS(run_experiment(spec), IoError);
    fs::remove(blocker);
}

TEST_CASE("placement failures propagate out of the trial loop") {
    auto spec = small_spec("infeasible");
    spec.base.area_side_m = 500.0;
    spec.base.min_dist_rf_m = 450.0;
    spec.base.placement_attempt_cap = 50;
    spec.threads = 2;
    CHECK_THROWS_AS(run_trials(spec), PlacementInfeasible);
}

TEST_CASE("mean and standard error") {
    auto [m, se] = mean_and_se(std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK(m == 2.5);
    CHECK(se == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
    CHECK(mean_and_se(std::vector<double>{7.0}).second == 0.0);
}
