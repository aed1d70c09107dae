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

#include "rfthz/harness.hpp"

#include <atomic>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rfthz/deployment.hpp"
#include "rfthz/errors.hpp"
#include "rfthz/rate.hpp"

#ifndef RFTHZ_VERSION
#define RFTHZ_VERSION "unknown"
#endif

namespace rfthz {

SinrMatrix trial_sinr(const NetworkConfig& cfg, std::uint64_t trial) {
    const Deployment d = generate_deployment(cfg, trial);
    return compute_sinr_matrix(d, cfg, draw_fading(cfg, trial));
}

TrialResult run_trial(const NetworkConfig& cfg, std::uint64_t trial, std::span<const Policy> policies) {
    const Deployment d = generate_deployment(cfg, trial);
    const SinrMatrix sinr = compute_sinr_matrix(d, cfg, draw_fading(cfg, trial));

    TrialResult out;
    out.n_ue = cfg.n_ue;
    out.trial = trial;
    out.deployment_hash = content_hash(d);
    out.sinr_hash = content_hash(sinr);
    for (Policy p : policies) {
        const Assignment a = associate(p, sinr, cfg, trial);
        out.reports.push_back({p, compute_metrics(a, shared_rates(a, sinr, cfg), sinr)});
    }
    return out;
}

void validate(const ExperimentSpec& spec) {
    if (spec.policies.empty()) throw InvalidSpec("no policies requested");
    if (spec.n_trials < 1) throw InvalidSpec("n_trials must be >= 1");
    if (spec.threads < 1) throw InvalidSpec("threads must be >= 1");
    for (int n : spec.n_ue_sweep) {
        if (n < 1) throw InvalidSpec(fmt::format("sweep value {} is not positive", n));
    }
    validate(spec.base);
}

namespace {

std::vector<int> sweep_points(const ExperimentSpec& spec) {
    return spec.n_ue_sweep.empty() ? std::vector<int>{spec.base.n_ue} : spec.n_ue_sweep;
}

}  // namespace

std::vector<TrialResult> run_trials(const ExperimentSpec& spec) {
    validate(spec);
    const auto points = sweep_points(spec);
    const std::size_t n_tasks = points.size() * static_cast<std::size_t>(spec.n_trials);
    std::vector<TrialResult> results(n_tasks);
    std::vector<std::exception_ptr> errors(n_tasks);

    // Each task writes only its own slot, so any schedule gives the same vector.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n_tasks; i = next++) {
            NetworkConfig cfg = spec.base;
            cfg.n_ue = points[i / static_cast<std::size_t>(spec.n_trials)];
            const auto trial = static_cast<std::uint64_t>(i % static_cast<std::size_t>(spec.n_trials));
            try {
                results[i] = run_trial(cfg, trial, spec.policies);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < spec.threads; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

std::pair<double, double> mean_and_se(std::span<const double> x) {
    if (x.empty()) return {0.0, 0.0};
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    if (x.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

std::vector<SummaryRow> summarize(std::span<const TrialResult> trials) {
    // Keyed by (n_ue, position in the policy list) to keep the requested order.
    std::map<std::pair<int, std::size_t>, std::vector<const PolicyReport*>> groups;
    for (const auto& t : trials) {
        for (std::size_t k = 0; k < t.reports.size(); ++k) groups[{t.n_ue, k}].push_back(&t.reports[k]);
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, reports] : groups) {
        auto collect = [&](auto field) {
            std::vector<double> v;
            for (const auto* r : reports) v.push_back(field(r->metrics));
            return mean_and_se(v);
        };
        SummaryRow row;
        row.n_ue = key.first;
        row.policy = reports.front()->policy;
        row.n_trials = static_cast<int>(reports.size());
        std::tie(row.mean_rate, row.mean_rate_se) = collect([](const MetricsReport& m) { return m.mean_rate; });
        row.sum_rate = collect([](const MetricsReport& m) { return m.sum_rate; }).first;
        row.p5_rate = collect([](const MetricsReport& m) { return m.p5_rate; }).first;
        std::tie(row.jain_served, row.jain_served_se) =
            collect([](const MetricsReport& m) { return m.jain_served; });
        std::tie(row.jain, row.jain_se) = collect([](const MetricsReport& m) { return m.jain; });
        std::tie(row.jain_load, row.jain_load_se) = collect([](const MetricsReport& m) { return m.jain_load; });
        std::tie(row.load_std, row.load_std_se) = collect([](const MetricsReport& m) { return m.load_std; });
        row.passes = collect([](const MetricsReport& m) {
                         return static_cast<double>(m.convergence_trace.size());
                     }).first;
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json make_manifest(const ExperimentSpec& spec) {
    nlohmann::json policies = nlohmann::json::array();
    for (Policy p : spec.policies) {
        policies.push_back({{"name", std::string(to_string(p))},
                            {"rule", std::string(policy_rule(p))},
                            {"reconstruction", is_reconstruction(p)}});
    }
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);

    return {{"tool", "rfthz"},
            {"version", RFTHZ_VERSION},
            {"created_utc", stamp},
            {"config", spec.base},
            {"sweep_n_ue", sweep_points(spec)},
            {"n_trials", spec.n_trials},
            {"policies", policies},
            {"seeds",
             {{"master", spec.base.seed},
              {"substreams", {"rf_placement", "thz_placement", "ue_placement", "fading", "lstd_ties"}},
              {"trial_key", "trial index 0..n_trials-1, shared across sweep points"}}},
            {"outputs", {"fig2.csv", "fig3.csv", "fig4.csv", "trials.csv"}}};
}

namespace {

class CsvFile {
public:
    CsvFile(const std::filesystem::path& path, std::string_view header) : path_(path), out_(path) {
        if (!out_) throw IoError(fmt::format("cannot write '{}'", path.string()));
        out_ << header << '\n';
    }
    ~CsvFile() noexcept(false) {
        out_.close();
        if (!out_ && std::uncaught_exceptions() == 0) {
            throw IoError(fmt::format("write to '{}' failed", path_.string()));
        }
    }
    std::ofstream& out() { return out_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace

void write_outputs(const ExperimentSpec& spec, std::span<const TrialResult> trials) {
    std::error_code ec;
    std::filesystem::create_directories(spec.out_dir, ec);
    if (ec) throw IoError(fmt::format("cannot create '{}': {}", spec.out_dir.string(), ec.message()));
    const auto& dir = spec.out_dir;

    {
        CsvFile f(dir / "fig2.csv", "n_ue,trial,iteration,load_std");
        for (const auto& t : trials) {
            for (const auto& r : t.reports) {
                if (r.policy != Policy::kLstd) continue;
                const auto& tr = r.metrics.convergence_trace;
                for (std::size_t i = 0; i < tr.size(); ++i) {
                    f.out() << fmt::format("{},{},{},{:.12g}\n", t.n_ue, t.trial, i + 1, tr[i]);
                }
            }
        }
    }

    const auto summary = summarize(trials);
    {
        CsvFile f(dir / "fig3.csv", "n_ue,policy,mean_rate_bps,stderr_bps,sum_rate_bps,p5_rate_bps,n_trials");
        for (const auto& s : summary) {
            f.out() << fmt::format("{},{},{:.12g},{:.12g},{:.12g},{:.12g},{}\n", s.n_ue, to_string(s.policy),
                                   s.mean_rate, s.mean_rate_se, s.sum_rate, s.p5_rate, s.n_trials);
        }
    }
    {
        CsvFile f(dir / "fig4.csv",
                  "n_ue,policy,jain_served,stderr,jain_all,jain_all_stderr,jain_load,jain_load_stderr,n_trials");
        for (const auto& s : summary) {
            f.out() << fmt::format("{},{},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{}\n", s.n_ue,
                                   to_string(s.policy), s.jain_served, s.jain_served_se, s.jain, s.jain_se,
                                   s.jain_load, s.jain_load_se, s.n_trials);
        }
    }
    {
        CsvFile f(dir / "trials.csv",
                  "n_ue,trial,policy,deployment_hash,sinr_hash,load_std,jain,jain_served,jain_load,"
                  "mean_rate_bps,sum_rate_bps,p5_rate_bps,unassociated,thz_served,trace_len");
        for (const auto& t : trials) {
            for (const auto& r : t.reports) {
                const auto& m = r.metrics;
                f.out() << fmt::format("{},{},{},{:016x},{:016x},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},"
                                       "{:.12g},{},{},{}\n",
                                       t.n_ue, t.trial, to_string(r.policy), t.deployment_hash, t.sinr_hash,
                                       m.load_std, m.jain, m.jain_served, m.jain_load, m.mean_rate, m.sum_rate,
                                       m.p5_rate, m.unassociated_count, m.thz_served_count,
                                       m.convergence_trace.size());
            }
        }
    }
    {
        std::ofstream out(dir / "manifest.json");
        if (!out) throw IoError(fmt::format("cannot write '{}'", (dir / "manifest.json").string()));
        out << make_manifest(spec).dump(2) << '\n';
    }
    spdlog::info("wrote {} trials to {}", trials.size(), dir.string());
}

std::vector<TrialResult> run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    auto trials = run_trials(spec);
    write_outputs(spec, trials);
    return trials;
}

}  // namespace rfthz
