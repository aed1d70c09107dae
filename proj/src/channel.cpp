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

#include "rfthz/channel.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <system_error>

#include <fmt/format.h>

#include "rfthz/errors.hpp"
#include "rfthz/hash.hpp"
#include "rfthz/random.hpp"

namespace rfthz {

double free_space_constant(double freq_hz) {
    const double denom = 4.0 * std::numbers::pi * freq_hz;
    return (kSpeedOfLight * kSpeedOfLight) / (denom * denom);
}

double rf_pathgain(double rho_m, double alpha, double f_rf_hz, double fading_draw) {
    return free_space_constant(f_rf_hz) * std::pow(rho_m, -alpha) * fading_draw;
}

double thz_pathgain(double rho_m, double ka_per_m, double f_thz_hz) {
    return free_space_constant(f_thz_hz) / (rho_m * rho_m) * std::exp(-ka_per_m * rho_m);
}

double thz_noise(const NetworkConfig& cfg, double rho_m) {
    const double thermal = kBoltzmann * cfg.temperature_k * cfg.w_thz_hz;
    // Power absorbed along the link is re-emitted as noise: P * gamma * rho^-2 * (1 - e^{-k rho}).
    const double absorbed = cfg.p_thz_w * free_space_constant(cfg.f_thz_hz) / (rho_m * rho_m) *
                            -std::expm1(-cfg.ka_per_m * rho_m);
    return thermal + absorbed;
}

double rf_noise(const NetworkConfig& cfg) { return kBoltzmann * cfg.temperature_k * cfg.w_rf_hz; }

Matrix<double> draw_fading(const NetworkConfig& cfg, std::uint64_t trial) {
    Matrix<double> fading(static_cast<std::size_t>(cfg.n_ue), static_cast<std::size_t>(cfg.n_mbs));
    Rng rng(cfg.seed, Stream::kFading, trial);
    for (std::size_t u = 0; u < fading.rows(); ++u) {
        for (std::size_t b = 0; b < fading.cols(); ++b) fading(u, b) = rng.exponential();
    }
    return fading;
}

SinrMatrix compute_sinr_matrix(const Deployment& d, const NetworkConfig& cfg,
                               const Matrix<double>& fading) {
    const std::size_t n_ue = d.ue.size();
    const std::size_t n_bs = d.bs.size();
    std::size_t n_rf = 0;
    for (const auto& b : d.bs) n_rf += b.tier == Tier::kRf ? 1 : 0;
    if (fading.rows() != n_ue || fading.cols() != n_rf) {
        throw DimensionMismatch(fmt::format("fading is {}x{}, deployment needs {}x{}", fading.rows(),
                                            fading.cols(), n_ue, n_rf));
    }

    SinrMatrix out;
    out.sinr = Matrix<double>(n_ue, n_bs);
    out.bs_tier.reserve(n_bs);
    for (const auto& b : d.bs) out.bs_tier.push_back(b.tier);

    const double pre_rf = mimo_prefactor(cfg.m_rf, cfg.s_rf);
    const double pre_thz = mimo_prefactor(cfg.m_thz, cfg.s_thz);
    const double n0_rf = rf_noise(cfg);
    const bool full = cfg.interference_mode == InterferenceMode::kFull;

    std::vector<double> rx(n_bs);
    std::vector<double> rho(n_bs);
    for (std::size_t u = 0; u < n_ue; ++u) {
        std::size_t rf_col = 0;
        for (std::size_t b = 0; b < n_bs; ++b) {
            rho[b] = link_distance(d.bs[b], d.ue[u]);
            if (d.bs[b].tier == Tier::kRf) {
                rx[b] = cfg.p_rf_w * rf_pathgain(rho[b], cfg.alpha, cfg.f_rf_hz, fading(u, rf_col++));
            } else {
                rx[b] = cfg.p_thz_w * thz_pathgain(rho[b], cfg.ka_per_m, cfg.f_thz_hz);
            }
        }
        for (std::size_t b = 0; b < n_bs; ++b) {
            const Tier tier = d.bs[b].tier;
            double interference = 0.0;
            if (full) {
                for (std::size_t i = 0; i < n_bs; ++i) {
                    if (i != b && d.bs[i].tier == tier) interference += rx[i];
                }
            }
            const double noise = tier == Tier::kRf ? n0_rf : thz_noise(cfg, rho[b]);
            const double prefactor = tier == Tier::kRf ? pre_rf : pre_thz;
            out.sinr(u, b) = prefactor * rx[b] / (noise + interference);
        }
    }
    apply_threshold(out, cfg.sinr_threshold);
    return out;
}

void apply_threshold(SinrMatrix& m, double threshold) {
    m.feasible = Matrix<std::uint8_t>(m.sinr.rows(), m.sinr.cols());
    for (std::size_t u = 0; u < m.sinr.rows(); ++u) {
        for (std::size_t b = 0; b < m.sinr.cols(); ++b) m.feasible(u, b) = m.sinr(u, b) >= threshold ? 1 : 0;
    }
}

std::uint64_t content_hash(const SinrMatrix& m) {
    Fnv1a h;
    h.add(m.sinr.rows());
    h.add(m.sinr.cols());
    for (double v : m.sinr.data()) h.add(v);
    for (std::uint8_t v : m.feasible.data()) h.add(v);
    for (Tier t : m.bs_tier) h.add(static_cast<int>(t));
    return h.value();
}

namespace {

template <typename T, typename Fmt>
void write_matrix(const SinrMatrix& m, const Matrix<T>& values, const std::filesystem::path& path, Fmt&& cell) {
    std::ofstream out(path);
    if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
    out << "ue";
    for (std::size_t b = 0; b < m.bs_tier.size(); ++b) out << ',' << b << ':' << to_string(m.bs_tier[b]);
    out << '\n';
    for (std::size_t u = 0; u < values.rows(); ++u) {
        out << u;
        for (std::size_t b = 0; b < values.cols(); ++b) out << ',' << cell(values(u, b));
        out << '\n';
    }
    if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace

void write_sinr_csv(const SinrMatrix& m, const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    write_matrix(m, m.sinr, path, [](double v) { return fmt::format("{:.17g}", v); });
    auto feasible_path = path;
    feasible_path.replace_filename(path.stem().string() + ".feasible" + path.extension().string());
    write_matrix(m, m.feasible, feasible_path, [](std::uint8_t v) { return static_cast<int>(v); });
}

}  // namespace rfthz
