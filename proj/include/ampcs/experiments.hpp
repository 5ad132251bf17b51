// SPDX-License-Identifier: Apache-2.0
//
// ampcs - sparse recovery via approximate message passing
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

#ifndef AMPCS_EXPERIMENTS_HPP
#define AMPCS_EXPERIMENTS_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ampcs/amp.hpp"
#include "ampcs/baselines.hpp"
#include "ampcs/l1_curve.hpp"
#include "ampcs/model.hpp"
#include "ampcs/parallel.hpp"
#include "ampcs/sensing.hpp"
#include "ampcs/signals.hpp"

namespace ampcs {

enum class Algo { s_amp, h_amp, cosamp, ls, opt_ls };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::s_amp: return "s-amp";
        case Algo::h_amp: return "h-amp";
        case Algo::cosamp: return "cosamp";
        case Algo::ls: return "ls";
        case Algo::opt_ls: return "opt-ls";
    }
    return "unknown";
}

inline Algo algo_from_name(const std::string& s) {
    if (s == "s-amp") return Algo::s_amp;
    if (s == "h-amp") return Algo::h_amp;
    if (s == "cosamp") return Algo::cosamp;
    if (s == "ls") return Algo::ls;
    if (s == "opt-ls") return Algo::opt_ls;
    throw std::invalid_argument("unknown algorithm: " + s);
}

enum class SparsityAxis { rho, rho_prime };

inline const char* axis_name(SparsityAxis a) {
    return a == SparsityAxis::rho ? "rho" : "rho_prime";
}

inline SparsityAxis axis_from_name(const std::string& s) {
    if (s == "rho") return SparsityAxis::rho;
    if (s == "rho_prime") return SparsityAxis::rho_prime;
    throw std::invalid_argument("unknown sparsity axis: " + s);
}

/// Problem-size policy for a phase sweep: either a fixed n, or a table of
/// (delta, n) anchors interpolated geometrically (log n linear in log
/// delta) so that low-indeterminacy cells can run at larger system sizes
/// for roughly constant cost.
struct NPolicy {
    bool dynamic = false;
    int fixed_n = 500;
    std::vector<std::pair<double, int>> table; // sorted by delta

    int n_for(double delta) const {
        if (!dynamic) return fixed_n;
        if (table.empty()) throw std::invalid_argument("n policy: empty dynamic table");
        if (table.size() == 1) return table.front().second;
        if (delta <= table.front().first) return table.front().second;
        if (delta >= table.back().first) return table.back().second;
        for (std::size_t i = 1; i < table.size(); ++i) {
            if (delta <= table[i].first) {
                const auto& [d0, n0] = table[i - 1];
                const auto& [d1, n1] = table[i];
                const double t = (std::log(delta) - std::log(d0)) /
                                 (std::log(d1) - std::log(d0));
                const double logn = std::log(static_cast<double>(n0)) +
                                    t * (std::log(static_cast<double>(n1)) -
                                         std::log(static_cast<double>(n0)));
                return static_cast<int>(std::lround(std::exp(logn)));
            }
        }
        return table.back().second;
    }

    static NPolicy fixed(int n) { return {false, n, {}}; }
    static NPolicy dynamic_table(std::vector<std::pair<double, int>> t) {
        std::sort(t.begin(), t.end());
        return {true, 0, std::move(t)};
    }
    /// Default low-indeterminacy series: n = 20000 at delta = 0.002 down to
    /// n = 2000 at delta = 0.215.
    static NPolicy default_dynamic() {
        return dynamic_table({{0.002, 20000}, {0.215, 2000}});
    }
};

/// Threshold multiplier grid for oracle tuning.
struct TauGrid {
    double min = 0.1;
    double max = 3.0;
    double step = 0.1;

    std::vector<double> values() const {
        if (!(step > 0.0) || max < min)
            throw std::invalid_argument("tau grid: need step > 0 and max >= min");
        std::vector<double> v;
        for (int i = 0;; ++i) {
            const double tau = min + step * i;
            if (tau > max + 0.5 * step) break;
            v.push_back(tau);
        }
        return v;
    }
};

/// Monte-Carlo phase-transition grid: noiseless strictly sparse problems
/// with i.i.d. Gaussian sensing matrices, oracle-tuned thresholds for the
/// AMP variants, classified against success_threshold_db.
struct PhaseGridSpec {
    std::vector<double> delta_values;
    SparsityAxis axis = SparsityAxis::rho_prime;
    std::vector<double> sparsity_values;
    NPolicy n_policy = NPolicy::fixed(500);
    int trials = 10;
    Algo algo = Algo::s_amp;
    AmpConfig config{};
    TauGrid tau_grid{};
    double success_threshold_db = -20.0;
    std::uint64_t master_seed = 0;
};

struct PhaseCellResult {
    double delta = 0.0;
    double rho_prime = 0.0;
    int n = 0;
    int m = 0;
    int k = 0;
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double mean_nmse_db = 0.0;
    bool skipped = false;
};

namespace detail {

inline void validate_phase_spec(const PhaseGridSpec& spec) {
    if (spec.delta_values.empty() || spec.sparsity_values.empty())
        throw std::invalid_argument("phase spec: empty grid");
    for (double d : spec.delta_values)
        if (!(d > 0.0) || d > 2.0)
            throw std::invalid_argument("phase spec: delta must be in (0, 2]");
    if (spec.trials < 1) throw std::invalid_argument("phase spec: trials must be >= 1");
    if (spec.algo == Algo::ls || spec.algo == Algo::opt_ls)
        throw std::invalid_argument("phase spec: algo must be s-amp, h-amp or cosamp");
}

inline AmpConfig amp_config_for(Algo algo, const AmpConfig& base) {
    AmpConfig c = base;
    c.thresholder.kind =
        (algo == Algo::h_amp) ? ThresholdKind::hard : ThresholdKind::soft;
    return c;
}

// dB value as aggregated in experiment tables: clamped to the serialization
// sentinel range so non-finite trial outcomes cannot poison a cell mean.
inline double clamped_db(double db) {
    if (std::isnan(db)) return -kDbFloor;
    return std::min(std::max(db, kDbFloor), -kDbFloor);
}

} // namespace detail

/// Runs every (delta, sparsity) cell of the grid. Per-trial seeds are a
/// stable mix of (master_seed, cell index, trial index), so results are
/// identical for any worker count and evaluation order. Infeasible cells
/// (k > n or m < 1) are marked skipped.
inline std::vector<PhaseCellResult> phase_transition(const PhaseGridSpec& spec,
                                                     int workers = 1) {
    detail::validate_phase_spec(spec);
    const auto taus = spec.tau_grid.values();

    struct Cell {
        PhaseCellResult base;
        std::size_t index = 0;
    };
    std::vector<Cell> cells;
    for (std::size_t di = 0; di < spec.delta_values.size(); ++di) {
        for (std::size_t si = 0; si < spec.sparsity_values.size(); ++si) {
            const double delta = spec.delta_values[di];
            const double sparsity = spec.sparsity_values[si];
            Cell cell;
            cell.index = di * spec.sparsity_values.size() + si;
            PhaseCellResult& r = cell.base;
            r.delta = delta;
            const int n = spec.n_policy.n_for(delta);
            const int m = static_cast<int>(std::lround(delta * n));
            const int k = std::max(
                1, static_cast<int>(std::lround(
                       spec.axis == SparsityAxis::rho_prime ? sparsity * m
                                                            : sparsity * n)));
            r.n = n;
            r.m = m;
            r.k = k;
            r.rho_prime = spec.axis == SparsityAxis::rho_prime
                              ? sparsity
                              : static_cast<double>(k) / std::max(m, 1);
            if (m < 1 || k > n) {
                r.skipped = true;
            } else {
                r.trials = spec.trials;
            }
            cells.push_back(std::move(cell));
        }
    }

    struct TrialOutcome {
        bool success = false;
        double nmse_db_clamped = 0.0;
    };
    std::vector<std::vector<TrialOutcome>> outcomes(cells.size());
    std::vector<std::size_t> tasks; // (cell, trial) flattened
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!cells[c].base.skipped)
            outcomes[c].resize(static_cast<std::size_t>(spec.trials));
    }
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int t = 0; t < (cells[c].base.skipped ? 0 : spec.trials); ++t)
            tasks.push_back(c * static_cast<std::size_t>(spec.trials) +
                            static_cast<std::size_t>(t));

    parallel_for(tasks.size(), workers, [&](std::size_t ti) {
        const std::size_t flat = tasks[ti];
        const std::size_t c = flat / static_cast<std::size_t>(spec.trials);
        const int trial = static_cast<int>(flat % static_cast<std::size_t>(spec.trials));
        const PhaseCellResult& cell = cells[c].base;

        const std::uint64_t trial_seed = derive_seed(
            spec.master_seed, cells[c].index, static_cast<std::uint64_t>(trial));
        const SensingMatrix A =
            gaussian_matrix(cell.m, cell.n, derive_seed(trial_seed, 1));
        const SparseSignal h =
            strictly_sparse(cell.n, cell.k, derive_seed(trial_seed, 2));
        const Eigen::VectorXd y = forward(A, h.values);

        double db;
        if (spec.algo == Algo::cosamp) {
            const RecoveryResult r = cosamp(A, y, cell.k);
            db = r.estimate.allFinite() ? nmse_db(r.estimate, h.values)
                                        : std::numeric_limits<double>::infinity();
        } else {
            const AmpConfig config = detail::amp_config_for(spec.algo, spec.config);
            const TauTuneResult r = tune_tau_oracle(A, y, h.values, taus, config);
            db = r.result.estimate.allFinite()
                     ? nmse_db(r.result.estimate, h.values)
                     : std::numeric_limits<double>::infinity();
        }
        TrialOutcome& out = outcomes[c][static_cast<std::size_t>(trial)];
        out.success = success(db, spec.success_threshold_db);
        out.nmse_db_clamped = detail::clamped_db(db);
    });

    std::vector<PhaseCellResult> results;
    results.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        PhaseCellResult r = cells[c].base;
        if (!r.skipped) {
            double acc = 0.0;
            for (const auto& out : outcomes[c]) {
                r.successes += out.success ? 1 : 0;
                acc += out.nmse_db_clamped;
            }
            r.success_rate = static_cast<double>(r.successes) / r.trials;
            r.mean_nmse_db = acc / r.trials;
        }
        results.push_back(std::move(r));
    }
    return results;
}

/// Channel-estimation benchmark: one approximately sparse channel per run
/// (fixed by the master seed), R fresh (Toeplitz-BPSK matrix, noise)
/// realizations per training length, identical instances shared across
/// algorithms.
struct BenchmarkSpec {
    ChannelPreset preset;
    std::vector<int> m_values;
    std::vector<Algo> algorithms{Algo::s_amp, Algo::h_amp, Algo::cosamp,
                                 Algo::ls, Algo::opt_ls};
    int realizations = 20;
    double snr_db = 20.0;
    AmpConfig config{};
    TauGrid tau_grid{};
    double decay_rate = 0.7;
    double tail_fraction = 0.01;
    std::uint64_t master_seed = 0;
};

struct BenchmarkRow {
    std::string preset;
    int n = 0;
    int k = 0;
    int m = 0;
    Algo algo = Algo::ls;
    double snr_db = 0.0;
    int trials = 0;
    double mse_db = 0.0;
    std::vector<double> squared_errors; // per realization
};

inline std::vector<BenchmarkRow> channel_benchmark(const BenchmarkSpec& spec,
                                                   int workers = 1,
                                                   std::vector<int>* skipped_m = nullptr) {
    if (spec.m_values.empty()) throw std::invalid_argument("benchmark: no m values");
    if (spec.realizations < 1) throw std::invalid_argument("benchmark: R must be >= 1");
    if (spec.algorithms.empty()) throw std::invalid_argument("benchmark: no algorithms");

    std::vector<int> usable_m;
    for (int m : spec.m_values) {
        if (m < spec.preset.m_min || m > spec.preset.m_max) {
            if (skipped_m) skipped_m->push_back(m);
            continue;
        }
        usable_m.push_back(m);
    }

    const SparseSignal channel = thz_like_channel(
        spec.preset, spec.decay_rate, spec.tail_fraction,
        derive_seed(spec.master_seed, 0x6368616eULL)); // "chan"
    const auto taus = spec.tau_grid.values();
    const std::size_t R = static_cast<std::size_t>(spec.realizations);
    const std::size_t n_algos = spec.algorithms.size();

    // errors[m_index][algo_index][realization]
    std::vector<std::vector<std::vector<double>>> errors(
        usable_m.size(),
        std::vector<std::vector<double>>(n_algos, std::vector<double>(R, 0.0)));

    parallel_for(usable_m.size() * R, workers, [&](std::size_t ti) {
        const std::size_t mi = ti / R;
        const std::size_t r = ti % R;
        const int m = usable_m[mi];

        const std::uint64_t seed =
            derive_seed(spec.master_seed, static_cast<std::uint64_t>(mi),
                        static_cast<std::uint64_t>(r), 0xbe);
        const SensingMatrix A =
            toeplitz_bpsk_matrix(m, spec.preset.n, derive_seed(seed, 1));
        const Eigen::VectorXd y_clean = forward(A, channel.values);
        const NoisyMeasurement meas =
            add_noise(y_clean, spec.snr_db, derive_seed(seed, 2));

        for (std::size_t ai = 0; ai < n_algos; ++ai) {
            Eigen::VectorXd estimate;
            switch (spec.algorithms[ai]) {
                case Algo::s_amp:
                case Algo::h_amp: {
                    const AmpConfig config =
                        detail::amp_config_for(spec.algorithms[ai], spec.config);
                    estimate = tune_tau_oracle(A, meas.y, channel.values, taus,
                                               config)
                                   .result.estimate;
                    break;
                }
                case Algo::cosamp:
                    estimate = cosamp(A, meas.y, spec.preset.k).estimate;
                    break;
                case Algo::ls:
                    estimate = least_squares(A, meas.y);
                    break;
                case Algo::opt_ls:
                    estimate = oracle_ls(A, meas.y, channel.support);
                    break;
            }
            errors[mi][ai][r] = estimate.allFinite()
                                    ? (channel.values - estimate).squaredNorm()
                                    : std::numeric_limits<double>::infinity();
        }
    });

    std::vector<BenchmarkRow> rows;
    for (std::size_t mi = 0; mi < usable_m.size(); ++mi) {
        for (std::size_t ai = 0; ai < n_algos; ++ai) {
            BenchmarkRow row;
            row.preset = spec.preset.name;
            row.n = spec.preset.n;
            row.k = spec.preset.k;
            row.m = usable_m[mi];
            row.algo = spec.algorithms[ai];
            row.snr_db = spec.snr_db;
            row.trials = spec.realizations;
            double acc = 0.0;
            for (double e : errors[mi][ai]) acc += e;
            row.mse_db = to_db(acc / static_cast<double>(spec.realizations));
            row.squared_errors = errors[mi][ai];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace ampcs

#endif // AMPCS_EXPERIMENTS_HPP
