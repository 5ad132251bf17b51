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

#ifndef AMPCS_SIGNALS_HPP
#define AMPCS_SIGNALS_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ampcs/rng.hpp"

namespace ampcs {

/// Length-n vector with known support. For strictly sparse signals exactly
/// the k support entries are nonzero; approximately sparse signals list the
/// k dominant taps and carry a small controlled energy tail elsewhere.
struct SparseSignal {
    Eigen::VectorXd values;
    std::vector<int> support; // sorted ascending
    int k = 0;
};

/// Subband description: channel length, dominant-tap count, admissible
/// training lengths, and the default measurement SNR.
struct ChannelPreset {
    std::string name;
    int subbands = 0;
    int used_subband = 0;
    int n = 0;
    int k = 0;
    int m_min = 0;
    int m_max = 0;
    double snr_db = 20.0;
};

inline const std::vector<ChannelPreset>& channel_presets() {
    static const std::vector<ChannelPreset> presets = {
        {"32-band-first", 32, 1, 1585, 9, 100, 3000, 20.0},
        {"16-band-third", 16, 3, 3223, 9, 100, 5000, 20.0},
    };
    return presets;
}

inline ChannelPreset preset_by_name(const std::string& name) {
    for (const auto& p : channel_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown channel preset: " + name);
}

/// Makes a user-defined preset; n >= k >= 1 is required.
inline ChannelPreset custom_preset(int n, int k, int m_min, int m_max,
                                   double snr_db = 20.0) {
    if (k < 1 || n < k) throw std::invalid_argument("preset: need n >= k >= 1");
    if (m_min < 1 || m_max < m_min) throw std::invalid_argument("preset: bad m range");
    return {"custom", 0, 0, n, k, m_min, m_max, snr_db};
}

namespace detail {

// k distinct indices from [0, n), sorted. Partial Fisher-Yates on an index
// array keeps the draw order independent of k vs n-k.
inline std::vector<int> draw_support(int n, int k, Rng& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.uniform_below(
                               static_cast<std::uint64_t>(n - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(k));
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace detail

/// Strictly sparse vector: support uniform without replacement, nonzero
/// amplitudes i.i.d. standard normal (redrawn in the measure-zero case of
/// an exact zero).
inline SparseSignal strictly_sparse(int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("strictly_sparse: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("strictly_sparse: need 0 <= k <= n");
    SparseSignal s;
    s.values = Eigen::VectorXd::Zero(n);
    s.k = k;
    Rng rng(derive_seed(seed, 0x7370617273ULL)); // "spars"
    s.support = detail::draw_support(n, k, rng);
    for (int i : s.support) {
        double a = 0.0;
        do {
            a = rng.normal();
        } while (a == 0.0);
        s.values(i) = a;
    }
    return s;
}

/// Approximately sparse channel surrogate: k dominant taps at random delays
/// whose magnitudes decay geometrically (factor decay_rate per tap in delay
/// order) with random signs, plus i.i.d. noise on the remaining taps scaled
/// so that off-support energy / total energy equals tail_fraction.
inline SparseSignal thz_like_channel(const ChannelPreset& preset,
                                     double decay_rate, double tail_fraction,
                                     std::uint64_t seed) {
    const int n = preset.n;
    const int k = preset.k;
    if (k < 1 || k > n) throw std::invalid_argument("thz_like_channel: need 1 <= k <= n");
    if (!(decay_rate > 0.0) || decay_rate > 1.0)
        throw std::invalid_argument("thz_like_channel: decay_rate must be in (0, 1]");
    if (tail_fraction < 0.0 || tail_fraction >= 1.0)
        throw std::invalid_argument("thz_like_channel: tail_fraction must be in [0, 1)");
    if (k == n && tail_fraction > 0.0)
        throw std::invalid_argument("thz_like_channel: no room for a tail when k = n");

    SparseSignal s;
    s.values = Eigen::VectorXd::Zero(n);
    s.k = k;
    Rng rng(derive_seed(seed, 0x74687aULL)); // "thz"
    s.support = detail::draw_support(n, k, rng);

    double on_energy = 0.0;
    double mag = 1.0;
    for (int j = 0; j < k; ++j) {
        s.values(s.support[static_cast<std::size_t>(j)]) = rng.sign() * mag;
        on_energy += mag * mag;
        mag *= decay_rate;
    }

    if (tail_fraction > 0.0) {
        std::vector<char> on(static_cast<std::size_t>(n), 0);
        for (int i : s.support) on[static_cast<std::size_t>(i)] = 1;
        Eigen::VectorXd tail = Eigen::VectorXd::Zero(n);
        double tail_energy = 0.0;
        for (int i = 0; i < n; ++i) {
            if (on[static_cast<std::size_t>(i)]) continue;
            double a = 0.0;
            do {
                a = rng.normal();
            } while (a == 0.0);
            tail(i) = a;
            tail_energy += a * a;
        }
        // off/total = tail_fraction  =>  off = on * tail_fraction / (1 - tail_fraction)
        const double target = on_energy * tail_fraction / (1.0 - tail_fraction);
        s.values += tail * std::sqrt(target / tail_energy);
    }
    return s;
}

struct NoisyMeasurement {
    Eigen::VectorXd y;
    double noise_variance = 0.0;
};

/// Additive white Gaussian noise at a prescribed SNR:
/// sigma_n^2 = ||y_clean||^2 / (m * 10^(snr_db/10)). An infinite snr_db
/// returns the clean vector untouched.
inline NoisyMeasurement add_noise(const Eigen::VectorXd& y_clean, double snr_db,
                                  std::uint64_t seed) {
    NoisyMeasurement out;
    if (std::isinf(snr_db) && snr_db > 0.0) {
        out.y = y_clean;
        out.noise_variance = 0.0;
        return out;
    }
    const double energy = y_clean.squaredNorm();
    if (energy <= 0.0)
        throw std::invalid_argument("add_noise: clean signal must be nonzero for finite SNR");
    const auto m = y_clean.size();
    out.noise_variance =
        energy / (static_cast<double>(m) * std::pow(10.0, snr_db / 10.0));
    const double sigma = std::sqrt(out.noise_variance);
    Rng rng(derive_seed(seed, 0x6e6f697365ULL)); // "noise"
    out.y = y_clean;
    for (Eigen::Index i = 0; i < m; ++i) out.y(i) += sigma * rng.normal();
    return out;
}

} // namespace ampcs

#endif // AMPCS_SIGNALS_HPP
