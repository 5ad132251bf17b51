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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "ampcs/model.hpp"
#include "ampcs/signals.hpp"

using namespace ampcs;
using Catch::Approx;

namespace {

int count_nonzeros(const Eigen::VectorXd& v) {
    int count = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0.0) ++count;
    return count;
}

double off_support_energy(const SparseSignal& s) {
    Eigen::VectorXd off = s.values;
    for (int i : s.support) off(i) = 0.0;
    return off.squaredNorm();
}

} // namespace

TEST_CASE("strictly sparse edge cases", "[signals]") {
    const auto zero = strictly_sparse(10, 0, 1);
    CHECK(zero.values.norm() == 0.0);
    CHECK(zero.support.empty());

    const auto full = strictly_sparse(10, 10, 1);
    CHECK(count_nonzeros(full.values) == 10);
}

TEST_CASE("strictly sparse has exactly k nonzeros on its support", "[signals]") {
    for (auto [n, k] : {std::pair{1000, 57}, std::pair{50, 1}, std::pair{8, 8},
                        std::pair{200, 100}}) {
        const auto s = strictly_sparse(n, k, 7);
        REQUIRE(s.k == k);
        REQUIRE(static_cast<int>(s.support.size()) == k);
        REQUIRE(count_nonzeros(s.values) == k);
        REQUIRE(std::is_sorted(s.support.begin(), s.support.end()));
        for (int i : s.support) {
            REQUIRE(i >= 0);
            REQUIRE(i < n);
            REQUIRE(s.values(i) != 0.0);
        }
        const auto g = geometry(n, 1, k);
        REQUIRE(g.rho == Approx(double(k) / n));
    }
    CHECK_THROWS_AS(strictly_sparse(5, 6, 0), std::invalid_argument);
}

TEST_CASE("strictly sparse is seed deterministic", "[signals]") {
    const auto a = strictly_sparse(300, 30, 99);
    const auto b = strictly_sparse(300, 30, 99);
    const auto c = strictly_sparse(300, 30, 98);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
}

TEST_CASE("table presets carry the published shapes", "[signals]") {
    const auto p32 = preset_by_name("32-band-first");
    CHECK(p32.n == 1585);
    CHECK(p32.k == 9);
    CHECK(p32.m_min == 100);
    CHECK(p32.m_max == 3000);
    CHECK(p32.subbands == 32);

    const auto p16 = preset_by_name("16-band-third");
    CHECK(p16.n == 3223);
    CHECK(p16.k == 9);
    CHECK(p16.m_max == 5000);

    CHECK_THROWS_AS(preset_by_name("8-band-second"), std::invalid_argument);
}

TEST_CASE("thz-like channel honors the preset and decay profile", "[signals]") {
    const auto preset = preset_by_name("32-band-first");
    const auto s = thz_like_channel(preset, 0.7, 0.01, 5);
    CHECK(s.values.size() == 1585);
    CHECK(static_cast<int>(s.support.size()) == 9);

    // dominant taps decay geometrically in delay order
    for (std::size_t j = 0; j + 1 < s.support.size(); ++j) {
        const double cur = std::abs(s.values(s.support[j]));
        const double nxt = std::abs(s.values(s.support[j + 1]));
        REQUIRE(nxt == Approx(0.7 * cur).epsilon(1e-9));
    }
}

TEST_CASE("thz-like channel hits the requested energy tail", "[signals]") {
    const auto preset = custom_preset(400, 9, 10, 200);
    for (double tail : {0.01, 0.1, 0.5}) {
        const auto s = thz_like_channel(preset, 0.7, tail, 11);
        const double off = off_support_energy(s);
        const double total = s.values.squaredNorm();
        REQUIRE(off / total == Approx(tail).margin(1e-6));
    }
}

TEST_CASE("zero tail fraction degenerates to a strictly sparse signal", "[signals]") {
    const auto preset = custom_preset(100, 5, 10, 50);
    const auto s = thz_like_channel(preset, 0.8, 0.0, 3);
    CHECK(count_nonzeros(s.values) == 5);
}

TEST_CASE("thz-like channel validates its parameters", "[signals]") {
    const auto preset = custom_preset(100, 5, 10, 50);
    CHECK_THROWS_AS(thz_like_channel(preset, 0.7, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(thz_like_channel(preset, 0.7, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(thz_like_channel(preset, 0.0, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(thz_like_channel(preset, 1.5, 0.1, 1), std::invalid_argument);
}

TEST_CASE("infinite snr leaves the measurement untouched", "[signals]") {
    Eigen::VectorXd y(4);
    y << 1, 2, 3, 4;
    const auto out = add_noise(y, std::numeric_limits<double>::infinity(), 3);
    CHECK(out.y == y);
    CHECK(out.noise_variance == 0.0);
}

TEST_CASE("snr 0 dB puts noise energy at signal energy", "[signals]") {
    Eigen::VectorXd y(16);
    for (int i = 0; i < 16; ++i) y(i) = 1.0 + 0.25 * i;
    const double signal_energy = y.squaredNorm();

    double noise_energy = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto out = add_noise(y, 0.0, 1000 + static_cast<std::uint64_t>(t));
        noise_energy += (out.y - y).squaredNorm();
    }
    noise_energy /= trials;
    CHECK(noise_energy == Approx(signal_energy).epsilon(0.05));
}

TEST_CASE("realized noise variance matches the advertised one", "[signals]") {
    Eigen::VectorXd y = Eigen::VectorXd::Ones(20000);
    const auto out = add_noise(y, 7.0, 42);
    const Eigen::VectorXd noise = out.y - y;
    const double mean = noise.mean();
    const double var = noise.squaredNorm() / noise.size() - mean * mean;
    CHECK(var == Approx(out.noise_variance).epsilon(0.05));
}

TEST_CASE("noise is seed deterministic", "[signals]") {
    Eigen::VectorXd y(8);
    y << 1, -1, 2, -2, 3, -3, 4, -4;
    const auto a = add_noise(y, 10.0, 5);
    const auto b = add_noise(y, 10.0, 5);
    const auto c = add_noise(y, 10.0, 6);
    CHECK(a.y == b.y);
    CHECK(a.y != c.y);
}

TEST_CASE("finite snr rejects an all-zero clean signal", "[signals]") {
    CHECK_THROWS_AS(add_noise(Eigen::VectorXd::Zero(4), 10.0, 1),
                    std::invalid_argument);
}
