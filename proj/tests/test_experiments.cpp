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

#include "ampcs/experiments.hpp"

using namespace ampcs;
using Catch::Approx;

namespace {

PhaseGridSpec small_spec() {
    PhaseGridSpec spec;
    spec.delta_values = {0.5};
    spec.sparsity_values = {0.1, 0.8};
    spec.n_policy = NPolicy::fixed(60);
    spec.trials = 3;
    spec.algo = Algo::s_amp;
    spec.config.max_iters = 50;
    spec.tau_grid = {0.5, 2.0, 0.5};
    spec.master_seed = 17;
    return spec;
}

bool rows_equal(const std::vector<PhaseCellResult>& a,
                const std::vector<PhaseCellResult>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].delta != b[i].delta || a[i].rho_prime != b[i].rho_prime ||
            a[i].n != b[i].n || a[i].m != b[i].m || a[i].k != b[i].k ||
            a[i].trials != b[i].trials || a[i].successes != b[i].successes ||
            a[i].success_rate != b[i].success_rate ||
            a[i].mean_nmse_db != b[i].mean_nmse_db ||
            a[i].skipped != b[i].skipped)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("fixed and dynamic n policies", "[experiments]") {
    const auto fixed = NPolicy::fixed(750);
    CHECK(fixed.n_for(0.1) == 750);
    CHECK(fixed.n_for(0.9) == 750);

    const auto single = NPolicy::dynamic_table({{0.05, 4000}});
    CHECK(single.n_for(0.05) == 4000);
    CHECK(single.n_for(0.5) == 4000);

    const auto dyn = NPolicy::default_dynamic();
    CHECK(dyn.n_for(0.002) == 20000);
    CHECK(dyn.n_for(0.0001) == 20000);
    CHECK(dyn.n_for(0.215) == 2000);
    CHECK(dyn.n_for(0.9) == 2000);

    // geometric interpolation between the anchors
    const double t = (std::log(0.05) - std::log(0.002)) /
                     (std::log(0.215) - std::log(0.002));
    const int expected = static_cast<int>(
        std::lround(std::exp(std::log(20000.0) +
                             t * (std::log(2000.0) - std::log(20000.0)))));
    CHECK(dyn.n_for(0.05) == expected);

    int prev = dyn.n_for(0.002);
    for (double d = 0.004; d <= 0.215; d += 0.004) {
        const int n = dyn.n_for(d);
        REQUIRE(n <= prev);
        prev = n;
    }
}

TEST_CASE("tau grid produces the default 30 values", "[experiments]") {
    const auto values = TauGrid{}.values();
    REQUIRE(values.size() == 30);
    CHECK(values.front() == Approx(0.1));
    CHECK(values.back() == Approx(3.0));
}

TEST_CASE("phase results are identical across reruns and worker counts",
          "[experiments]") {
    const auto spec = small_spec();
    const auto a = phase_transition(spec, 1);
    const auto b = phase_transition(spec, 1);
    const auto c = phase_transition(spec, 3);
    CHECK(rows_equal(a, b));
    CHECK(rows_equal(a, c));
}

TEST_CASE("phase cells keep consistent geometry and counts", "[experiments]") {
    const auto rows = phase_transition(small_spec(), 2);
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        REQUIRE(r.successes <= r.trials);
        REQUIRE(std::abs(static_cast<double>(r.m) / r.n - r.delta) <=
                1.0 / r.n);
        REQUIRE(r.k >= 1);
        REQUIRE(r.success_rate ==
                Approx(static_cast<double>(r.successes) / r.trials));
    }
}

TEST_CASE("deep success and deep failure cells classify correctly",
          "[experiments]") {
    // far below the analytical curve: rho'_crit(0.9) ~ 0.68
    PhaseGridSpec lo;
    lo.delta_values = {0.9};
    lo.sparsity_values = {0.05};
    lo.n_policy = NPolicy::fixed(500);
    lo.trials = 10;
    lo.algo = Algo::s_amp;
    lo.config.max_iters = 100;
    lo.master_seed = 5;
    const auto below = phase_transition(lo, 2);
    REQUIRE(below.size() == 1);
    CHECK(below[0].success_rate == 1.0);

    // far above the curve: rho'_crit(0.2) ~ 0.24
    PhaseGridSpec hi = lo;
    hi.delta_values = {0.2};
    hi.sparsity_values = {0.9};
    const auto above = phase_transition(hi, 2);
    REQUIRE(above.size() == 1);
    CHECK(above[0].success_rate == 0.0);
}

TEST_CASE("infeasible cells are skipped, not fatal", "[experiments]") {
    PhaseGridSpec spec;
    spec.delta_values = {2.0};
    spec.sparsity_values = {0.9}; // k = round(0.9 * 2n) > n
    spec.n_policy = NPolicy::fixed(10);
    spec.trials = 2;
    spec.master_seed = 1;
    const auto rows = phase_transition(spec, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].skipped);
    CHECK(rows[0].trials == 0);
}

TEST_CASE("rho axis derives k from n", "[experiments]") {
    PhaseGridSpec spec = small_spec();
    spec.axis = SparsityAxis::rho;
    spec.sparsity_values = {0.1};
    const auto rows = phase_transition(spec, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].k == 6); // round(0.1 * 60)
    CHECK(rows[0].rho_prime == Approx(6.0 / rows[0].m));
}

TEST_CASE("phase spec validation", "[experiments]") {
    PhaseGridSpec spec = small_spec();
    spec.delta_values = {2.5};
    CHECK_THROWS_AS(phase_transition(spec), std::invalid_argument);
    spec = small_spec();
    spec.trials = 0;
    CHECK_THROWS_AS(phase_transition(spec), std::invalid_argument);
    spec = small_spec();
    spec.algo = Algo::ls;
    CHECK_THROWS_AS(phase_transition(spec), std::invalid_argument);
}

TEST_CASE("channel benchmark rows, determinism and aggregation", "[experiments]") {
    BenchmarkSpec spec;
    spec.preset = custom_preset(120, 5, 20, 100, 25.0);
    spec.m_values = {40, 80, 500}; // 500 is out of range
    spec.algorithms = {Algo::s_amp, Algo::cosamp, Algo::ls, Algo::opt_ls};
    spec.realizations = 3;
    spec.snr_db = 25.0;
    spec.config.max_iters = 100;
    spec.master_seed = 9;

    std::vector<int> skipped;
    const auto rows = channel_benchmark(spec, 2, &skipped);
    REQUIRE(skipped == std::vector<int>{500});
    REQUIRE(rows.size() == 2 * 4);

    for (const auto& r : rows) {
        REQUIRE(r.n == 120);
        REQUIRE(r.k == 5);
        REQUIRE(r.trials == 3);
        REQUIRE(r.squared_errors.size() == 3);
        double acc = 0.0;
        for (double e : r.squared_errors) acc += e;
        REQUIRE(r.mse_db == Approx(10.0 * std::log10(acc / 3.0)).margin(1e-12));
    }

    const auto rerun = channel_benchmark(spec, 1, nullptr);
    REQUIRE(rerun.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].mse_db == rerun[i].mse_db);
        REQUIRE(rows[i].m == rerun[i].m);
        REQUIRE(rows[i].algo == rerun[i].algo);
    }
}

TEST_CASE("overdetermined least squares sits near the oracle bound",
          "[experiments]") {
    BenchmarkSpec spec;
    spec.preset = custom_preset(60, 4, 20, 100, 30.0);
    spec.m_values = {80}; // m > n
    spec.algorithms = {Algo::ls, Algo::opt_ls};
    spec.realizations = 5;
    spec.snr_db = 30.0;
    spec.master_seed = 33;

    const auto rows = channel_benchmark(spec, 1, nullptr);
    REQUIRE(rows.size() == 2);
    const double ls_db = rows[0].mse_db;
    const double opt_db = rows[1].mse_db;
    CHECK(ls_db <= opt_db + 3.0);
}
