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

#include "ampcs/rng.hpp"
#include "ampcs/thresholding.hpp"

using namespace ampcs;
using Catch::Approx;

namespace {

// Independent 1-D minimizer by dense grid search plus local refinement.
double grid_minimize(double lo, double hi, const std::function<double(double)>& f) {
    double best_x = lo, best_f = f(lo);
    const int coarse = 4000;
    for (int i = 1; i <= coarse; ++i) {
        const double x = lo + (hi - lo) * i / coarse;
        const double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    const double step = (hi - lo) / coarse;
    double a = best_x - step, b = best_x + step;
    for (int refine = 0; refine < 3; ++refine) {
        const int fine = 200;
        double local_x = best_x;
        for (int i = 0; i <= fine; ++i) {
            const double x = a + (b - a) * i / fine;
            const double fx = f(x);
            if (fx < best_f) {
                best_f = fx;
                local_x = x;
            }
        }
        const double s = (b - a) / fine;
        best_x = local_x;
        a = local_x - s;
        b = local_x + s;
    }
    return best_x;
}

} // namespace

TEST_CASE("soft threshold base values", "[thresholding]") {
    CHECK(soft_threshold(2.5, 1.0) == Approx(1.5));
    CHECK(soft_threshold(-0.5, 1.0) == 0.0);
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const double a = 4.0 * rng.normal();
        REQUIRE(soft_threshold(a, 0.0) == a);
    }
}

TEST_CASE("hard threshold base values", "[thresholding]") {
    CHECK(hard_threshold(2.5, 1.0) == 2.5);
    CHECK(hard_threshold(0.5, 1.0) == 0.0);
    CHECK(hard_threshold(-3.0, 1.0) == -3.0);
}

TEST_CASE("boundary conventions at |a| = theta", "[thresholding]") {
    CHECK(soft_threshold(1.0, 1.0) == 0.0);
    CHECK(soft_threshold(-1.0, 1.0) == 0.0);
    CHECK(hard_threshold(1.0, 1.0) == 1.0);
    CHECK(hard_threshold(-1.0, 1.0) == -1.0);
}

TEST_CASE("soft threshold is the l1 prox", "[thresholding]") {
    Rng rng(2);
    for (int probe = 0; probe < 300; ++probe) {
        const double a = 5.0 * rng.normal();
        const double theta = 2.0 * rng.uniform01();
        const double direct = soft_threshold(a, theta);
        const double bound = std::abs(a) + theta + 1.0;
        const double searched = grid_minimize(-bound, bound, [&](double x) {
            return 0.5 * (x - a) * (x - a) + theta * std::abs(x);
        });
        REQUIRE(std::abs(direct - searched) < 1e-6);
    }
}

TEST_CASE("hard threshold is the l0 prox up to the boundary tie", "[thresholding]") {
    Rng rng(3);
    for (int probe = 0; probe < 300; ++probe) {
        const double a = 5.0 * rng.normal();
        const double theta = 2.0 * rng.uniform01();
        if (std::abs(std::abs(a) - theta) < 1e-4) continue; // tie region excluded
        const double direct = hard_threshold(a, theta);
        // prox of (theta^2/2)*1[x != 0]: compare keeping a vs killing it
        const double keep_cost = 0.5 * theta * theta;
        const double kill_cost = 0.5 * a * a;
        const double expected = keep_cost < kill_cost ? a : 0.0;
        REQUIRE(direct == expected);
    }
}

TEST_CASE("shrinkage never grows magnitude and keeps signs", "[thresholding]") {
    Rng rng(4);
    for (int probe = 0; probe < 1000; ++probe) {
        const double a = 5.0 * rng.normal();
        const double theta = 2.0 * rng.uniform01();
        const double s = soft_threshold(a, theta);
        REQUIRE(std::abs(s) <= std::abs(a));
        REQUIRE(s * a >= 0.0);
        const double h = hard_threshold(a, theta);
        REQUIRE((h == 0.0 || h == a));
    }
}

TEST_CASE("onsager coefficient counts threshold exceedances", "[thresholding]") {
    Eigen::VectorXd v(3);
    v << 2.0, 0.1, -3.0;
    CHECK(onsager_coefficient(v, 1.0, ThresholdKind::soft) == Approx(2.0 / 3.0));
    CHECK(onsager_coefficient(v, 1.0, ThresholdKind::hard) == Approx(2.0 / 3.0));

    Eigen::VectorXd small(4);
    small << 0.1, -0.2, 0.05, 0.0;
    CHECK(onsager_coefficient(small, 1.0, ThresholdKind::soft) == 0.0);

    Eigen::VectorXd nonzero(5);
    nonzero << 1, -2, 3, -4, 5;
    CHECK(onsager_coefficient(nonzero, 0.0, ThresholdKind::hard) == 1.0);
}
