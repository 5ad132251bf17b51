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

#ifndef AMPCS_L1_CURVE_HPP
#define AMPCS_L1_CURVE_HPP

#include <cmath>
#include <stdexcept>

namespace ampcs {

namespace detail {

inline double std_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) * 0.3989422804014326779; // 1/sqrt(2*pi)
}

inline double std_normal_cdf_neg(double z) { // Phi(-z)
    return 0.5 * std::erfc(z * 0.7071067811865475244); // z / sqrt(2)
}

// Objective of the parametric l1 transition characterization
// (Donoho/Maleki/Montanari):
//   rho(delta) = max_{z>=0} [1 - (2/delta) g(z)] / [1 + z^2 - 2 g(z)],
//   g(z) = (1+z^2) Phi(-z) - z phi(z).
// The denominator vanishes as z -> 0, so evaluation starts at z > 0.
inline double l1_curve_objective(double z, double delta) {
    const double g = (1.0 + z * z) * std_normal_cdf_neg(z) - z * std_normal_pdf(z);
    const double num = 1.0 - (2.0 / delta) * g;
    const double den = 1.0 + z * z - 2.0 * g;
    return num / den;
}

} // namespace detail

/// Critical normalized sparsity rho' = k/m below which l1-norm minimization
/// (and soft-thresholding AMP) succeeds in the large-system limit, as a
/// function of the indeterminacy delta = m/n in (0, 1]. Evaluated by a
/// coarse scan over the scalar parameter followed by golden-section
/// refinement.
inline double dmm_l1_curve(double delta) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("dmm_l1_curve: delta must be in (0, 1]");

    constexpr double z_lo = 1e-9;
    constexpr double z_hi = 12.0;
    constexpr int scan_points = 1200;

    double best_z = z_lo;
    double best_f = detail::l1_curve_objective(z_lo, delta);
    for (int i = 1; i <= scan_points; ++i) {
        const double z = z_lo + (z_hi - z_lo) * static_cast<double>(i) /
                                    static_cast<double>(scan_points);
        const double f = detail::l1_curve_objective(z, delta);
        if (f > best_f) {
            best_f = f;
            best_z = z;
        }
    }

    const double step = (z_hi - z_lo) / static_cast<double>(scan_points);
    double a = std::max(z_lo, best_z - step);
    double b = best_z + step;
    constexpr double golden = 0.6180339887498948482;
    double x1 = b - golden * (b - a);
    double x2 = a + golden * (b - a);
    double f1 = detail::l1_curve_objective(x1, delta);
    double f2 = detail::l1_curve_objective(x2, delta);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + golden * (b - a);
            f2 = detail::l1_curve_objective(x2, delta);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - golden * (b - a);
            f1 = detail::l1_curve_objective(x1, delta);
        }
    }
    const double rho = std::max(best_f, std::max(f1, f2));
    return std::min(std::max(rho, 0.0), 1.0);
}

} // namespace ampcs

#endif // AMPCS_L1_CURVE_HPP
