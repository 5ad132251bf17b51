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

#ifndef AMPCS_THRESHOLDING_HPP
#define AMPCS_THRESHOLDING_HPP

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ampcs {

enum class ThresholdKind { soft, hard };

inline const char* threshold_kind_name(ThresholdKind k) {
    return k == ThresholdKind::soft ? "soft" : "hard";
}

inline ThresholdKind threshold_kind_from_name(const std::string& s) {
    if (s == "soft") return ThresholdKind::soft;
    if (s == "hard") return ThresholdKind::hard;
    throw std::invalid_argument("unknown thresholder kind: " + s);
}

/// Element-wise shrinkage nonlinearity; tau scales the per-iteration
/// residual level into the actual threshold theta = tau * sigma.
struct Thresholder {
    ThresholdKind kind = ThresholdKind::soft;
    double tau = 1.0;
};

/// Shrink-toward-zero (proximal operator of theta * |x|).
/// |a| = theta lands on 0; both branch definitions agree there.
inline double soft_threshold(double a, double theta) {
    if (a >= theta) return a - theta;
    if (a <= -theta) return a + theta;
    return 0.0;
}

/// Keep-or-kill (prox of the scaled l0 penalty up to the tie at the
/// boundary, which keeps a for determinism).
inline double hard_threshold(double a, double theta) {
    return (std::abs(a) >= theta) ? a : 0.0;
}

inline double apply_threshold(ThresholdKind kind, double a, double theta) {
    return kind == ThresholdKind::soft ? soft_threshold(a, theta)
                                       : hard_threshold(a, theta);
}

inline Eigen::VectorXd apply_threshold(ThresholdKind kind,
                                       const Eigen::VectorXd& v, double theta) {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = apply_threshold(kind, v(i), theta);
    return out;
}

/// Empirical mean of the thresholder derivative over the entries of v: for
/// both kinds the derivative is 1 on the pass-through region and 0 where
/// the output is zeroed, so this is the fraction of entries with |v_i| >
/// theta. (The kink itself is measure-zero; its a.e. value is used.)
inline double onsager_coefficient(const Eigen::VectorXd& v, double theta,
                                  ThresholdKind /*kind*/) {
    if (v.size() < 1)
        throw std::invalid_argument("onsager_coefficient: empty vector");
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > theta) ++count;
    return static_cast<double>(count) / static_cast<double>(v.size());
}

} // namespace ampcs

#endif // AMPCS_THRESHOLDING_HPP
