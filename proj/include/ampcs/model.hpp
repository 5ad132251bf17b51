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

#ifndef AMPCS_MODEL_HPP
#define AMPCS_MODEL_HPP

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ampcs {

/// Finite stand-in for -inf dB in serialized output (CSV/JSON cannot carry
/// IEEE infinities portably). In-memory APIs return the true -inf.
inline constexpr double kDbFloor = -300.0;

/// Problem geometry of an m x n sparse recovery instance with k nonzeros.
///
/// delta = m/n (indeterminacy), rho = k/n (sparsity factor),
/// rho_prime = k/m (normalized sparsity), r = 1/delta (compression rate).
struct ProblemGeometry {
    int n = 0;
    int m = 0;
    int k = 0;
    double delta = 0.0;
    double rho = 0.0;
    double rho_prime = 0.0;
    double r = 0.0;
};

inline ProblemGeometry geometry(int n, int m, int k) {
    if (n < 1) throw std::invalid_argument("geometry: n must be >= 1");
    if (m < 1) throw std::invalid_argument("geometry: m must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("geometry: need 0 <= k <= n");
    ProblemGeometry g;
    g.n = n;
    g.m = m;
    g.k = k;
    g.delta = static_cast<double>(m) / static_cast<double>(n);
    g.rho = static_cast<double>(k) / static_cast<double>(n);
    g.rho_prime = static_cast<double>(k) / static_cast<double>(m);
    g.r = 1.0 / g.delta;
    return g;
}

/// Squared error of the estimate normalized by the energy of the truth.
inline double nmse(const Eigen::VectorXd& h_hat, const Eigen::VectorXd& h) {
    if (h_hat.size() != h.size())
        throw std::invalid_argument("nmse: length mismatch");
    const double denom = h.squaredNorm();
    if (denom <= 0.0)
        throw std::invalid_argument("nmse: true vector must be nonzero");
    return (h_hat - h).squaredNorm() / denom;
}

/// 10*log10 of a nonnegative ratio; 0 maps to -inf.
inline double to_db(double ratio) {
    if (ratio <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

inline double nmse_db(const Eigen::VectorXd& h_hat, const Eigen::VectorXd& h) {
    return to_db(nmse(h_hat, h));
}

/// Error in dB averaged over realizations: 10*log10[(1/R) sum_r ||h - h_r||^2].
/// The per-realization errors are unnormalized by convention.
inline double mse_db(const Eigen::VectorXd& h,
                     const std::vector<Eigen::VectorXd>& estimates) {
    if (estimates.empty())
        throw std::invalid_argument("mse_db: need at least one estimate");
    double acc = 0.0;
    for (const auto& est : estimates) {
        if (est.size() != h.size())
            throw std::invalid_argument("mse_db: length mismatch");
        acc += (h - est).squaredNorm();
    }
    return to_db(acc / static_cast<double>(estimates.size()));
}

/// Success criterion: reconstruction accepted when the error is at or below
/// the threshold. The boundary is inclusive.
inline bool success(double nmse_db_value, double threshold_db = -20.0) {
    return nmse_db_value <= threshold_db;
}

enum class RecoveryStatus { converged, max_iters, diverged };

inline const char* status_name(RecoveryStatus s) {
    switch (s) {
        case RecoveryStatus::converged: return "converged";
        case RecoveryStatus::max_iters: return "max-iters";
        case RecoveryStatus::diverged: return "diverged";
    }
    return "unknown";
}

/// Outcome of an iterative recovery run.
struct RecoveryResult {
    Eigen::VectorXd estimate;
    int iterations_run = 0;
    std::vector<double> sigma_history; // residual std dev per iteration
    RecoveryStatus status = RecoveryStatus::max_iters;
};

} // namespace ampcs

#endif // AMPCS_MODEL_HPP
