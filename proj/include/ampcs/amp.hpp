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

#ifndef AMPCS_AMP_HPP
#define AMPCS_AMP_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ampcs/model.hpp"
#include "ampcs/sensing.hpp"
#include "ampcs/thresholding.hpp"

namespace ampcs {

/// Iteration parameters. `onsager_enabled` exists for ablation experiments;
/// disabling it degrades AMP to plain iterative thresholding.
struct AmpConfig {
    Thresholder thresholder{};
    int max_iters = 200;
    double stop_tol = 1e-8;
    double divergence_factor = 10.0;
    bool onsager_enabled = true;
};

/// Iteration state. Each step computes, in order,
///
///   z^t     = y - A h^t + (1/delta) z^{t-1} <eta'(A^T z^{t-1} + h^{t-1})>
///   sigma_t = ||z^t||_2 / sqrt(m)
///   h^{t+1} = eta(A^T z^t + h^t)  elementwise, theta = tau * sigma_t
///
/// The Onsager factor <eta'> is cached when h^t is formed (it is evaluated
/// at the same argument), so an iteration costs one forward and one adjoint
/// application. At t = 0 there is no previous residual and the Onsager term
/// is zero; the initial state h^0 = 0, z^0 = y reflects that convention.
struct AmpState {
    Eigen::VectorXd h_hat;
    Eigen::VectorXd h_hat_prev;
    Eigen::VectorXd z;
    Eigen::VectorXd z_prev;
    Eigen::VectorXd Ah;       // A h_hat, carried to the next residual update
    double sigma = 0.0;
    double onsager = 0.0;     // <eta'> at the argument that produced h_hat
    double data_residual = 0.0; // ||y - A h_hat||
    int t = 0;
};

inline AmpState amp_init(const SensingMatrix& A, const Eigen::VectorXd& y) {
    if (y.size() != A.m) throw std::invalid_argument("amp: dimension mismatch");
    AmpState s;
    s.h_hat = Eigen::VectorXd::Zero(A.n);
    s.h_hat_prev = s.h_hat;
    s.z = y;
    s.z_prev = Eigen::VectorXd::Zero(A.m);
    s.Ah = Eigen::VectorXd::Zero(A.m);
    s.sigma = y.norm() / std::sqrt(static_cast<double>(A.m));
    s.onsager = 0.0;
    s.data_residual = y.norm();
    s.t = 0;
    return s;
}

inline void amp_iterate(AmpState& s, const SensingMatrix& A,
                        const Eigen::VectorXd& y, const AmpConfig& config) {
    if (y.size() != A.m || s.h_hat.size() != A.n)
        throw std::invalid_argument("amp: dimension mismatch");
    const double delta = static_cast<double>(A.m) / static_cast<double>(A.n);

    Eigen::VectorXd z_new = y - s.Ah;
    if (config.onsager_enabled && s.t > 0)
        z_new += (s.onsager / delta) * s.z;

    const double sigma = z_new.norm() / std::sqrt(static_cast<double>(A.m));
    const double theta = config.thresholder.tau * sigma;

    const Eigen::VectorXd v = adjoint(A, z_new) + s.h_hat;
    Eigen::VectorXd h_new = apply_threshold(config.thresholder.kind, v, theta);
    const double onsager_new = onsager_coefficient(v, theta, config.thresholder.kind);

    Eigen::VectorXd Ah_new = forward(A, h_new);

    s.h_hat_prev = std::move(s.h_hat);
    s.z_prev = std::move(s.z);
    s.h_hat = std::move(h_new);
    s.z = std::move(z_new);
    s.Ah = std::move(Ah_new);
    s.sigma = sigma;
    s.onsager = onsager_new;
    s.data_residual = (y - s.Ah).norm();
    s.t += 1;
}

/// Full AMP run. Stops on convergence (relative estimate change below
/// stop_tol, or an exact data fit), on the divergence guard (sigma growing
/// past divergence_factor times the smallest sigma seen, or non-finite
/// values), or after max_iters iterations.
inline RecoveryResult amp_run(const SensingMatrix& A, const Eigen::VectorXd& y,
                              const AmpConfig& config) {
    if (config.max_iters < 1) throw std::invalid_argument("amp: max_iters must be >= 1");
    if (config.thresholder.tau < 0.0) throw std::invalid_argument("amp: tau must be >= 0");
    if (!(config.divergence_factor > 1.0))
        throw std::invalid_argument("amp: divergence_factor must be > 1");

    constexpr double kRelChangeEps = 1e-12;
    const double y_norm = y.norm();

    AmpState s = amp_init(A, y);
    RecoveryResult result;
    result.sigma_history.reserve(static_cast<std::size_t>(config.max_iters));
    double sigma_min = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < config.max_iters; ++iter) {
        amp_iterate(s, A, y, config);
        result.sigma_history.push_back(s.sigma);
        result.iterations_run = s.t;

        if (!std::isfinite(s.sigma) || !std::isfinite(s.data_residual)) {
            result.status = RecoveryStatus::diverged;
            result.estimate = s.h_hat;
            return result;
        }
        if (s.sigma > config.divergence_factor * sigma_min) {
            result.status = RecoveryStatus::diverged;
            result.estimate = s.h_hat;
            return result;
        }
        sigma_min = std::min(sigma_min, s.sigma);

        const double change = (s.h_hat - s.h_hat_prev).norm() /
                              std::max(s.h_hat_prev.norm(), kRelChangeEps);
        if (change < config.stop_tol || s.data_residual <= 1e-12 * y_norm) {
            result.status = RecoveryStatus::converged;
            result.estimate = s.h_hat;
            return result;
        }
    }
    result.status = RecoveryStatus::max_iters;
    result.estimate = s.h_hat;
    return result;
}

/// Default threshold multiplier grid, 0.1 to 3.0 in steps of 0.1.
inline std::vector<double> default_tau_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 30; ++i) grid.push_back(0.1 * i);
    return grid;
}

struct TauTuneResult {
    double best_tau = 0.0;
    RecoveryResult result;
};

/// Oracle threshold selection: runs AMP for every tau in the grid and keeps
/// the one minimizing the final error against the known truth; ties go to
/// the smaller tau.
inline TauTuneResult tune_tau_oracle(const SensingMatrix& A,
                                     const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& h_true,
                                     const std::vector<double>& tau_grid,
                                     const AmpConfig& config) {
    if (tau_grid.empty())
        throw std::invalid_argument("tune_tau_oracle: empty tau grid");
    if (h_true.norm() <= 0.0)
        throw std::invalid_argument("tune_tau_oracle: truth must be nonzero");

    TauTuneResult best;
    double best_err = std::numeric_limits<double>::infinity();
    bool first = true;
    for (double tau : tau_grid) {
        AmpConfig c = config;
        c.thresholder.tau = tau;
        RecoveryResult r = amp_run(A, y, c);
        double err = (r.estimate.allFinite()) ? nmse(r.estimate, h_true)
                                              : std::numeric_limits<double>::infinity();
        if (first || err < best_err ||
            (err == best_err && tau < best.best_tau)) {
            best_err = err;
            best.best_tau = tau;
            best.result = std::move(r);
            first = false;
        }
    }
    return best;
}

} // namespace ampcs

#endif // AMPCS_AMP_HPP
