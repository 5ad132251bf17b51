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

#ifndef AMPCS_BASELINES_HPP
#define AMPCS_BASELINES_HPP

#include <Eigen/Core>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ampcs/model.hpp"
#include "ampcs/sensing.hpp"

namespace ampcs {

/// Ridge added to the normal equations of the CoSaMP inner solve when the
/// merged-support submatrix is (near) rank deficient.
inline constexpr double kCosampRidge = 1e-12;

/// Least squares estimate. Overdetermined systems get the ordinary LS
/// minimizer; underdetermined ones the minimum-l2-norm solution. Rank
/// deficiency is absorbed by the pseudo-inverse semantics of the complete
/// orthogonal decomposition.
inline Eigen::VectorXd least_squares(const SensingMatrix& A,
                                     const Eigen::VectorXd& y) {
    if (y.size() != A.m) throw std::invalid_argument("least_squares: dimension mismatch");
    return A.entries.completeOrthogonalDecomposition().solve(y);
}

/// Least squares restricted to the given support columns, zero elsewhere.
inline Eigen::VectorXd oracle_ls(const SensingMatrix& A, const Eigen::VectorXd& y,
                                 const std::vector<int>& support) {
    if (y.size() != A.m) throw std::invalid_argument("oracle_ls: dimension mismatch");
    if (static_cast<int>(support.size()) > A.m)
        throw std::invalid_argument("oracle_ls: support larger than measurement count");
    for (int idx : support)
        if (idx < 0 || idx >= A.n)
            throw std::invalid_argument("oracle_ls: support index out of range");

    Eigen::VectorXd h = Eigen::VectorXd::Zero(A.n);
    if (support.empty()) return h;

    Eigen::MatrixXd sub(A.m, static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j)
        sub.col(static_cast<Eigen::Index>(j)) = A.entries.col(support[j]);
    const Eigen::VectorXd coef = sub.completeOrthogonalDecomposition().solve(y);
    for (std::size_t j = 0; j < support.size(); ++j)
        h(support[j]) = coef(static_cast<Eigen::Index>(j));
    return h;
}

namespace detail {

inline std::vector<int> top_indices_by_magnitude(const Eigen::VectorXd& v, int count) {
    std::vector<int> idx(static_cast<std::size_t>(v.size()));
    std::iota(idx.begin(), idx.end(), 0);
    const auto cmp = [&v](int a, int b) {
        const double ma = std::abs(v(a));
        const double mb = std::abs(v(b));
        if (ma != mb) return ma > mb;
        return a < b; // deterministic tie-break
    };
    const auto nth = idx.begin() + std::min<std::ptrdiff_t>(count, static_cast<std::ptrdiff_t>(idx.size()));
    std::partial_sort(idx.begin(), nth, idx.end(), cmp);
    idx.resize(static_cast<std::size_t>(std::min<std::ptrdiff_t>(count, static_cast<std::ptrdiff_t>(idx.size()))));
    return idx;
}

// Restricted LS via ridge-stabilized normal equations.
inline Eigen::VectorXd solve_on_support(const SensingMatrix& A,
                                        const Eigen::VectorXd& y,
                                        const std::vector<int>& support) {
    const auto s = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd sub(A.m, s);
    for (Eigen::Index j = 0; j < s; ++j)
        sub.col(j) = A.entries.col(support[static_cast<std::size_t>(j)]);
    Eigen::MatrixXd gram = sub.transpose() * sub;
    gram.diagonal().array() += kCosampRidge;
    return gram.ldlt().solve(sub.transpose() * y);
}

} // namespace detail

/// Compressive sampling matching pursuit (Needell-Tropp loop): proxy from
/// the adjoint residual, merge top-2k proxy indices with the current
/// support, least squares on the merged support, prune to the k largest,
/// update the residual. Halts on residual stagnation (relative change below
/// stop_tol), an exact fit, or max_iters.
inline RecoveryResult cosamp(const SensingMatrix& A, const Eigen::VectorXd& y,
                             int k, int max_iters = 100, double stop_tol = 1e-7) {
    if (y.size() != A.m) throw std::invalid_argument("cosamp: dimension mismatch");
    if (k < 0 || k > A.n) throw std::invalid_argument("cosamp: need 0 <= k <= n");

    const double sqrt_m = std::sqrt(static_cast<double>(A.m));
    RecoveryResult result;
    result.estimate = Eigen::VectorXd::Zero(A.n);
    if (k == 0) {
        result.status = RecoveryStatus::converged;
        result.iterations_run = 0;
        return result;
    }

    Eigen::VectorXd residual = y;
    std::vector<int> support;
    double prev_norm = residual.norm();
    const double y_norm = prev_norm;

    for (int iter = 0; iter < max_iters; ++iter) {
        const Eigen::VectorXd proxy = adjoint(A, residual);
        std::vector<int> merged = detail::top_indices_by_magnitude(proxy, 2 * k);
        merged.insert(merged.end(), support.begin(), support.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        const Eigen::VectorXd coef = detail::solve_on_support(A, y, merged);
        Eigen::VectorXd dense = Eigen::VectorXd::Zero(A.n);
        for (std::size_t j = 0; j < merged.size(); ++j)
            dense(merged[j]) = coef(static_cast<Eigen::Index>(j));

        support = detail::top_indices_by_magnitude(dense, k);
        std::sort(support.begin(), support.end());
        Eigen::VectorXd estimate = Eigen::VectorXd::Zero(A.n);
        for (int idx : support) estimate(idx) = dense(idx);

        residual = y - forward(A, estimate);
        const double norm = residual.norm();
        result.estimate = std::move(estimate);
        result.iterations_run = iter + 1;
        result.sigma_history.push_back(norm / sqrt_m);

        if (norm <= 1e-12 * y_norm ||
            std::abs(prev_norm - norm) <= stop_tol * std::max(prev_norm, 1e-12)) {
            result.status = RecoveryStatus::converged;
            return result;
        }
        prev_norm = norm;
    }
    result.status = RecoveryStatus::max_iters;
    return result;
}

} // namespace ampcs

#endif // AMPCS_BASELINES_HPP
