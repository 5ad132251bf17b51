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

#ifndef AMPCS_SENSING_HPP
#define AMPCS_SENSING_HPP

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ampcs/rng.hpp"

namespace ampcs {

enum class MatrixKind { gaussian, toeplitz_bpsk };

inline const char* kind_name(MatrixKind k) {
    return k == MatrixKind::gaussian ? "gaussian" : "toeplitz-bpsk";
}

inline MatrixKind kind_from_name(const std::string& s) {
    if (s == "gaussian") return MatrixKind::gaussian;
    if (s == "toeplitz-bpsk") return MatrixKind::toeplitz_bpsk;
    throw std::invalid_argument("unknown matrix kind: " + s);
}

/// An m x n sensing matrix with unit l2-norm columns.
///
/// `entries` always holds the normalized dense matrix. For the Toeplitz
/// kind, `symbols` keeps the +-1 training sequence of length m+n-1 that
/// generated it (entry (i,j) of the unnormalized matrix is
/// symbols[i - j + n - 1]), plus precomputed padded spectra so that
/// forward/adjoint can run as FFT convolutions on large instances.
/// Instances are immutable after construction and safe to share across
/// threads.
struct SensingMatrix {
    int m = 0;
    int n = 0;
    MatrixKind kind = MatrixKind::gaussian;
    std::uint64_t seed = 0;
    Eigen::MatrixXd entries;
    Eigen::VectorXd column_norms_pre_normalization;

    // Toeplitz fast path (empty for gaussian matrices).
    Eigen::VectorXd symbols;
    Eigen::VectorXcd spectrum_fwd; // FFT of symbols, zero-padded
    Eigen::VectorXcd spectrum_rev; // FFT of reversed symbols, zero-padded
    int fft_size = 0;
};

namespace detail {

inline int next_pow2(int v) {
    int p = 1;
    while (p < v) p <<= 1;
    return p;
}

// Use the FFT path once dense application clearly loses. Dispatch depends
// only on (m, n), so a given matrix always takes the same path.
inline bool use_fft_path(const SensingMatrix& A) {
    return A.kind == MatrixKind::toeplitz_bpsk && A.fft_size > 0 &&
           static_cast<long long>(A.m) * A.n >= 32768;
}

inline Eigen::FFT<double>& tls_fft() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

} // namespace detail

inline void validate_sizes(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("sensing matrix sizes must be >= 1");
}

/// i.i.d. standard normal entries, then every column scaled to unit l2-norm.
/// A zero-norm column (probability zero) is redrawn so the invariant is
/// unconditional. Entries are drawn column by column.
inline SensingMatrix gaussian_matrix(int m, int n, std::uint64_t seed) {
    validate_sizes(m, n);
    SensingMatrix A;
    A.m = m;
    A.n = n;
    A.kind = MatrixKind::gaussian;
    A.seed = seed;
    A.entries.resize(m, n);
    A.column_norms_pre_normalization.resize(n);

    Rng rng(derive_seed(seed, 0x6761757373ULL)); // "gauss"
    for (int j = 0; j < n; ++j) {
        double norm = 0.0;
        do {
            for (int i = 0; i < m; ++i) A.entries(i, j) = rng.normal();
            norm = A.entries.col(j).norm();
        } while (norm == 0.0);
        A.column_norms_pre_normalization(j) = norm;
        A.entries.col(j) /= norm;
    }
    return A;
}

/// Builds the Toeplitz convolution matrix of an explicit +-1 training
/// sequence of length m+n-1 and column-normalizes it. Every column holds m
/// symbols, so all pre-normalization norms equal sqrt(m) exactly.
inline SensingMatrix toeplitz_from_symbols(int m, int n, Eigen::VectorXd symbols,
                                           std::uint64_t seed = 0) {
    validate_sizes(m, n);
    if (symbols.size() != m + n - 1)
        throw std::invalid_argument("toeplitz: need m+n-1 training symbols");
    SensingMatrix A;
    A.m = m;
    A.n = n;
    A.kind = MatrixKind::toeplitz_bpsk;
    A.seed = seed;
    A.symbols = std::move(symbols);

    const double col_norm = std::sqrt(static_cast<double>(m));
    A.column_norms_pre_normalization = Eigen::VectorXd::Constant(n, col_norm);
    A.entries.resize(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            A.entries(i, j) = A.symbols(i - j + n - 1) / col_norm;

    // Pad so that both conv(s, x) and conv(reverse(s), z) fit circularly.
    const int len = m + n - 1;
    A.fft_size = detail::next_pow2(len + std::max(m, n) - 1);
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(A.fft_size);
    padded.head(len) = A.symbols;
    detail::tls_fft().fwd(A.spectrum_fwd, padded);
    padded.setZero();
    padded.head(len) = A.symbols.reverse();
    detail::tls_fft().fwd(A.spectrum_rev, padded);
    return A;
}

/// Toeplitz-BPSK sensing matrix from a uniform i.i.d. +-1 sequence.
inline SensingMatrix toeplitz_bpsk_matrix(int m, int n, std::uint64_t seed) {
    validate_sizes(m, n);
    Rng rng(derive_seed(seed, 0x6270736bULL)); // "bpsk"
    Eigen::VectorXd s(m + n - 1);
    for (int i = 0; i < s.size(); ++i) s(i) = rng.sign();
    return toeplitz_from_symbols(m, n, std::move(s), seed);
}

/// Wraps an explicit dense matrix (test matrices, loaded dumps). Columns are
/// normalized unless they already have unit norm.
inline SensingMatrix sensing_from_dense(Eigen::MatrixXd entries,
                                        MatrixKind kind = MatrixKind::gaussian,
                                        std::uint64_t seed = 0) {
    validate_sizes(static_cast<int>(entries.rows()), static_cast<int>(entries.cols()));
    SensingMatrix A;
    A.m = static_cast<int>(entries.rows());
    A.n = static_cast<int>(entries.cols());
    A.kind = kind;
    A.seed = seed;
    A.column_norms_pre_normalization.resize(A.n);
    for (int j = 0; j < A.n; ++j) {
        const double norm = entries.col(j).norm();
        if (norm == 0.0)
            throw std::invalid_argument("sensing_from_dense: zero-norm column");
        A.column_norms_pre_normalization(j) = norm;
        entries.col(j) /= norm;
    }
    A.entries = std::move(entries);
    return A;
}

inline Eigen::VectorXd forward_dense(const SensingMatrix& A, const Eigen::VectorXd& x) {
    return A.entries * x;
}

inline Eigen::VectorXd adjoint_dense(const SensingMatrix& A, const Eigen::VectorXd& z) {
    return A.entries.transpose() * z;
}

/// (A x)_i = conv(s, x)[i + n - 1] / sqrt(m), evaluated circularly.
inline Eigen::VectorXd forward_fft(const SensingMatrix& A, const Eigen::VectorXd& x) {
    auto& fft = detail::tls_fft();
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(A.fft_size);
    padded.head(A.n) = x;
    Eigen::VectorXcd spec;
    fft.fwd(spec, padded);
    spec.array() *= A.spectrum_fwd.array();
    Eigen::VectorXd conv;
    fft.inv(conv, spec);
    return conv.segment(A.n - 1, A.m) / std::sqrt(static_cast<double>(A.m));
}

/// (A^T z)_j = conv(reverse(s), z)[m - 1 + j] / sqrt(m).
inline Eigen::VectorXd adjoint_fft(const SensingMatrix& A, const Eigen::VectorXd& z) {
    auto& fft = detail::tls_fft();
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(A.fft_size);
    padded.head(A.m) = z;
    Eigen::VectorXcd spec;
    fft.fwd(spec, padded);
    spec.array() *= A.spectrum_rev.array();
    Eigen::VectorXd conv;
    fft.inv(conv, spec);
    return conv.segment(A.m - 1, A.n) / std::sqrt(static_cast<double>(A.m));
}

/// y = A x
inline Eigen::VectorXd forward(const SensingMatrix& A, const Eigen::VectorXd& x) {
    if (x.size() != A.n)
        throw std::invalid_argument("forward: dimension mismatch");
    if (detail::use_fft_path(A)) return forward_fft(A, x);
    return forward_dense(A, x);
}

/// A^T z (real field, so the Hermitian transpose is the transpose)
inline Eigen::VectorXd adjoint(const SensingMatrix& A, const Eigen::VectorXd& z) {
    if (z.size() != A.m)
        throw std::invalid_argument("adjoint: dimension mismatch");
    if (detail::use_fft_path(A)) return adjoint_fft(A, z);
    return adjoint_dense(A, z);
}

} // namespace ampcs

#endif // AMPCS_SENSING_HPP
