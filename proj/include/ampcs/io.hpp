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

#ifndef AMPCS_IO_HPP
#define AMPCS_IO_HPP

#include <Eigen/Core>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ampcs/experiments.hpp"
#include "ampcs/model.hpp"
#include "ampcs/sensing.hpp"

namespace ampcs {

/// Decimal with up to 12 significant digits. -inf serializes as the -300
/// dB sentinel so CSV/JSON consumers never see IEEE infinities.
inline std::string format_number(double v) {
    if (std::isinf(v)) v = v < 0 ? kDbFloor : -kDbFloor;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // "\n" line ends on every platform
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace detail

inline constexpr const char* kPhaseCsvHeader =
    "delta,rho_prime,n,m,k,trials,successes,success_rate,mean_nmse_db,status";
inline constexpr const char* kCurveCsvHeader = "delta,rho_prime_critical";
inline constexpr const char* kChannelCsvHeader =
    "preset,n,k,m,algorithm,snr_db,trials,mse_db";

inline void write_phase_csv(const std::string& path,
                            const std::vector<PhaseCellResult>& rows,
                            bool curve_column = false) {
    auto out = detail::open_out(path);
    out << kPhaseCsvHeader;
    if (curve_column) out << ",rho_prime_critical";
    out << "\n";
    for (const auto& r : rows) {
        out << format_number(r.delta) << ',' << format_number(r.rho_prime) << ','
            << r.n << ',' << r.m << ',' << r.k << ',' << r.trials << ','
            << r.successes << ',' << format_number(r.success_rate) << ','
            << format_number(r.mean_nmse_db) << ','
            << (r.skipped ? "skipped" : "ok");
        if (curve_column) {
            // constant at 1 beyond the square-system limit
            const double crit = r.delta >= 1.0 ? 1.0 : dmm_l1_curve(r.delta);
            out << ',' << format_number(crit);
        }
        out << "\n";
    }
}

struct CurveRow {
    double delta = 0.0;
    double rho_prime_critical = 0.0;
    bool valid = true;
};

inline void write_curve_csv(const std::string& path,
                            const std::vector<CurveRow>& rows) {
    auto out = detail::open_out(path);
    out << kCurveCsvHeader << "\n";
    for (const auto& r : rows) {
        out << format_number(r.delta) << ',';
        if (r.valid)
            out << format_number(r.rho_prime_critical);
        else
            out << "nan"; // row-level error marker for out-of-domain deltas
        out << "\n";
    }
}

inline void write_channel_csv(const std::string& path,
                              const std::vector<BenchmarkRow>& rows) {
    auto out = detail::open_out(path);
    out << kChannelCsvHeader << "\n";
    for (const auto& r : rows) {
        out << r.preset << ',' << r.n << ',' << r.k << ',' << r.m << ','
            << algo_name(r.algo) << ',' << format_number(r.snr_db) << ','
            << r.trials << ',' << format_number(r.mse_db) << "\n";
    }
}

/// (index, value) CSV used for signal fixtures and recovered estimates.
inline void write_signal_csv(const std::string& path, const Eigen::VectorXd& v) {
    auto out = detail::open_out(path);
    out << "index,value\n";
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out << i << ',' << format_number(v(i)) << "\n";
}

inline Eigen::VectorXd read_signal_csv(const std::string& path) {
    auto in = detail::open_in(path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("index,value", 0) != 0)
        throw std::runtime_error("signal csv: missing header in " + path);
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = detail::split_csv_line(line);
        if (fields.size() != 2) throw std::runtime_error("signal csv: bad row: " + line);
        const auto index = std::stol(fields[0]);
        if (index != static_cast<long>(values.size()))
            throw std::runtime_error("signal csv: non-contiguous indices");
        values.push_back(std::stod(fields[1]));
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

/// Debug dump of a sensing matrix: one header line carrying the metadata,
/// then m row-major CSV rows of normalized entries. Toeplitz matrices also
/// carry their training sequence so a load reconstructs the fast path.
inline void write_matrix_csv(const std::string& path, const SensingMatrix& A) {
    auto out = detail::open_out(path);
    out << "# ampcs-matrix m=" << A.m << " n=" << A.n << " kind=" << kind_name(A.kind)
        << " seed=" << A.seed << "\n";
    if (A.kind == MatrixKind::toeplitz_bpsk) {
        out << "# symbols";
        for (Eigen::Index i = 0; i < A.symbols.size(); ++i)
            out << (i == 0 ? '=' : ',') << format_number(A.symbols(i));
        out << "\n";
    }
    out.precision(17);
    for (int i = 0; i < A.m; ++i) {
        for (int j = 0; j < A.n; ++j) {
            if (j) out << ',';
            out << A.entries(i, j);
        }
        out << "\n";
    }
}

inline SensingMatrix read_matrix_csv(const std::string& path) {
    auto in = detail::open_in(path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ampcs-matrix ", 0) != 0)
        throw std::runtime_error("matrix csv: missing header in " + path);

    int m = 0, n = 0;
    unsigned long long seed = 0;
    char kind_buf[32] = {0};
    if (std::sscanf(line.c_str(), "# ampcs-matrix m=%d n=%d kind=%31s seed=%llu",
                    &m, &n, kind_buf, &seed) != 4)
        throw std::runtime_error("matrix csv: malformed header: " + line);
    const MatrixKind kind = kind_from_name(kind_buf);

    Eigen::VectorXd symbols;
    if (kind == MatrixKind::toeplitz_bpsk) {
        if (!std::getline(in, line) || line.rfind("# symbols=", 0) != 0)
            throw std::runtime_error("matrix csv: missing symbols line");
        const auto fields = detail::split_csv_line(line.substr(10));
        symbols.resize(static_cast<Eigen::Index>(fields.size()));
        for (std::size_t i = 0; i < fields.size(); ++i)
            symbols(static_cast<Eigen::Index>(i)) = std::stod(fields[i]);
        if (symbols.size() != m + n - 1)
            throw std::runtime_error("matrix csv: wrong symbol count");
        return toeplitz_from_symbols(m, n, std::move(symbols), seed);
    }

    Eigen::MatrixXd entries(m, n);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("matrix csv: truncated file");
        const auto fields = detail::split_csv_line(line);
        if (static_cast<int>(fields.size()) != n)
            throw std::runtime_error("matrix csv: bad row width");
        for (int j = 0; j < n; ++j) entries(i, j) = std::stod(fields[j]);
    }
    SensingMatrix A = sensing_from_dense(std::move(entries), kind, seed);
    return A;
}

} // namespace ampcs

#endif // AMPCS_IO_HPP
