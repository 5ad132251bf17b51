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
//
// Command-line front end. Every run is configured by a JSON file plus flag
// overrides (flags win) and writes a manifest next to its result file; a
// manifest is itself a valid config, so any result can be reproduced with
//   ampcs <command> --config result.manifest.json

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ampcs/amp.hpp"
#include "ampcs/baselines.hpp"
#include "ampcs/experiments.hpp"
#include "ampcs/io.hpp"
#include "ampcs/l1_curve.hpp"
#include "ampcs/model.hpp"
#include "ampcs/sensing.hpp"
#include "ampcs/signals.hpp"
#include "ampcs/version.hpp"

namespace {

using json = nlohmann::ordered_json;

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json cfg = json::parse(in); // throws on malformed input
    if (!cfg.is_object()) throw std::runtime_error("config must be a JSON object");
    return cfg;
}

void check_command(const json& cfg, const std::string& command) {
    if (cfg.contains("command") && cfg.at("command").get<std::string>() != command)
        throw std::runtime_error("config is for command '" +
                                 cfg.at("command").get<std::string>() +
                                 "', invoked as '" + command + "'");
}

template <typename T>
T get_or(const json& cfg, const std::string& key, T fallback) {
    if (!cfg.contains(key) || cfg.at(key).is_null()) return fallback;
    return cfg.at(key).get<T>();
}

// "0.1,0.2,0.3" or "start:stop:step"
std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
            step <= 0)
            throw std::runtime_error("bad range spec (want start:stop:step): " + text);
        for (double v = start; v <= stop + 0.5 * step; v += step)
            values.push_back(v);
        return values;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stod(tok));
    return values;
}

std::vector<int> to_int_list(const std::vector<double>& v) {
    std::vector<int> out;
    for (double x : v) out.push_back(static_cast<int>(std::llround(x)));
    return out;
}

ampcs::TauGrid tau_grid_from(const json& cfg) {
    ampcs::TauGrid grid;
    if (cfg.contains("tau_grid")) {
        const auto& g = cfg.at("tau_grid");
        grid.min = get_or(g, "min", grid.min);
        grid.max = get_or(g, "max", grid.max);
        grid.step = get_or(g, "step", grid.step);
    }
    return grid;
}

json tau_grid_json(const ampcs::TauGrid& g) {
    return json{{"min", g.min}, {"max", g.max}, {"step", g.step}};
}

ampcs::AmpConfig amp_config_from(const json& cfg) {
    ampcs::AmpConfig c;
    c.max_iters = get_or(cfg, "max_iters", c.max_iters);
    c.stop_tol = get_or(cfg, "stop_tol", c.stop_tol);
    c.divergence_factor = get_or(cfg, "divergence_factor", c.divergence_factor);
    c.onsager_enabled = get_or(cfg, "onsager", true);
    return c;
}

void amp_config_to(json& j, const ampcs::AmpConfig& c) {
    j["max_iters"] = c.max_iters;
    j["stop_tol"] = c.stop_tol;
    j["divergence_factor"] = c.divergence_factor;
    j["onsager"] = c.onsager_enabled;
}

void write_manifest(const std::string& out_path, json resolved) {
    json manifest;
    manifest["tool"] = "ampcs";
    manifest["version"] = ampcs::kVersion;
    for (auto& [key, value] : resolved.items()) manifest[key] = std::move(value);
    std::ofstream out(out_path + ".manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest for " + out_path);
    out << manifest.dump(2) << "\n";
}

// dB serialization shares the CSV sentinel: -inf becomes -300.
double sentinel_db(double v) {
    return std::isinf(v) ? (v < 0 ? ampcs::kDbFloor : -ampcs::kDbFloor) : v;
}

// ---------------------------------------------------------------------------
// recover

struct RecoverFlags {
    std::string config_path, out_path, algo, matrix_kind, y_csv, matrix_csv, truth_csv;
    std::uint64_t seed = 0;
    int n = 0, m = 0, k = -1, max_iters = 0;
    double snr_db = 0;
    bool noiseless = false;
};

int run_recover(const RecoverFlags& f, const CLI::App& cmd) {
    json cfg = f.config_path.empty() ? json::object() : load_config(f.config_path);
    check_command(cfg, "recover");
    auto set_if = [&](const char* flag, const char* key, auto value) {
        if (cmd.count(flag) > 0) cfg[key] = value;
    };
    set_if("--seed", "seed", f.seed);
    set_if("--out", "out", f.out_path);
    set_if("--algo", "algo", f.algo);
    set_if("--matrix", "matrix", f.matrix_kind);
    set_if("--n", "n", f.n);
    set_if("--m", "m", f.m);
    set_if("--k", "k", f.k);
    set_if("--snr-db", "snr_db", f.snr_db);
    set_if("--max-iters", "max_iters", f.max_iters);
    set_if("--y-csv", "y_csv", f.y_csv);
    set_if("--matrix-csv", "matrix_csv", f.matrix_csv);
    set_if("--truth-csv", "truth_csv", f.truth_csv);
    if (cmd.count("--noiseless") > 0) cfg["snr_db"] = nullptr;

    const std::string out = get_or<std::string>(cfg, "out", "recover.csv");
    const std::string algo_str = get_or<std::string>(cfg, "algo", "s-amp");
    const ampcs::Algo algo = ampcs::algo_from_name(algo_str);
    const std::uint64_t seed = get_or<std::uint64_t>(cfg, "seed", 0);
    const ampcs::AmpConfig amp_cfg = amp_config_from(cfg);
    const ampcs::TauGrid grid = tau_grid_from(cfg);

    ampcs::SensingMatrix A;
    Eigen::VectorXd y;
    std::optional<Eigen::VectorXd> truth;
    std::vector<int> truth_support;
    json instance;

    const bool external = cfg.contains("y_csv") && cfg.contains("matrix_csv");
    if (external) {
        A = ampcs::read_matrix_csv(cfg.at("matrix_csv").get<std::string>());
        y = ampcs::read_signal_csv(cfg.at("y_csv").get<std::string>());
        if (y.size() != A.m) throw std::runtime_error("recover: y length does not match matrix rows");
        if (cfg.contains("truth_csv")) {
            truth = ampcs::read_signal_csv(cfg.at("truth_csv").get<std::string>());
            for (Eigen::Index i = 0; i < truth->size(); ++i)
                if ((*truth)(i) != 0.0) truth_support.push_back(static_cast<int>(i));
        }
        instance["y_csv"] = cfg.at("y_csv");
        instance["matrix_csv"] = cfg.at("matrix_csv");
        if (cfg.contains("truth_csv")) instance["truth_csv"] = cfg.at("truth_csv");
    } else {
        if (!cfg.contains("n") || !cfg.contains("m") || !cfg.contains("k"))
            throw std::runtime_error(
                "recover: need n, m, k (generator mode) or y_csv + matrix_csv");
        const int n = cfg.at("n").get<int>();
        const int m = cfg.at("m").get<int>();
        const int k = cfg.at("k").get<int>();
        const std::string kind_str = get_or<std::string>(cfg, "matrix", "gaussian");
        const ampcs::MatrixKind kind = ampcs::kind_from_name(kind_str);
        A = kind == ampcs::MatrixKind::gaussian
                ? ampcs::gaussian_matrix(m, n, ampcs::derive_seed(seed, 1))
                : ampcs::toeplitz_bpsk_matrix(m, n, ampcs::derive_seed(seed, 1));
        const ampcs::SparseSignal h =
            ampcs::strictly_sparse(n, k, ampcs::derive_seed(seed, 2));
        truth = h.values;
        truth_support = h.support;
        const Eigen::VectorXd y_clean = ampcs::forward(A, h.values);
        const bool noiseless = !cfg.contains("snr_db") || cfg.at("snr_db").is_null();
        if (noiseless) {
            y = y_clean;
        } else {
            y = ampcs::add_noise(y_clean, cfg.at("snr_db").get<double>(),
                                 ampcs::derive_seed(seed, 3))
                    .y;
        }
        instance["n"] = n;
        instance["m"] = m;
        instance["k"] = k;
        instance["matrix"] = kind_str;
        instance["snr_db"] = noiseless ? json(nullptr) : cfg.at("snr_db");
    }

    json summary;
    summary["algorithm"] = algo_str;
    summary["n"] = A.n;
    summary["m"] = A.m;
    Eigen::VectorXd estimate;
    switch (algo) {
        case ampcs::Algo::s_amp:
        case ampcs::Algo::h_amp: {
            ampcs::AmpConfig c = amp_cfg;
            c.thresholder.kind = algo == ampcs::Algo::h_amp
                                     ? ampcs::ThresholdKind::hard
                                     : ampcs::ThresholdKind::soft;
            if (truth) {
                const auto tuned =
                    ampcs::tune_tau_oracle(A, y, *truth, grid.values(), c);
                estimate = tuned.result.estimate;
                summary["best_tau"] = tuned.best_tau;
                summary["iterations"] = tuned.result.iterations_run;
                summary["status"] = ampcs::status_name(tuned.result.status);
            } else {
                c.thresholder.tau = get_or(cfg, "tau", 1.0);
                const auto r = ampcs::amp_run(A, y, c);
                estimate = r.estimate;
                summary["tau"] = c.thresholder.tau;
                summary["iterations"] = r.iterations_run;
                summary["status"] = ampcs::status_name(r.status);
            }
            break;
        }
        case ampcs::Algo::cosamp: {
            const int k = get_or(cfg, "k", static_cast<int>(truth_support.size()));
            const auto r = ampcs::cosamp(A, y, k);
            estimate = r.estimate;
            summary["iterations"] = r.iterations_run;
            summary["status"] = ampcs::status_name(r.status);
            break;
        }
        case ampcs::Algo::ls:
            estimate = ampcs::least_squares(A, y);
            summary["status"] = "converged";
            break;
        case ampcs::Algo::opt_ls:
            if (truth_support.empty())
                throw std::runtime_error("recover: opt-ls needs a known support (truth)");
            estimate = ampcs::oracle_ls(A, y, truth_support);
            summary["status"] = "converged";
            break;
    }
    if (truth) {
        summary["nmse"] = ampcs::nmse(estimate, *truth);
        summary["nmse_db"] = sentinel_db(ampcs::nmse_db(estimate, *truth));
    }

    ampcs::write_signal_csv(out, estimate);
    {
        std::ofstream sout(out + ".summary.json", std::ios::binary);
        if (!sout) throw std::runtime_error("cannot write summary for " + out);
        sout << summary.dump(2) << "\n";
    }

    json resolved;
    resolved["command"] = "recover";
    resolved["seed"] = seed;
    resolved["out"] = out;
    resolved["algo"] = algo_str;
    for (auto& [key, value] : instance.items()) resolved[key] = std::move(value);
    amp_config_to(resolved, amp_cfg);
    resolved["tau_grid"] = tau_grid_json(grid);
    write_manifest(out, std::move(resolved));
    return 0;
}

// ---------------------------------------------------------------------------
// phase

struct PhaseFlags {
    std::string config_path, out_path, algo, deltas, rhos, axis;
    std::uint64_t seed = 0;
    int workers = 0, trials = 0, n = 0, max_iters = 0;
    bool curve = false;
};

int run_phase(const PhaseFlags& f, const CLI::App& cmd) {
    json cfg = f.config_path.empty() ? json::object() : load_config(f.config_path);
    check_command(cfg, "phase");
    auto set_if = [&](const char* flag, const char* key, auto value) {
        if (cmd.count(flag) > 0) cfg[key] = value;
    };
    set_if("--seed", "seed", f.seed);
    set_if("--workers", "workers", f.workers);
    set_if("--out", "out", f.out_path);
    set_if("--algo", "algo", f.algo);
    set_if("--trials", "trials", f.trials);
    set_if("--n", "n", f.n);
    set_if("--max-iters", "max_iters", f.max_iters);
    set_if("--axis", "sparsity_axis", f.axis);
    if (cmd.count("--deltas") > 0) cfg["delta_values"] = parse_value_list(f.deltas);
    if (cmd.count("--rhos") > 0) cfg["sparsity_values"] = parse_value_list(f.rhos);
    if (cmd.count("--curve") > 0) cfg["curve"] = f.curve;

    ampcs::PhaseGridSpec spec;
    spec.delta_values =
        get_or(cfg, "delta_values", parse_value_list("0.05:0.95:0.05"));
    spec.sparsity_values =
        get_or(cfg, "sparsity_values", parse_value_list("0.05:0.95:0.05"));
    spec.axis = ampcs::axis_from_name(
        get_or<std::string>(cfg, "sparsity_axis", "rho_prime"));
    spec.trials = get_or(cfg, "trials", 10);
    spec.algo = ampcs::algo_from_name(get_or<std::string>(cfg, "algo", "s-amp"));
    spec.config = amp_config_from(cfg);
    spec.tau_grid = tau_grid_from(cfg);
    spec.success_threshold_db = get_or(cfg, "success_threshold_db", -20.0);
    spec.master_seed = get_or<std::uint64_t>(cfg, "seed", 0);
    if (cfg.contains("dynamic_n") && !cfg.at("dynamic_n").is_null()) {
        std::vector<std::pair<double, int>> table;
        for (const auto& row : cfg.at("dynamic_n"))
            table.emplace_back(row.at(0).get<double>(), row.at(1).get<int>());
        spec.n_policy = ampcs::NPolicy::dynamic_table(std::move(table));
    } else {
        spec.n_policy = ampcs::NPolicy::fixed(get_or(cfg, "n", 500));
    }
    const int workers = std::max(1, get_or(cfg, "workers", 1));
    const bool curve_column = get_or(cfg, "curve", false);
    const std::string out = get_or<std::string>(cfg, "out", "phase.csv");

    const auto rows = ampcs::phase_transition(spec, workers);
    ampcs::write_phase_csv(out, rows, curve_column);

    json resolved;
    resolved["command"] = "phase";
    resolved["seed"] = spec.master_seed;
    resolved["workers"] = workers;
    resolved["out"] = out;
    resolved["algo"] = ampcs::algo_name(spec.algo);
    resolved["delta_values"] = spec.delta_values;
    resolved["sparsity_axis"] = ampcs::axis_name(spec.axis);
    resolved["sparsity_values"] = spec.sparsity_values;
    if (spec.n_policy.dynamic) {
        json table = json::array();
        for (const auto& [d, n] : spec.n_policy.table)
            table.push_back(json::array({d, n}));
        resolved["dynamic_n"] = std::move(table);
    } else {
        resolved["n"] = spec.n_policy.fixed_n;
    }
    resolved["trials"] = spec.trials;
    amp_config_to(resolved, spec.config);
    resolved["tau_grid"] = tau_grid_json(spec.tau_grid);
    resolved["success_threshold_db"] = spec.success_threshold_db;
    resolved["curve"] = curve_column;
    write_manifest(out, std::move(resolved));
    return 0;
}

// ---------------------------------------------------------------------------
// curve

struct CurveFlags {
    std::string config_path, out_path, deltas;
};

int run_curve(const CurveFlags& f, const CLI::App& cmd) {
    json cfg = f.config_path.empty() ? json::object() : load_config(f.config_path);
    check_command(cfg, "curve");
    if (cmd.count("--out") > 0) cfg["out"] = f.out_path;
    if (cmd.count("--deltas") > 0) cfg["delta_values"] = parse_value_list(f.deltas);

    const std::vector<double> deltas =
        get_or(cfg, "delta_values", parse_value_list("0.02:1.0:0.02"));
    const std::string out = get_or<std::string>(cfg, "out", "curve.csv");

    std::vector<ampcs::CurveRow> rows;
    for (double d : deltas) {
        ampcs::CurveRow row;
        row.delta = d;
        if (d > 0.0 && d <= 1.0) {
            row.rho_prime_critical = ampcs::dmm_l1_curve(d);
        } else {
            row.valid = false;
            std::cerr << "curve: delta " << d << " outside (0, 1], row marked nan\n";
        }
        rows.push_back(row);
    }
    ampcs::write_curve_csv(out, rows);

    json resolved;
    resolved["command"] = "curve";
    resolved["out"] = out;
    resolved["delta_values"] = deltas;
    write_manifest(out, std::move(resolved));
    return 0;
}

// ---------------------------------------------------------------------------
// channel

struct ChannelFlags {
    std::string config_path, out_path, preset, m_values, algos;
    std::uint64_t seed = 0;
    int workers = 0, realizations = 0, max_iters = 0;
    double snr_db = 0;
};

int run_channel(const ChannelFlags& f, const CLI::App& cmd) {
    json cfg = f.config_path.empty() ? json::object() : load_config(f.config_path);
    check_command(cfg, "channel");
    auto set_if = [&](const char* flag, const char* key, auto value) {
        if (cmd.count(flag) > 0) cfg[key] = value;
    };
    set_if("--seed", "seed", f.seed);
    set_if("--workers", "workers", f.workers);
    set_if("--out", "out", f.out_path);
    set_if("--preset", "preset", f.preset);
    set_if("--realizations", "realizations", f.realizations);
    set_if("--snr-db", "snr_db", f.snr_db);
    set_if("--max-iters", "max_iters", f.max_iters);
    if (cmd.count("--m-values") > 0)
        cfg["m_values"] = to_int_list(parse_value_list(f.m_values));
    if (cmd.count("--algos") > 0) {
        std::vector<std::string> names;
        std::stringstream ss(f.algos);
        std::string tok;
        while (std::getline(ss, tok, ',')) names.push_back(tok);
        cfg["algorithms"] = names;
    }

    ampcs::BenchmarkSpec spec;
    if (cfg.contains("preset") && cfg.at("preset").is_object()) {
        const auto& p = cfg.at("preset");
        spec.preset = ampcs::custom_preset(
            p.at("n").get<int>(), p.at("k").get<int>(), p.at("m_min").get<int>(),
            p.at("m_max").get<int>(), get_or(p, "snr_db", 20.0));
    } else {
        spec.preset = ampcs::preset_by_name(
            get_or<std::string>(cfg, "preset", "32-band-first"));
    }
    spec.m_values = get_or(cfg, "m_values", std::vector<int>{200, 400, 800});
    if (cfg.contains("algorithms")) {
        spec.algorithms.clear();
        for (const auto& name : cfg.at("algorithms"))
            spec.algorithms.push_back(ampcs::algo_from_name(name.get<std::string>()));
    }
    spec.realizations = get_or(cfg, "realizations", 20);
    spec.snr_db = get_or(cfg, "snr_db", spec.preset.snr_db);
    spec.config = amp_config_from(cfg);
    spec.tau_grid = tau_grid_from(cfg);
    spec.decay_rate = get_or(cfg, "decay_rate", 0.7);
    spec.tail_fraction = get_or(cfg, "tail_fraction", 0.01);
    spec.master_seed = get_or<std::uint64_t>(cfg, "seed", 0);
    const int workers = std::max(1, get_or(cfg, "workers", 1));
    const std::string out = get_or<std::string>(cfg, "out", "channel.csv");

    std::vector<int> skipped;
    const auto rows = ampcs::channel_benchmark(spec, workers, &skipped);
    for (int m : skipped)
        std::cerr << "channel: m=" << m << " outside preset range ["
                  << spec.preset.m_min << ", " << spec.preset.m_max
                  << "], skipped\n";
    ampcs::write_channel_csv(out, rows);

    json resolved;
    resolved["command"] = "channel";
    resolved["seed"] = spec.master_seed;
    resolved["workers"] = workers;
    resolved["out"] = out;
    if (spec.preset.name == "custom") {
        resolved["preset"] = json{{"n", spec.preset.n},
                                  {"k", spec.preset.k},
                                  {"m_min", spec.preset.m_min},
                                  {"m_max", spec.preset.m_max},
                                  {"snr_db", spec.preset.snr_db}};
    } else {
        resolved["preset"] = spec.preset.name;
    }
    resolved["m_values"] = spec.m_values;
    {
        std::vector<std::string> names;
        for (auto a : spec.algorithms) names.emplace_back(ampcs::algo_name(a));
        resolved["algorithms"] = names;
    }
    resolved["realizations"] = spec.realizations;
    resolved["snr_db"] = spec.snr_db;
    amp_config_to(resolved, spec.config);
    resolved["tau_grid"] = tau_grid_json(spec.tau_grid);
    resolved["decay_rate"] = spec.decay_rate;
    resolved["tail_fraction"] = spec.tail_fraction;
    write_manifest(out, std::move(resolved));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ampcs: AMP sparse recovery and channel-estimation experiments"};
    app.require_subcommand(1);

    RecoverFlags rf;
    auto* rec = app.add_subcommand("recover", "run a single recovery");
    rec->add_option("--config", rf.config_path, "JSON config file");
    rec->add_option("--seed", rf.seed, "master seed");
    rec->add_option("--out", rf.out_path, "estimate CSV path");
    rec->add_option("--algo", rf.algo, "s-amp | h-amp | cosamp | ls | opt-ls");
    rec->add_option("--matrix", rf.matrix_kind, "gaussian | toeplitz-bpsk");
    rec->add_option("--n", rf.n, "signal length");
    rec->add_option("--m", rf.m, "measurement count");
    rec->add_option("--k", rf.k, "sparsity");
    rec->add_option("--snr-db", rf.snr_db, "measurement SNR in dB");
    rec->add_flag("--noiseless", rf.noiseless, "disable measurement noise");
    rec->add_option("--max-iters", rf.max_iters, "iteration cap");
    rec->add_option("--y-csv", rf.y_csv, "measurement vector CSV (index,value)");
    rec->add_option("--matrix-csv", rf.matrix_csv, "sensing matrix dump");
    rec->add_option("--truth-csv", rf.truth_csv, "true signal CSV (index,value)");

    PhaseFlags pf;
    auto* pha = app.add_subcommand("phase", "empirical phase-transition grid");
    pha->add_option("--config", pf.config_path, "JSON config file");
    pha->add_option("--seed", pf.seed, "master seed");
    pha->add_option("--workers", pf.workers, "worker threads");
    pha->add_option("--out", pf.out_path, "result CSV path");
    pha->add_option("--algo", pf.algo, "s-amp | h-amp | cosamp");
    pha->add_option("--trials", pf.trials, "trials per cell");
    pha->add_option("--n", pf.n, "fixed signal length");
    pha->add_option("--max-iters", pf.max_iters, "iteration cap");
    pha->add_option("--deltas", pf.deltas, "list a,b,c or range start:stop:step");
    pha->add_option("--rhos", pf.rhos, "sparsity values, same syntax");
    pha->add_option("--axis", pf.axis, "rho | rho_prime");
    pha->add_flag("--curve", pf.curve, "append analytical-curve column");

    CurveFlags cf;
    auto* cur = app.add_subcommand("curve", "analytical l1 transition curve");
    cur->add_option("--config", cf.config_path, "JSON config file");
    cur->add_option("--out", cf.out_path, "result CSV path");
    cur->add_option("--deltas", cf.deltas, "list a,b,c or range start:stop:step");

    ChannelFlags chf;
    auto* cha = app.add_subcommand("channel", "channel-estimation benchmark");
    cha->add_option("--config", chf.config_path, "JSON config file");
    cha->add_option("--seed", chf.seed, "master seed");
    cha->add_option("--workers", chf.workers, "worker threads");
    cha->add_option("--out", chf.out_path, "result CSV path");
    cha->add_option("--preset", chf.preset, "channel preset name");
    cha->add_option("--m-values", chf.m_values, "training lengths, list or range");
    cha->add_option("--algos", chf.algos, "comma-separated algorithm list");
    cha->add_option("--realizations", chf.realizations, "realizations per point");
    cha->add_option("--snr-db", chf.snr_db, "measurement SNR in dB");
    cha->add_option("--max-iters", chf.max_iters, "iteration cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return run_recover(rf, *rec);
        if (pha->parsed()) return run_phase(pf, *pha);
        if (cur->parsed()) return run_curve(cf, *cur);
        if (cha->parsed()) return run_channel(chf, *cha);
    } catch (const std::exception& e) {
        std::cerr << "ampcs: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
