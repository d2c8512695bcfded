// mcauth - CIR-based physical layer authentication for diffusive molecular links
// Copyright (C) 2026 the mcauth authors
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
// ------------------------------------------------------------------------
//
// Subcommands: gen-cir, estimate, threshold, roc. Exit codes: 0 success,
// 2 validation/domain error, 3 I/O error.

#include "mcauth/config.hpp"
#include "mcauth/estimation.hpp"
#include "mcauth/io.hpp"

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    bool plot_script = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config file (INI sections)");
    cmd->add_option("--seed", args.seed, "override the config's [run] seed");
    cmd->add_option("--out", args.out_path, "output file (or directory for roc)");
    cmd->add_flag("--plot-script", args.plot_script, "also emit a gnuplot script");
}

void emit(const CommonArgs& args, const std::string& payload) {
    if (args.out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
    } else {
        mcauth::write_text_file(args.out_path, payload);
    }
}

std::string sibling_path(const std::string& base, const std::string& name) {
    const std::filesystem::path p(base);
    return (p.has_parent_path() ? p.parent_path() / name : std::filesystem::path(name)).string();
}

mcauth::ExperimentConfig load_config(const CommonArgs& args) {
    if (args.config_path.empty())
        throw std::invalid_argument("missing --config (this subcommand needs one)");
    mcauth::ExperimentConfig cfg = mcauth::ExperimentConfig::load(args.config_path);
    if (args.seed) cfg.run.seed = *args.seed;
    return cfg;
}

int cmd_gen_cir(const CommonArgs& args) {
    const mcauth::ExperimentConfig cfg = load_config(args);
    emit(args, mcauth::gen_cir_csv(cfg.scenario().alice_channel));
    if (args.plot_script) {
        if (args.out_path.empty())
            throw std::invalid_argument("--plot-script needs --out so the script can reference the CSV");
        const std::string script = sibling_path(args.out_path, "plot_cir.gnuplot");
        mcauth::write_text_file(script,
                                mcauth::cir_plot_script(std::filesystem::path(args.out_path).filename().string()));
        std::cerr << "wrote " << script << "\n";
    }
    return 0;
}

int cmd_estimate(const CommonArgs& args, int frame_length) {
    // the estimation path permits sigma2 = 0, so no MeasurementModel is built
    const mcauth::ExperimentConfig cfg = load_config(args);
    const int tap_count = cfg.alice.tap_count;
    if (frame_length <= 0) frame_length = 4 * tap_count + 1;
    // frame indices k_1 = 0 .. k_m = frame_length - 1
    if (frame_length - 1 < 2 * tap_count) {
        throw std::invalid_argument(
            "estimate: training frame too short: identifiability needs k_m-k_1 >= 2L, i.e. "
            "--frame-length >= " +
            std::to_string(2 * tap_count + 1) + " for L = " + std::to_string(tap_count) +
            " (got " + std::to_string(frame_length) + ")");
    }
    const mcauth::Cir h_true = mcauth::sample_cir(cfg.alice);
    mcauth::SplitMix64 frame_rng(mcauth::derive_seed(cfg.run.seed, 0));
    mcauth::SplitMix64 noise_rng(mcauth::derive_seed(cfg.run.seed, 1));
    const mcauth::TrainingFrame frame = mcauth::random_training_frame(frame_length, 0, frame_rng);
    const mcauth::Matrix b = mcauth::build_training_matrix(frame, tap_count);
    const mcauth::ReceivedFrame r = mcauth::synthesize_received(h_true, frame, cfg.sigma2, noise_rng);
    const mcauth::LsEstimate est = mcauth::ls_estimate(b, r, cfg.sigma2);
    std::vector<double> sigma_diag(est.covariance.rows());
    for (std::size_t i = 0; i < sigma_diag.size(); ++i) sigma_diag[i] = est.covariance(i, i);
    emit(args, mcauth::estimate_json(h_true.taps, est.h_hat, sigma_diag));
    return 0;
}

int cmd_threshold(const CommonArgs& args, std::optional<double> alpha, std::optional<int> df,
                  bool paper_df) {
    if (!args.config_path.empty()) {
        const mcauth::ExperimentConfig cfg = mcauth::ExperimentConfig::load(args.config_path);
        if (!alpha) alpha = cfg.alpha;
        const bool two_l = paper_df || cfg.df_mode == mcauth::DfMode::Paper2L;
        if (!df) df = two_l ? 2 * cfg.alice.tap_count : cfg.alice.tap_count;
    }
    if (!alpha || !df)
        throw std::invalid_argument("threshold: need --alpha and --df (or a --config providing them)");
    emit(args, mcauth::format_double_12(mcauth::compute_threshold(*alpha, *df)) + "\n");
    return 0;
}

int cmd_roc(const CommonArgs& args, int threads, bool paper_df) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    mcauth::ExperimentConfig cfg = load_config(args);
    if (paper_df) cfg.df_mode = mcauth::DfMode::Paper2L;
    const std::filesystem::path out_dir = args.out_path.empty() ? "." : args.out_path;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw mcauth::io_error("cannot create output directory: " + out_dir.string());

    std::vector<std::string> csv_names;
    std::vector<std::string> labels;
    std::uint64_t combo = 0;
    for (int tap_count : cfg.run.tap_counts) {
        for (double sigma2_value : cfg.run.sigma2_values) {
            const mcauth::Scenario scenario = cfg.scenario_for(tap_count, sigma2_value);
            const std::uint64_t curve_seed = mcauth::derive_seed(cfg.run.seed, combo++);
            const mcauth::RocCurve curve =
                mcauth::run_roc(scenario, cfg.run.alphas, cfg.run.trials, curve_seed);
            char name[64];
            std::snprintf(name, sizeof(name), "roc_L%d_sigma2_%g.csv", tap_count, sigma2_value);
            const std::filesystem::path file = out_dir / name;
            mcauth::write_text_file(file.string(), mcauth::roc_csv(curve));
            std::cerr << "wrote " << file.string() << " (scenario " << curve.scenario_digest
                      << ")\n";
            csv_names.emplace_back(name);
            char label[64];
            std::snprintf(label, sizeof(label), "L=%d sigma2=%g", tap_count, sigma2_value);
            labels.emplace_back(label);
        }
    }
    if (args.plot_script) {
        const std::filesystem::path script = out_dir / "plot_roc.gnuplot";
        mcauth::write_text_file(script.string(), mcauth::roc_plot_script(csv_names, labels));
        std::cerr << "wrote " << script.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Channel-impulse-response authentication simulator for diffusive molecular links"};
    app.require_subcommand(1);

    CommonArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen-cir", "emit the sampled pulse and taps as CSV");
    add_common(gen, gen_args);

    CommonArgs est_args;
    int frame_length = 0;
    CLI::App* est = app.add_subcommand("estimate", "one end-to-end least-squares CIR estimation");
    add_common(est, est_args);
    est->add_option("--frame-length", frame_length,
                    "training symbols in the frame (default 4L+1)");

    CommonArgs thr_args;
    std::optional<double> alpha;
    std::optional<int> df;
    bool thr_paper_df = false;
    CLI::App* thr = app.add_subcommand("threshold", "print the decision threshold for (alpha, df)");
    add_common(thr, thr_args);
    thr->add_option("--alpha", alpha, "prescribed false-alarm probability in (0,1)");
    thr->add_option("--df", df, "chi-squared degrees of freedom");
    thr->add_flag("--paper-df", thr_paper_df, "use df = 2L from a --config instead of df = L");

    CommonArgs roc_args;
    int threads = 0;
    bool roc_paper_df = false;
    CLI::App* roc = app.add_subcommand("roc", "Monte Carlo ROC curves, one CSV per (L, sigma2)");
    add_common(roc, roc_args);
    roc->add_option("--threads", threads, "worker threads (0 = library default)");
    roc->add_flag("--paper-df", roc_paper_df, "threshold with df = 2L (conservative replication mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (gen->parsed()) return cmd_gen_cir(gen_args);
        if (est->parsed()) return cmd_estimate(est_args, frame_length);
        if (thr->parsed()) return cmd_threshold(thr_args, alpha, df, thr_paper_df);
        if (roc->parsed()) return cmd_roc(roc_args, threads, roc_paper_df);
    } catch (const mcauth::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
