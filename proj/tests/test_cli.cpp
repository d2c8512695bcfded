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
// End-to-end runs of the installed binary: exit codes, output formats,
// determinism. MCAUTH_CLI_PATH and MCAUTH_CONFIG_DIR come from the build.

#include "mcauth/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path err_file = fs::path("cli_stderr_") += std::to_string(counter++);
    const std::string command =
        std::string(MCAUTH_CLI_PATH) + " " + args + " 2>" + err_file.string();
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = std::move(out);
    if (fs::exists(err_file)) {
        r.err = mcauth::read_text_file(err_file.string());
        fs::remove(err_file);
    }
    return r;
}

// scratch dir under the test working directory, fresh per process
const fs::path& scratch() {
    static const fs::path dir = [] {
        fs::path d = "cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string sample_config() {
    const fs::path path = scratch() / "sample.ini";
    if (!fs::exists(path)) {
        mcauth::write_text_file(path.string(), R"([channel]
diffusion_coefficient = 1.0
distance = 15.0
molecules_per_slot = 5e5
tap_count = 4

[attacker]
distance = 16.5

[noise]
sigma2 = 1.0

[run]
alphas = 0.05, 0.1, 0.5
trials = 4000
seed = 11
)");
    }
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

TEST_CASE("cli: no subcommand or unknown flags exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("threshold --bogus 1").exit_code == 2);
}

TEST_CASE("cli threshold: closed form, 12 digits, --out support") {
    const CliResult r = run_cli("threshold --alpha 0.05 --df 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "5.99146454711\n");

    const CliResult r95 = run_cli("threshold --alpha 0.95 --df 2");
    CHECK(r95.exit_code == 0);
    CHECK(r95.out == "0.102586588775\n");

    // quadrature-verified value for df = 8 (see oracle tests)
    const CliResult r8 = run_cli("threshold --alpha 0.05 --df 8");
    CHECK(r8.exit_code == 0);
    CHECK(std::abs(std::strtod(r8.out.c_str(), nullptr) - 15.507313055865451) < 1e-9);

    const fs::path out = scratch() / "thr.txt";
    CHECK(run_cli("threshold --alpha 0.05 --df 2 --out " + out.string()).exit_code == 0);
    CHECK(mcauth::read_text_file(out.string()) == "5.99146454711\n");

    CHECK(run_cli("threshold --alpha 1.5 --df 2").exit_code == 2);
    CHECK(run_cli("threshold --df 2").exit_code == 2);  // alpha missing, no config
    CHECK(run_cli("threshold --config " + sample_config()).exit_code == 0);
}

TEST_CASE("cli gen-cir: header, row count, determinism") {
    const CliResult r = run_cli("gen-cir --config " + sample_config());
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1 + 4 + 1000);  // header + taps + dense curve
    CHECK(lines[0] == "t_seconds,concentration");
    // tap rows first: grid instants 18.75 .. 46.875
    CHECK(lines[1].substr(0, 6) == "18.75,");
    CHECK(lines[4].substr(0, 7) == "46.875,");
    // curve starts at t = 0 with value 0
    CHECK(lines[5] == "0,0");

    const CliResult again = run_cli("gen-cir --config " + sample_config());
    CHECK(again.out == r.out);  // byte-identical
}

TEST_CASE("cli gen-cir: zero budget emits all-zero concentrations") {
    const fs::path cfg = scratch() / "zeroq.ini";
    mcauth::write_text_file(cfg.string(), R"([channel]
diffusion_coefficient = 1.0
distance = 15.0
molecules_per_slot = 0
tap_count = 4

[noise]
sigma2 = 1.0
)");
    const CliResult r = run_cli("gen-cir --config " + cfg.string());
    CHECK(r.exit_code == 0);
    for (const std::string& line : lines_of(r.out)) {
        if (line == "t_seconds,concentration") continue;
        const auto comma = line.find(',');
        CHECK(line.substr(comma + 1) == "0");
    }
}

TEST_CASE("cli gen-cir: plot script lands next to the CSV") {
    const fs::path out = scratch() / "pulse.csv";
    const CliResult r =
        run_cli("gen-cir --config " + sample_config() + " --out " + out.string() + " --plot-script");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out));
    const fs::path script = scratch() / "plot_cir.gnuplot";
    REQUIRE(fs::exists(script));
    CHECK(mcauth::read_text_file(script.string()).find("pulse.csv") != std::string::npos);
}

TEST_CASE("cli estimate: noiseless override recovers the true response") {
    const fs::path cfg = scratch() / "noiseless.ini";
    mcauth::write_text_file(cfg.string(), R"([channel]
diffusion_coefficient = 1.0
distance = 15.0
molecules_per_slot = 5e5
tap_count = 4

[noise]
sigma2 = 0
)");
    const CliResult r = run_cli("estimate --config " + cfg.string() + " --seed 3");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("h_true"));
    REQUIRE(doc.contains("h_hat"));
    REQUIRE(doc.contains("sigma_h_diag"));
    const auto h_true = doc["h_true"].get<std::vector<double>>();
    const auto h_hat = doc["h_hat"].get<std::vector<double>>();
    const auto sig = doc["sigma_h_diag"].get<std::vector<double>>();
    REQUIRE(h_true.size() == 4);
    REQUIRE(h_hat.size() == 4);
    REQUIRE(sig.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(h_hat[i] == doctest::Approx(h_true[i]).epsilon(1e-9));
        CHECK(sig[i] == 0.0);
    }
}

TEST_CASE("cli estimate: deterministic for a fixed seed, varies across seeds") {
    const std::string cmd = "estimate --config " + sample_config() + " --seed 99";
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const CliResult c = run_cli("estimate --config " + sample_config() + " --seed 100");
    CHECK(c.out != a.out);
}

TEST_CASE("cli estimate: short frame exits 2 and cites the length condition") {
    const CliResult r =
        run_cli("estimate --config " + sample_config() + " --frame-length 8");  // needs >= 9
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("k_m-k_1 >= 2L") != std::string::npos);
    // boundary length is accepted
    CHECK(run_cli("estimate --config " + sample_config() + " --frame-length 9").exit_code == 0);
}

TEST_CASE("cli roc: sweep files, header, roundtrip, reproducibility across threads") {
    const fs::path cfg = scratch() / "sweep.ini";
    mcauth::write_text_file(cfg.string(), R"([channel]
diffusion_coefficient = 1.0
distance = 15.0
molecules_per_slot = 5e5
tap_count = 4

[attacker]
distance = 16.5

[noise]
sigma2 = 1.0

[run]
alphas = 0.05, 0.1, 0.5
trials = 3000
seed = 5
tap_counts = 4, 8
sigma2_values = 1, 3
)");
    const fs::path out_a = scratch() / "roc_a";
    const fs::path out_b = scratch() / "roc_b";
    CHECK(run_cli("roc --config " + cfg.string() + " --out " + out_a.string() + " --threads 1")
              .exit_code == 0);
    CHECK(run_cli("roc --config " + cfg.string() + " --out " + out_b.string() + " --threads 3")
              .exit_code == 0);

    const char* names[] = {"roc_L4_sigma2_1.csv", "roc_L4_sigma2_3.csv", "roc_L8_sigma2_1.csv",
                           "roc_L8_sigma2_3.csv"};
    for (const char* name : names) {
        const fs::path fa = out_a / name;
        const fs::path fb = out_b / name;
        REQUIRE(fs::exists(fa));
        REQUIRE(fs::exists(fb));
        const std::string ca = mcauth::read_text_file(fa.string());
        CHECK(ca == mcauth::read_text_file(fb.string()));  // byte-identical across threads
        const auto lines = lines_of(ca);
        REQUIRE(lines.size() == 4);  // header + 3 alphas
        CHECK(lines[0] == "alpha,pfa_hat,pmd_hat,trials,seed");
        // 17-significant-digit roundtrip: re-serializing the parsed value
        // reproduces the token exactly
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<std::string> fields;
            std::string cur;
            for (char ch : lines[i]) {
                if (ch == ',') {
                    fields.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            fields.push_back(cur);
            REQUIRE(fields.size() == 5);
            for (int f : {0, 1, 2}) {
                const double v = std::strtod(fields[f].c_str(), nullptr);
                CHECK(mcauth::format_double(v) == fields[f]);
            }
            CHECK(fields[3] == "3000");
        }
    }
}

TEST_CASE("cli roc: plot script references every emitted CSV") {
    const fs::path out = scratch() / "roc_plot";
    CHECK(run_cli("roc --config " + sample_config() + " --out " + out.string() + " --plot-script")
              .exit_code == 0);
    const fs::path script = out / "plot_roc.gnuplot";
    REQUIRE(fs::exists(script));
    const std::string body = mcauth::read_text_file(script.string());
    CHECK(body.find("roc_L4_sigma2_1.csv") != std::string::npos);
    CHECK(body.find("logscale x") != std::string::npos);
}

TEST_CASE("cli roc: blind attacker single point lands at 1 - alpha") {
    const fs::path cfg = scratch() / "blind.ini";
    mcauth::write_text_file(cfg.string(), R"([channel]
diffusion_coefficient = 1.0
distance = 15.0
molecules_per_slot = 5e5
tap_count = 4

[noise]
sigma2 = 1.0

[run]
alphas = 0.1
trials = 20000
seed = 17
)");
    const fs::path out = scratch() / "roc_blind";
    CHECK(run_cli("roc --config " + cfg.string() + " --out " + out.string()).exit_code == 0);
    const auto lines = lines_of(mcauth::read_text_file((out / "roc_L4_sigma2_1.csv").string()));
    REQUIRE(lines.size() == 2);
    // columns: alpha, pfa, pmd
    char* cursor = nullptr;
    const double alpha = std::strtod(lines[1].c_str(), &cursor);
    std::strtod(cursor + 1, &cursor);  // pfa, unused here
    const double pmd = std::strtod(cursor + 1, &cursor);
    CHECK(alpha == 0.1);
    CHECK(std::abs(pmd - 0.9) <= 0.009);
}

TEST_CASE("cli roc: unwritable output path exits 3") {
    CHECK(run_cli("roc --config " + sample_config() + " --out /dev/null/nope").exit_code == 3);
}

TEST_CASE("cli: config validation failures exit 2 and name the bad keys") {
    const fs::path cfg = scratch() / "bad.ini";
    mcauth::write_text_file(cfg.string(), R"([channel]
diffusion_coefficient = -1
distance = 15
molecules_per_slot = 5e5
tap_count = 4
typo_key = 2

[noise]
sigma2 = 1
)");
    const CliResult r = run_cli("gen-cir --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("channel.diffusion_coefficient") != std::string::npos);
    CHECK(r.err.find("typo_key") != std::string::npos);

    CHECK(run_cli("gen-cir --config /does/not/exist.ini").exit_code == 3);
    CHECK(run_cli("gen-cir").exit_code == 2);  // missing --config
}
