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

#include "mcauth/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mcauth {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_double_12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string gen_cir_csv(const ChannelParams& params) {
    const Cir cir = sample_cir(params);
    const double peak = peak_time(params);
    std::string out = "t_seconds,concentration\n";
    for (int l = 0; l < params.tap_count; ++l) {
        out += format_double(params.tap_time(l));
        out += ',';
        out += format_double(cir.taps[static_cast<std::size_t>(l)]);
        out += '\n';
    }
    constexpr int kCurvePoints = 1000;
    const double t_max = 4.0 * peak;
    for (int i = 0; i < kCurvePoints; ++i) {
        const double t = t_max * static_cast<double>(i) / (kCurvePoints - 1);
        out += format_double(t);
        out += ',';
        out += format_double(concentration(params, t));
        out += '\n';
    }
    return out;
}

std::string roc_csv(const RocCurve& curve) {
    std::string out = "alpha,pfa_hat,pmd_hat,trials,seed\n";
    char tail[64];
    for (const RocPoint& p : curve.points) {
        out += format_double(p.alpha);
        out += ',';
        out += format_double(p.pfa_hat);
        out += ',';
        out += format_double(p.pmd_hat);
        std::snprintf(tail, sizeof(tail), ",%" PRIu64 ",%" PRIu64 "\n", curve.trials_per_point,
                      curve.seed);
        out += tail;
    }
    return out;
}

namespace {

std::string json_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(values[i]);
    }
    out += "]";
    return out;
}

}  // namespace

std::string estimate_json(const std::vector<double>& h_true, const std::vector<double>& h_hat,
                          const std::vector<double>& sigma_h_diag) {
    std::string out = "{\n";
    out += "  \"h_true\": " + json_array(h_true) + ",\n";
    out += "  \"h_hat\": " + json_array(h_hat) + ",\n";
    out += "  \"sigma_h_diag\": " + json_array(sigma_h_diag) + "\n";
    out += "}\n";
    return out;
}

std::string roc_plot_script(const std::vector<std::string>& csv_files,
                            const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "# gnuplot script: missed-detection vs false-alarm rate\n"
        << "set datafile separator \",\"\n"
        << "set logscale x\n"
        << "set xlabel \"P_{fa}\"\n"
        << "set ylabel \"P_{md}\"\n"
        << "set yrange [0:1]\n"
        << "set key left bottom\n"
        << "set grid\n"
        << "plot \\\n";
    for (std::size_t i = 0; i < csv_files.size(); ++i) {
        out << "  \"" << csv_files[i] << "\" using 2:3 skip 1 with linespoints title \""
            << labels[i] << "\"";
        out << (i + 1 < csv_files.size() ? ", \\\n" : "\n");
    }
    out << "pause -1 \"press enter\"\n";
    return out.str();
}

std::string cir_plot_script(const std::string& csv_file) {
    std::ostringstream out;
    out << "# gnuplot script: received molecular pulse\n"
        << "set datafile separator \",\"\n"
        << "set xlabel \"t (seconds)\"\n"
        << "set ylabel \"concentration\"\n"
        << "set grid\n"
        << "plot \"" << csv_file << "\" using 1:2 skip 1 with points title \"pulse\"\n"
        << "pause -1 \"press enter\"\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failed: " + path);
    return ss.str();
}

}  // namespace mcauth
