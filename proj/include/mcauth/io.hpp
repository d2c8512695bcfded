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

#pragma once

#include "mcauth/channel.hpp"
#include "mcauth/montecarlo.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mcauth {

/// File-system failures (unwritable path, unreadable config); the CLI maps
/// these to exit code 3, everything else validation-shaped to 2.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 17 significant digits: enough to round-trip any double exactly.
std::string format_double(double v);

/// 12 significant digits, for human-facing scalar printouts.
std::string format_double_12(double v);

/// Pulse CSV: header `t_seconds,concentration`, one row per tap instant,
/// then a dense 1000-point curve over [0, 4 * peak_time].
std::string gen_cir_csv(const ChannelParams& params);

/// ROC CSV: header `alpha,pfa_hat,pmd_hat,trials,seed`, one row per point.
std::string roc_csv(const RocCurve& curve);

/// Estimation record with h_true / h_hat / sigma_h_diag arrays.
std::string estimate_json(const std::vector<double>& h_true, const std::vector<double>& h_hat,
                          const std::vector<double>& sigma_h_diag);

/// gnuplot script plotting missed-detection vs false-alarm rate from the
/// given CSV files, false-alarm axis logarithmic.
std::string roc_plot_script(const std::vector<std::string>& csv_files,
                            const std::vector<std::string>& labels);

/// gnuplot script plotting the emitted pulse CSV.
std::string cir_plot_script(const std::string& csv_file);

/// Writes atomically enough for this tool: truncate + write + flush; throws
/// io_error when the path cannot be opened or written.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace mcauth
