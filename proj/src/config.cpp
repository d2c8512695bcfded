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

#include "mcauth/config.hpp"

#include "mcauth/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace mcauth {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(trim(item));
    return parts;
}

// Raw parsed file: section -> key -> value, plus an issue list for syntax
// problems. Keys remember whether anything consumed them so leftovers can be
// reported as unknown.
struct RawConfig {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::vector<std::string> issues;

    void parse(const std::string& text, const std::string& origin) {
        std::istringstream in(text);
        std::string line;
        std::string section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto comment = line.find_first_of("#;");
            if (comment != std::string::npos) line.erase(comment);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') {
                    issues.push_back(origin + ":" + std::to_string(lineno) +
                                     ": malformed section header '" + line + "'");
                    continue;
                }
                section = trim(line.substr(1, line.size() - 2));
                sections[section];  // register even when empty
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                issues.push_back(origin + ":" + std::to_string(lineno) + ": expected key = value, got '" +
                                 line + "'");
                continue;
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (section.empty()) {
                issues.push_back(origin + ":" + std::to_string(lineno) + ": key '" + key +
                                 "' outside any [section]");
                continue;
            }
            if (key.empty()) {
                issues.push_back(origin + ":" + std::to_string(lineno) + ": empty key");
                continue;
            }
            auto [it, inserted] = sections[section].emplace(key, value);
            (void)it;
            if (!inserted) {
                issues.push_back(origin + ": duplicate key '" + section + "." + key + "'");
            }
        }
    }
};

// Pulls typed values out of one section, recording every failure instead of
// stopping at the first.
class SectionReader {
  public:
    SectionReader(RawConfig& raw, std::string section, std::vector<std::string>& issues)
        : raw_(raw), section_(std::move(section)), issues_(issues) {}

    std::optional<std::string> take(const std::string& key) {
        auto sec = raw_.sections.find(section_);
        if (sec == raw_.sections.end()) return std::nullopt;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return std::nullopt;
        std::string value = it->second;
        sec->second.erase(it);
        return value;
    }

    std::optional<double> take_double(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        return parse_double(key, *raw);
    }

    std::optional<std::uint64_t> take_u64(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw->c_str(), &end, 10);
        if (errno != 0 || end == raw->c_str() || *end != '\0' || raw->front() == '-') {
            fail(key, "expected a non-negative integer, got '" + *raw + "'");
            return std::nullopt;
        }
        return static_cast<std::uint64_t>(v);
    }

    std::optional<int> take_int(const std::string& key) {
        auto v = take_u64(key);
        if (!v) return std::nullopt;
        if (*v > 1000000) {
            fail(key, "value out of range");
            return std::nullopt;
        }
        return static_cast<int>(*v);
    }

    std::optional<std::vector<double>> take_double_list(const std::string& key) {
        auto raw = take(key);
        if (!raw) return std::nullopt;
        std::vector<double> out;
        for (const std::string& item : split(*raw, ',')) {
            auto v = parse_double(key, item);
            if (!v) return std::nullopt;
            out.push_back(*v);
        }
        if (out.empty()) {
            fail(key, "empty list");
            return std::nullopt;
        }
        return out;
    }

    std::optional<std::vector<int>> take_int_list(const std::string& key) {
        auto doubles = take_double_list(key);
        if (!doubles) return std::nullopt;
        std::vector<int> out;
        for (double d : *doubles) {
            if (d != static_cast<double>(static_cast<int>(d))) {
                fail(key, "expected integers");
                return std::nullopt;
            }
            out.push_back(static_cast<int>(d));
        }
        return out;
    }

    void fail(const std::string& key, const std::string& message) {
        issues_.push_back(section_ + "." + key + ": " + message);
    }

  private:
    std::optional<double> parse_double(const std::string& key, const std::string& raw) {
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(raw.c_str(), &end);
        if (errno != 0 || end == raw.c_str() || *end != '\0') {
            fail(key, "expected a number, got '" + raw + "'");
            return std::nullopt;
        }
        return v;
    }

    RawConfig& raw_;
    std::string section_;
    std::vector<std::string>& issues_;
};

const char* const kKnownSections[] = {"channel", "attacker", "noise", "test", "run"};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error([&issues] {
          std::string what = "invalid config (" + std::to_string(issues.size()) + " issue" +
                             (issues.size() == 1 ? "" : "s") + "):";
          for (const std::string& issue : issues) what += "\n  - " + issue;
          return what;
      }()),
      issues_(std::move(issues)) {}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    return parse(read_text_file(path), path);
}

ExperimentConfig ExperimentConfig::parse(const std::string& text, const std::string& origin) {
    RawConfig raw;
    raw.parse(text, origin);
    std::vector<std::string> issues = std::move(raw.issues);

    for (const auto& [name, keys] : raw.sections) {
        if (std::find(std::begin(kKnownSections), std::end(kKnownSections), name) ==
            std::end(kKnownSections)) {
            issues.push_back("unknown section [" + name + "]");
        }
    }

    ExperimentConfig cfg;
    SectionReader channel(raw, "channel", issues);
    SectionReader attacker(raw, "attacker", issues);
    SectionReader noise(raw, "noise", issues);
    SectionReader test(raw, "test", issues);
    SectionReader run(raw, "run", issues);

    // [channel] -- required physical parameters
    auto require_positive = [&](SectionReader& reader, const char* key,
                                std::optional<double> v) -> double {
        if (!v) {
            reader.fail(key, "required key is missing");
            return 1.0;  // placeholder keeping later checks quiet
        }
        if (!(*v > 0.0)) {
            reader.fail(key, "must be > 0");
            return 1.0;
        }
        return *v;
    };

    cfg.alice.diffusion_coefficient =
        require_positive(channel, "diffusion_coefficient", channel.take_double("diffusion_coefficient"));
    cfg.alice.distance = require_positive(channel, "distance", channel.take_double("distance"));
    if (auto q = channel.take_double("molecules_per_slot")) {
        if (!(*q >= 0.0)) channel.fail("molecules_per_slot", "must be >= 0");
        cfg.alice.molecules_per_slot = std::max(*q, 0.0);
    } else {
        channel.fail("molecules_per_slot", "required key is missing");
        cfg.alice.molecules_per_slot = 0.0;
    }
    if (auto l = channel.take_int("tap_count")) {
        if (*l < 1) channel.fail("tap_count", "must be >= 1");
        cfg.alice.tap_count = std::max(*l, 1);
    } else {
        channel.fail("tap_count", "required key is missing");
        cfg.alice.tap_count = 1;
    }

    // optional explicit grid: both keys or neither
    const auto first_tap = channel.take_double("first_tap_time");
    const auto spacing = channel.take_double("tap_spacing");
    if (first_tap.has_value() != spacing.has_value()) {
        channel.fail(first_tap ? "tap_spacing" : "first_tap_time",
                     "first_tap_time and tap_spacing must be given together");
    }
    if (first_tap && spacing) {
        cfg.explicit_grid = true;
        if (!(*first_tap > 0.0)) channel.fail("first_tap_time", "must be > 0");
        if (!(*spacing > 0.0)) channel.fail("tap_spacing", "must be > 0");
        cfg.alice.first_tap_time = *first_tap;
        cfg.alice.tap_spacing = *spacing;
    }

    // [attacker] -- defaults to the legitimate link's geometry and budget
    cfg.eve = cfg.alice;
    if (auto d = attacker.take_double("distance")) {
        if (!(*d > 0.0)) attacker.fail("distance", "must be > 0");
        cfg.eve.distance = *d;
    }
    if (auto q = attacker.take_double("molecules_per_slot")) {
        if (!(*q >= 0.0)) attacker.fail("molecules_per_slot", "must be >= 0");
        cfg.eve.molecules_per_slot = *q;
    }

    // [noise]
    if (auto s2 = noise.take_double("sigma2")) {
        if (!(*s2 >= 0.0)) noise.fail("sigma2", "must be >= 0");
        cfg.sigma2 = *s2;
    } else {
        noise.fail("sigma2", "required key is missing");
    }

    // [test]
    if (auto a = test.take_double("alpha")) {
        if (!(*a > 0.0 && *a < 1.0)) test.fail("alpha", "must lie in (0, 1)");
        cfg.alpha = *a;
    }
    if (auto mode = test.take("df_mode")) {
        if (*mode == "real") {
            cfg.df_mode = DfMode::RealModelL;
        } else if (*mode == "paper") {
            cfg.df_mode = DfMode::Paper2L;
        } else {
            test.fail("df_mode", "expected 'real' or 'paper', got '" + *mode + "'");
        }
    }

    // [run]
    if (auto alphas = run.take_double_list("alphas")) {
        cfg.run.alphas = *alphas;
        for (std::size_t i = 0; i < cfg.run.alphas.size(); ++i) {
            if (!(cfg.run.alphas[i] > 0.0 && cfg.run.alphas[i] < 1.0)) {
                run.fail("alphas", "every alpha must lie in (0, 1)");
                break;
            }
            if (i > 0 && !(cfg.run.alphas[i] > cfg.run.alphas[i - 1])) {
                run.fail("alphas", "alphas must be strictly increasing");
                break;
            }
        }
    } else {
        cfg.run.alphas = {cfg.alpha};
    }
    if (auto trials = run.take_u64("trials")) {
        if (*trials < 1) run.fail("trials", "must be >= 1");
        cfg.run.trials = *trials;
    }
    if (auto seed = run.take_u64("seed")) cfg.run.seed = *seed;
    if (auto taps = run.take_int_list("tap_counts")) {
        for (int l : *taps) {
            if (l < 1) {
                run.fail("tap_counts", "every tap count must be >= 1");
                break;
            }
        }
        cfg.run.tap_counts = *taps;
    } else {
        cfg.run.tap_counts = {cfg.alice.tap_count};
    }
    if (auto sigmas = run.take_double_list("sigma2_values")) {
        for (double s : *sigmas) {
            if (!(s > 0.0)) {
                run.fail("sigma2_values", "every sigma2 must be > 0");
                break;
            }
        }
        cfg.run.sigma2_values = *sigmas;
    } else {
        cfg.run.sigma2_values = {cfg.sigma2};
    }

    // anything still sitting in a known section is an unknown key
    for (const char* name : kKnownSections) {
        auto sec = raw.sections.find(name);
        if (sec == raw.sections.end()) continue;
        for (const auto& [key, value] : sec->second) {
            issues.push_back("unknown key '" + std::string(name) + "." + key + "'");
        }
    }

    if (!issues.empty()) throw ConfigError(std::move(issues));

    // resolve the default grid for the base tap count
    if (!cfg.explicit_grid) {
        cfg.alice.first_tap_time = 1.0;  // placeholder so peak_time's validation passes
        cfg.alice.tap_spacing = 1.0;
        const double peak = peak_time(cfg.alice);
        cfg.alice.first_tap_time = 0.5 * peak;
        cfg.alice.tap_spacing = peak / cfg.alice.tap_count;
    }
    cfg.eve.tap_count = cfg.alice.tap_count;
    cfg.eve.first_tap_time = cfg.alice.first_tap_time;
    cfg.eve.tap_spacing = cfg.alice.tap_spacing;
    return cfg;
}

Scenario ExperimentConfig::scenario_for(int tap_count, double sigma2_value) const {
    Scenario s;
    s.alice_channel = alice;
    s.eve_channel = eve;
    s.alice_channel.tap_count = tap_count;
    s.eve_channel.tap_count = tap_count;
    if (!explicit_grid) {
        const double peak = peak_time(s.alice_channel);
        s.alice_channel.first_tap_time = 0.5 * peak;
        s.alice_channel.tap_spacing = peak / tap_count;
        s.eve_channel.first_tap_time = s.alice_channel.first_tap_time;
        s.eve_channel.tap_spacing = s.alice_channel.tap_spacing;
    }
    s.measurement = MeasurementModel::isotropic(sigma2_value, tap_count);
    s.df_mode = df_mode;
    s.validate();
    return s;
}

}  // namespace mcauth
