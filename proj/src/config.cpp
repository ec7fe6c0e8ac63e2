// Copyright 2026 The shapecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shapecode/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "shapecode/error.hpp"

namespace shapecode {

void EngineConfig::validate() const {
    encoder.validate();
    tolerances.validate();
    if (threshold < 0 || threshold > 255) throw PreconditionError("threshold must lie in 0-255");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T number(std::string_view key, std::string_view value) {
    T v{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError("bad value \"" + std::string(value) + "\" for " + std::string(key));
    return v;
}

}  // namespace

void apply_setting(EngineConfig& cfg, std::string_view key, std::string_view value) {
    const auto real = [&] { return number<double>(key, value); };
    if (key == "delta_d") cfg.encoder.line_tolerance = real();
    else if (key == "l_min") cfg.encoder.min_line_length = real();
    else if (key == "e_res") cfg.encoder.ellipse_residual = real();
    else if (key == "dot_max") cfg.encoder.dot_max = number<int>(key, value);
    else if (key == "circular_ratio") cfg.encoder.circular_ratio = real();
    else if (key == "delta_l") cfg.tolerances.length = real();
    else if (key == "delta_alpha") cfg.tolerances.alpha = real();
    else if (key == "delta_a") cfg.tolerances.axis_a = real();
    else if (key == "delta_b") cfg.tolerances.axis_b = real();
    else if (key == "delta_phi") cfg.tolerances.phi = real();
    else if (key == "delta_beta") cfg.tolerances.beta = real();
    else if (key == "delta_gamma") cfg.tolerances.gamma = real();
    else if (key == "delta_pt") cfg.tolerances.point = real();
    else if (key == "threshold") cfg.threshold = number<int>(key, value);
    else throw ParseError("unknown config key \"" + std::string(key) + "\"");
}

EngineConfig parse_config(std::istream& in) {
    EngineConfig cfg;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) throw ParseError("config line " + std::to_string(n) + ": expected key = value");
        apply_setting(cfg, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
    }
    try {
        cfg.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid config: ") + e.what());
    }
    return cfg;
}

EngineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path.string());
    return parse_config(in);
}

std::string format_config(const EngineConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "delta_d = " << cfg.encoder.line_tolerance << '\n'
        << "l_min = " << cfg.encoder.min_line_length << '\n'
        << "e_res = " << cfg.encoder.ellipse_residual << '\n'
        << "dot_max = " << cfg.encoder.dot_max << '\n'
        << "circular_ratio = " << cfg.encoder.circular_ratio << '\n'
        << "delta_l = " << cfg.tolerances.length << '\n'
        << "delta_alpha = " << cfg.tolerances.alpha << '\n'
        << "delta_a = " << cfg.tolerances.axis_a << '\n'
        << "delta_b = " << cfg.tolerances.axis_b << '\n'
        << "delta_phi = " << cfg.tolerances.phi << '\n'
        << "delta_beta = " << cfg.tolerances.beta << '\n'
        << "delta_gamma = " << cfg.tolerances.gamma << '\n'
        << "delta_pt = " << cfg.tolerances.point << '\n'
        << "threshold = " << cfg.threshold << '\n';
    return out.str();
}

}  // namespace shapecode
