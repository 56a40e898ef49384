#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "../error.hpp"

namespace vocalfeat {

struct ExtractionConfig {
    double frame_ms = 25.0;
    double hop_ms = 10.0;
    double pitch_min_hz = 50.0;
    double pitch_max_hz = 500.0;
    double voicing_threshold = 0.3;
    int n_filters = 13;
    double percentile_q = 0.9;
    bool peak_normalize = false;

    void validate() const {
        require(hop_ms > 0 && frame_ms >= hop_ms, "config: need frame_ms >= hop_ms > 0");
        require(pitch_min_hz > 0 && pitch_max_hz > pitch_min_hz, "config: need 0 < pitch_min_hz < pitch_max_hz");
        require(voicing_threshold > 0 && voicing_threshold < 1, "config: voicing_threshold must lie in (0, 1)");
        require(n_filters == 13, "config: n_filters is fixed at 13");
        require(percentile_q >= 0 && percentile_q <= 1, "config: percentile_q must lie in [0, 1]");
    }
};

inline constexpr const char* kConfigEnvVar = "VOCALFEAT_CONFIG";

/// Parses key=value lines; '#' starts a comment.
inline ExtractionConfig parse_config(const std::string& text) {
    ExtractionConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::parse_error, "config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "frame_ms") cfg.frame_ms = std::stod(value);
            else if (key == "hop_ms") cfg.hop_ms = std::stod(value);
            else if (key == "pitch_min_hz") cfg.pitch_min_hz = std::stod(value);
            else if (key == "pitch_max_hz") cfg.pitch_max_hz = std::stod(value);
            else if (key == "voicing_threshold") cfg.voicing_threshold = std::stod(value);
            else if (key == "n_filters") cfg.n_filters = std::stoi(value);
            else if (key == "percentile_q") cfg.percentile_q = std::stod(value);
            else if (key == "peak_normalize") cfg.peak_normalize = value == "1" || value == "true";
            else throw Error(ErrorCode::parse_error, "config: unknown key '" + key + "'");
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::parse_error, "config: bad value for '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

inline ExtractionConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::file_not_found, "cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

/// Explicit path wins, then the environment variable, then defaults.
inline ExtractionConfig resolve_config(const std::string& explicit_path = {}) {
    if (!explicit_path.empty()) return load_config(explicit_path);
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) return load_config(env);
    return {};
}

} // namespace vocalfeat
