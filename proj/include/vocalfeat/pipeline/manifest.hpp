#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../data/csv.hpp"
#include "../error.hpp"

namespace vocalfeat {

struct ManifestEntry {
    std::string path;
    std::string label;
    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct CorpusManifest {
    std::string corpus_id;
    std::vector<ManifestEntry> entries;
    /// Relative paths resolve against this directory.
    std::filesystem::path base_dir;

    std::filesystem::path resolve(const ManifestEntry& e) const {
        const std::filesystem::path p(e.path);
        return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    }

    void validate() const {
        std::set<std::string> seen;
        for (const auto& e : entries) {
            require(!e.path.empty(), "manifest entry has an empty path");
            require(!e.label.empty(), "manifest entry " + e.path + " has an empty label");
            require(seen.insert(e.path).second, "manifest repeats path " + e.path);
        }
    }
};

/// "path,label" rows, optionally preceded by a "# corpus: <id>" line.
inline CorpusManifest manifest_from_csv(const std::string& text) {
    CorpusManifest m;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto key = line.find("corpus:");
            if (key != std::string::npos) {
                auto id = line.substr(key + 7);
                id.erase(0, id.find_first_not_of(" \t"));
                id.erase(id.find_last_not_of(" \t") + 1);
                m.corpus_id = id;
            }
            continue;
        }
        const auto f = csv::split_line(line);
        if (!header_seen) {
            if (f.size() != 2 || f[0] != "path" || f[1] != "label")
                throw Error(ErrorCode::parse_error, "manifest header must be path,label");
            header_seen = true;
            continue;
        }
        if (f.size() != 2) throw Error(ErrorCode::parse_error, "manifest line " + std::to_string(lineno));
        m.entries.push_back({f[0], f[1]});
    }
    if (!header_seen) throw Error(ErrorCode::parse_error, "manifest has no header");
    m.validate();
    return m;
}

inline std::string manifest_to_csv(const CorpusManifest& m) {
    std::string out;
    if (!m.corpus_id.empty()) out += "# corpus: " + m.corpus_id + "\n";
    out += "path,label\n";
    for (const auto& e : m.entries) out += csv::quote(e.path) + ',' + csv::quote(e.label) + '\n';
    return out;
}

inline CorpusManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::file_not_found, "cannot open manifest " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    auto m = manifest_from_csv(ss.str());
    m.base_dir = path.parent_path();
    if (m.corpus_id.empty()) m.corpus_id = path.stem().string();
    return m;
}

inline void write_manifest(const std::filesystem::path& path, const CorpusManifest& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write manifest " + path.string());
    out << manifest_to_csv(m);
}

} // namespace vocalfeat
