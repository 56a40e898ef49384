#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../data/csv.hpp"
#include "../error.hpp"
#include "../features/catalogue.hpp"

namespace vocalfeat {

struct RankEntry {
    int feature = 0;
    double score = 0.0;
    friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct RankingTable {
    std::vector<RankEntry> entries;
    std::string dataset;
    /// Classifier or filter method that produced the scores.
    std::string source;
    /// Repairs applied while loading.
    std::vector<std::string> notes;

    std::vector<int> order() const {
        std::vector<int> out;
        for (const auto& e : entries) out.push_back(e.feature);
        return out;
    }

    std::size_t size() const noexcept { return entries.size(); }
};

/// Sorts descending by score; equal scores keep ascending feature order.
inline RankingTable make_ranking(const std::vector<int>& feature_ids, const std::vector<double>& scores,
                                 std::string dataset = {}, std::string source = {}) {
    require(feature_ids.size() == scores.size(), "feature and score counts differ", ErrorCode::length_mismatch);
    RankingTable t;
    t.dataset = std::move(dataset);
    t.source = std::move(source);
    for (std::size_t i = 0; i < scores.size(); ++i) t.entries.push_back({feature_ids[i], scores[i]});
    std::sort(t.entries.begin(), t.entries.end(), [](const RankEntry& a, const RankEntry& b) {
        return a.score != b.score ? a.score > b.score : a.feature < b.feature;
    });
    return t;
}

/// Checks non-increasing scores and, when `complete`, that every one of the 84 labels appears once.
inline void validate_ranking(const RankingTable& t, bool complete = true) {
    std::set<int> seen;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const int f = t.entries[i].feature;
        require(f >= 1 && f <= kNumFeatures, "ranking label out of range: x" + std::to_string(f),
                ErrorCode::unknown_feature);
        require(seen.insert(f).second, "ranking repeats label x" + std::to_string(f), ErrorCode::parse_error);
        if (i > 0)
            require(t.entries[i].score <= t.entries[i - 1].score,
                    "ranking scores increase at rank " + std::to_string(i + 1), ErrorCode::parse_error);
    }
    if (complete)
        require(seen.size() == static_cast<std::size_t>(kNumFeatures),
                "ranking has " + std::to_string(seen.size()) + " labels, expected 84", ErrorCode::parse_error);
}

/// Parses "rank,feature_label,score". Lenient mode drops repeated labels and appends missing ones at the minimum score.
inline RankingTable ranking_from_csv(const std::string& text, bool lenient = false) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, "ranking CSV is empty");
    const auto header = csv::split_line(line);
    if (header.size() != 3 || header[0] != "rank" || header[1] != "feature_label" || header[2] != "score")
        throw Error(ErrorCode::parse_error, "ranking CSV header must be rank,feature_label,score");
    RankingTable t;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto f = csv::split_line(line);
        if (f.size() != 3) throw Error(ErrorCode::parse_error, "ranking CSV line " + std::to_string(lineno));
        try {
            t.entries.push_back({label_of(f[1]).index, std::stod(f[2])});
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::parse_error, "ranking CSV line " + std::to_string(lineno) + ": bad score");
        }
    }
    if (lenient) {
        std::set<int> seen;
        std::vector<RankEntry> kept;
        double lowest = t.entries.empty() ? 0.0 : t.entries.front().score;
        for (const auto& e : t.entries) {
            lowest = std::min(lowest, e.score);
            if (seen.insert(e.feature).second) kept.push_back(e);
            else t.notes.push_back("dropped repeated x" + std::to_string(e.feature));
        }
        for (int i = 1; i <= kNumFeatures; ++i)
            if (!seen.count(i)) {
                kept.push_back({i, lowest});
                t.notes.push_back("appended missing x" + std::to_string(i));
            }
        t.entries = std::move(kept);
    }
    validate_ranking(t, true);
    return t;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::file_not_found, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RankingTable read_ranking(const std::filesystem::path& path, bool lenient = false) {
    auto t = ranking_from_csv(read_text_file(path), lenient);
    t.dataset = path.stem().string();
    return t;
}

inline std::string ranking_to_csv(const RankingTable& t) {
    std::string out = "rank,feature_label,score\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        out += std::to_string(i + 1) + ",x" + std::to_string(t.entries[i].feature) + ',' +
               csv::format_double(t.entries[i].score) + '\n';
    return out;
}

/// Ordered labels from either a ranking CSV or a one-column "feature_label" list.
inline std::vector<int> read_ordered_labels(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, path.string() + " is empty");
    const auto header = csv::split_line(line);
    if (header.size() == 3 && header[0] == "rank") return ranking_from_csv(text, true).order();
    if (header.size() != 1 || header[0] != "feature_label")
        throw Error(ErrorCode::parse_error, path.string() + ": expected a ranking or feature_label list");
    std::vector<int> out;
    std::set<int> seen;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const int f = label_of(csv::split_line(line).front()).index;
        require(seen.insert(f).second, path.string() + " repeats x" + std::to_string(f), ErrorCode::parse_error);
        out.push_back(f);
    }
    return out;
}

} // namespace vocalfeat
