#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "emotions.hpp"
#include "feature_set.hpp"
#include "ranking.hpp"

namespace vocalfeat {

inline nlohmann::json ranking_to_json(const RankingTable& t, const std::string& method) {
    nlohmann::json features = nlohmann::json::array();
    for (const auto& e : t.entries) features.push_back({{"label", "x" + std::to_string(e.feature)}, {"score", e.score}});
    return {{"method", method}, {"features", features}};
}

inline nlohmann::json selection_report(const std::string& strategy, const std::vector<std::string>& inputs,
                                       std::size_t m, std::size_t p, const FeatureSet& result) {
    return {{"strategy", strategy}, {"inputs", inputs}, {"m", m}, {"p", p},
            {"result_labels", result.tags()}, {"provenance", result.provenance}};
}

inline nlohmann::json emotion_report_json(const EmotionReport& r) {
    nlohmann::json wf = nlohmann::json::array();
    for (const auto& [f, w] : r.weighted_features)
        wf.push_back({{"label", "x" + std::to_string(f)}, {"name", feature_name(f)}, {"weight", w}});
    return {{"emotion", r.emotion}, {"weighted_features", wf}, {"loo_accuracy", r.loo_accuracy},
            {"rounds_used", r.rounds_used}, {"positives", r.positives}, {"samples", r.samples},
            {"diagnostic", r.diagnostic}};
}

} // namespace vocalfeat
