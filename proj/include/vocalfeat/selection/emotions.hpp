#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "../classifiers/adaboost.hpp"
#include "../data/dataset.hpp"
#include "../error.hpp"

namespace vocalfeat {

struct EmotionReport {
    std::string emotion;
    /// (feature label, cumulative alpha), descending, ties by ascending label.
    std::vector<std::pair<int, double>> weighted_features;
    double loo_accuracy = 0.0;
    std::size_t rounds_used = 0;
    std::size_t positives = 0;
    std::size_t samples = 0;
    std::string diagnostic;
};

/// One-vs-rest labels: +1 for `emotion`, -1 otherwise.
inline std::vector<int> one_vs_rest(const LabeledDataset& ds, const std::string& emotion) {
    const int target = ds.class_index(emotion);
    require(target >= 0, "emotion '" + emotion + "' is not a class of the dataset", ErrorCode::invalid_argument);
    std::vector<int> y;
    for (int c : ds.labels) y.push_back(c == target ? 1 : -1);
    return y;
}

inline EmotionReport per_emotion_analysis(const LabeledDataset& ds, const std::string& emotion, std::size_t rounds = 50) {
    const auto y = one_vs_rest(ds, emotion);
    const auto pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    require(pos > 0, "emotion '" + emotion + "' has no samples", ErrorCode::invalid_argument);
    require(pos < y.size(), "emotion '" + emotion + "' covers every sample", ErrorCode::single_class);

    EmotionReport rep;
    rep.emotion = emotion;
    rep.positives = pos;
    rep.samples = y.size();
    const auto model = train_adaboost(ds.features, y, rounds);
    rep.rounds_used = model.stumps.size();
    rep.diagnostic = model.diagnostic;
    for (std::size_t c = 0; c < model.feature_weights.size(); ++c)
        if (model.feature_weights[c] > 0.0) rep.weighted_features.emplace_back(ds.feature_ids[c], model.feature_weights[c]);
    std::sort(rep.weighted_features.begin(), rep.weighted_features.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });

    std::size_t correct = 0;
    const std::size_t n = ds.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        std::vector<int> yt;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) {
                rows.push_back(j);
                yt.push_back(y[j]);
            }
        const bool both = std::count(yt.begin(), yt.end(), 1) > 0 && std::count(yt.begin(), yt.end(), -1) > 0;
        int pred = -1;
        if (both) {
            const auto m = train_adaboost(ds.features.select_rows(rows), yt, rounds);
            pred = predict_adaboost(m, ds.features.row(i));
        } else {
            pred = std::count(yt.begin(), yt.end(), 1) > 0 ? 1 : -1;
        }
        if (pred == y[i]) ++correct;
    }
    rep.loo_accuracy = static_cast<double>(correct) / static_cast<double>(n);
    return rep;
}

} // namespace vocalfeat
