#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <string>
#include <thread>
#include <vector>

#include "../classifiers/model.hpp"
#include "../data/dataset.hpp"
#include "../evaluation/cv.hpp"
#include "../filters/discretize.hpp"
#include "../filters/entropy.hpp"
#include "../filters/relieff.hpp"
#include "ranking.hpp"

namespace vocalfeat {

/// Scores every column by cross-validated accuracy of the classifier on that column alone.
inline RankingTable rank_individual(const LabeledDataset& ds, ClassifierKind kind, const TrainConfig& tcfg,
                                    const CvConfig& cv, unsigned jobs = 1) {
    require(ds.distinct_classes() >= 2, "ranking needs at least two classes", ErrorCode::single_class);
    const std::size_t d = ds.dims();
    std::vector<double> scores(d, 0.0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t f = next++; f < d; f = next++)
            scores[f] = cross_validate(ds, {ds.feature_ids[f]}, kind, tcfg, cv).accuracy;
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(d)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return make_ranking(ds.feature_ids, scores, ds.corpus_id, to_string(kind));
}

enum class FilterMethod { gain_ratio, info_gain, symmetrical_uncertainty, relieff };

inline const char* to_string(FilterMethod m) {
    switch (m) {
    case FilterMethod::gain_ratio: return "GR";
    case FilterMethod::info_gain: return "IG";
    case FilterMethod::symmetrical_uncertainty: return "SU";
    case FilterMethod::relieff: return "RF";
    }
    return "unknown";
}

inline FilterMethod parse_filter_method(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    if (name == "GR") return FilterMethod::gain_ratio;
    if (name == "IG") return FilterMethod::info_gain;
    if (name == "SU") return FilterMethod::symmetrical_uncertainty;
    if (name == "RF" || name == "RELIEFF") return FilterMethod::relieff;
    throw Error(ErrorCode::invalid_argument, "unknown filter method: " + name);
}

struct FilterConfig {
    int bins = kDefaultBins;
    ReliefConfig relief;
};

inline std::vector<double> filter_scores(const LabeledDataset& ds, FilterMethod method, const FilterConfig& cfg = {}) {
    require(ds.size() > 0 && ds.dims() > 0, "filter scoring needs a non-empty dataset", ErrorCode::empty_data);
    if (method == FilterMethod::relieff) return relieff(ds, cfg.relief);
    std::vector<double> out(ds.dims());
    for (std::size_t c = 0; c < ds.dims(); ++c) {
        const auto col = discretize(ds.features.column(c), cfg.bins);
        switch (method) {
        case FilterMethod::gain_ratio: out[c] = gain_ratio(col, ds.labels); break;
        case FilterMethod::info_gain: out[c] = info_gain(col, ds.labels); break;
        default: out[c] = symmetrical_uncertainty(col, ds.labels); break;
        }
    }
    return out;
}

inline RankingTable rank_filter(const LabeledDataset& ds, FilterMethod method, const FilterConfig& cfg = {}) {
    require(ds.distinct_classes() >= 2, "filter ranking needs at least two classes", ErrorCode::single_class);
    return make_ranking(ds.feature_ids, filter_scores(ds, method, cfg), ds.corpus_id, to_string(method));
}

} // namespace vocalfeat
