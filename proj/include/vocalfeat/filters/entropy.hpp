#pragma once

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "discretize.hpp"

namespace vocalfeat {

/// Shannon entropy in bits.
inline double entropy(const std::vector<int>& values) {
    require(!values.empty(), "entropy of an empty sequence", ErrorCode::empty_data);
    std::map<int, std::size_t> counts;
    for (int v : values) ++counts[v];
    const double n = static_cast<double>(values.size());
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

/// H(labels | feature).
inline double conditional_entropy(const std::vector<int>& labels, const std::vector<int>& feature) {
    require(labels.size() == feature.size(), "feature and label lengths differ", ErrorCode::length_mismatch);
    require(!labels.empty(), "conditional entropy of empty sequences", ErrorCode::empty_data);
    std::map<int, std::map<int, std::size_t>> joint;
    for (std::size_t i = 0; i < labels.size(); ++i) ++joint[feature[i]][labels[i]];
    const double n = static_cast<double>(labels.size());
    double h = 0.0;
    for (const auto& [_, row] : joint) {
        std::size_t total = 0;
        for (const auto& [__, c] : row) total += c;
        double hv = 0.0;
        for (const auto& [__, c] : row) {
            const double p = static_cast<double>(c) / static_cast<double>(total);
            hv -= p * std::log2(p);
        }
        h += static_cast<double>(total) / n * hv;
    }
    return h;
}

inline double info_gain(const std::vector<int>& feature, const std::vector<int>& labels) {
    require(feature.size() == labels.size(), "feature and label lengths differ", ErrorCode::length_mismatch);
    return std::max(0.0, entropy(labels) - conditional_entropy(labels, feature));
}

inline double gain_ratio(const std::vector<int>& feature, const std::vector<int>& labels) {
    const double ig = info_gain(feature, labels);
    const double hf = entropy(feature);
    return hf > 0.0 ? std::min(1.0, ig / hf) : 0.0;
}

inline double symmetrical_uncertainty(const std::vector<int>& feature, const std::vector<int>& labels) {
    const double ig = info_gain(feature, labels);
    const double denom = entropy(feature) + entropy(labels);
    return denom > 0.0 ? std::min(1.0, 2.0 * ig / denom) : 0.0;
}

inline double info_gain(const DiscreteColumn& f, const std::vector<int>& labels) { return info_gain(f.bins, labels); }
inline double gain_ratio(const DiscreteColumn& f, const std::vector<int>& labels) { return gain_ratio(f.bins, labels); }
inline double symmetrical_uncertainty(const DiscreteColumn& f, const std::vector<int>& labels) {
    return symmetrical_uncertainty(f.bins, labels);
}

} // namespace vocalfeat
