#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "../error.hpp"

namespace vocalfeat {

inline constexpr int kNumFeatures = 84;
inline constexpr int kNumFilters = 13;

struct FeatureLabel {
    int index = 0;
    std::string name;

    std::string tag() const { return "x" + std::to_string(index); }
    friend bool operator==(const FeatureLabel&, const FeatureLabel&) = default;
};

namespace detail {

inline const std::array<std::string, kNumFeatures>& canonical_names() {
    static const std::array<std::string, kNumFeatures> names = [] {
        std::array<std::string, kNumFeatures> n;
        const char* stats[] = {"Max", "Min", "Std", "Mean", "Median"};
        for (int s = 0; s < 5; ++s)
            for (int f = 0; f < 3; ++f)
                n[s * 3 + f] = std::string(stats[s]) + "(F" + std::to_string(f + 1) + ")";
        for (int s = 0; s < 5; ++s) n[15 + s] = "Mean(" + std::string(stats[s]) + "(F))";
        const char* scalars[] = {"Intensity", "Std", "Autocorrelation", "Pitch", "HNR", "Min",
                                 "Mean", "Variance", "Max", "Percentile", "ZCR", "ZCR_density"};
        for (int i = 0; i < 12; ++i) n[20 + i] = scalars[i];
        for (int i = 0; i < kNumFilters; ++i) {
            const std::string k = std::to_string(i + 1);
            n[32 + i] = "MFCC_" + k;
            n[45 + i] = "Mean(MFCC_" + k + ")";
            n[58 + i] = "FBE_" + k;
            n[71 + i] = "Mean(FBE_" + k + ")";
        }
        return n;
    }();
    return names;
}

inline std::string squash(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '$' && c != '{' && c != '}')
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

inline const std::array<std::string, 20>& long_formant_names() {
    static const std::array<std::string, 20> names = [] {
        std::array<std::string, 20> n;
        const char* stats[] = {"Max", "Min", "Std", "Mean", "Median"};
        const char* ord[] = {"first", "second", "third"};
        for (int s = 0; s < 5; ++s) {
            for (int f = 0; f < 3; ++f)
                n[s * 3 + f] = std::string(stats[s]) + " of " + ord[f] + " formant";
            n[15 + s] = std::string("Mean of ") + stats[s] + " of formants";
        }
        return n;
    }();
    return names;
}

} // namespace detail

inline const std::string& feature_name(int index) {
    require(index >= 1 && index <= kNumFeatures, "feature index out of range: " + std::to_string(index),
            ErrorCode::unknown_feature);
    return detail::canonical_names()[static_cast<std::size_t>(index - 1)];
}

/// Accepts canonical names, "x<i>" tags and the long descriptive forms.
inline FeatureLabel label_of(std::string_view name) {
    const std::string key = detail::squash(name);
    if (key.size() > 1 && key[0] == 'x' &&
        key.find_first_not_of("0123456789", 1) == std::string::npos && key.size() <= 3) {
        const int idx = std::stoi(key.substr(1));
        if (idx >= 1 && idx <= kNumFeatures) return {idx, feature_name(idx)};
    }
    for (int i = 1; i <= kNumFeatures; ++i)
        if (detail::squash(feature_name(i)) == key) return {i, feature_name(i)};
    for (int i = 0; i < 20; ++i)
        if (detail::squash(detail::long_formant_names()[static_cast<std::size_t>(i)]) == key)
            return {i + 1, feature_name(i + 1)};
    static const std::pair<const char*, int> aliases[] = {
        {"autocorrolation", 23}, {"harmtonoise", 25}, {"harmonictonoise", 25}, {"vari", 28},
        {"variance", 28}, {"zcrdensity", 32}};
    for (const auto& [alias, idx] : aliases)
        if (key == alias) return {idx, feature_name(idx)};
    throw Error(ErrorCode::unknown_feature, "unknown feature name: " + std::string(name));
}

inline FeatureLabel label_at(int index) { return {index, feature_name(index)}; }

} // namespace vocalfeat
