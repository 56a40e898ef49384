#pragma once

#include <set>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../features/catalogue.hpp"

namespace vocalfeat {

struct FeatureSet {
    std::set<int> labels;
    std::string provenance;

    FeatureSet() = default;
    FeatureSet(std::set<int> l, std::string prov = {}) : labels(std::move(l)), provenance(std::move(prov)) {
        for (int f : labels)
            require(f >= 1 && f <= kNumFeatures, "feature label out of range: " + std::to_string(f),
                    ErrorCode::unknown_feature);
    }

    bool contains(int f) const { return labels.count(f) > 0; }
    std::size_t size() const noexcept { return labels.size(); }
    bool empty() const noexcept { return labels.empty(); }
    std::vector<int> sorted() const { return {labels.begin(), labels.end()}; }

    std::vector<std::string> tags() const {
        std::vector<std::string> out;
        for (int f : labels) out.push_back("x" + std::to_string(f));
        return out;
    }

    bool subset_of(const FeatureSet& other) const {
        for (int f : labels)
            if (!other.contains(f)) return false;
        return true;
    }

    friend bool operator==(const FeatureSet& a, const FeatureSet& b) { return a.labels == b.labels; }
};

} // namespace vocalfeat
