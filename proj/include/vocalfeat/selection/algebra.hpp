#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "../error.hpp"
#include "feature_set.hpp"
#include "ranking.hpp"

namespace vocalfeat {

struct SelectionConfig {
    std::size_t m = 22;
    std::size_t p = 10;
    std::vector<std::string> datasets;
    std::vector<std::string> classifiers;
    std::size_t n_features = kNumFeatures;

    void validate() const {
        require(p > 0 && p < m && m <= n_features, "selection needs 0 < p < m <= 84");
    }
};

inline FeatureSet top_m(const std::vector<int>& ordered, std::size_t m, const std::string& name = "ranking") {
    require(m >= 1 && m <= static_cast<std::size_t>(kNumFeatures), "m must lie in [1, 84]");
    require(m <= ordered.size(), "m exceeds the length of " + name);
    return {std::set<int>(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(m)),
            "top" + std::to_string(m) + "(" + name + ")"};
}

inline FeatureSet top_m(const RankingTable& t, std::size_t m) {
    const std::string name = t.dataset.empty() && t.source.empty() ? "ranking" : t.dataset + "/" + t.source;
    return top_m(t.order(), m, name);
}

/// Intersection; provenance joins the inputs' provenances.
inline FeatureSet common_features(const std::vector<FeatureSet>& sets) {
    require(sets.size() >= 2, "common_features needs at least two sets");
    std::set<int> acc = sets.front().labels;
    std::string prov = "common(" + sets.front().provenance;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        std::set<int> next;
        for (int f : acc)
            if (sets[i].contains(f)) next.insert(f);
        acc = std::move(next);
        prov += ", " + sets[i].provenance;
    }
    return {std::move(acc), prov + ")"};
}

/// Union of each ordered list's top-p prefix.
inline FeatureSet special_features(const std::vector<std::vector<int>>& ordered, std::size_t p, std::size_t m = 22) {
    require(p < m, "special_features needs p < m");
    require(!ordered.empty(), "special_features needs at least one ranking");
    std::set<int> acc;
    for (const auto& o : ordered) {
        const auto prefix = top_m(o, p);
        acc.insert(prefix.labels.begin(), prefix.labels.end());
    }
    return {std::move(acc), "special(p=" + std::to_string(p) + ", " + std::to_string(ordered.size()) + " rankings)"};
}

inline FeatureSet special_features(const std::vector<RankingTable>& rankings, std::size_t p, std::size_t m = 22) {
    std::vector<std::vector<int>> ordered;
    for (const auto& t : rankings) ordered.push_back(t.order());
    return special_features(ordered, p, m);
}

namespace detail {

inline FeatureSet intersect_top_m(const std::map<std::string, RankingTable>& tables, std::size_t m,
                                  const std::string& what) {
    require(tables.size() >= 2, what + " needs at least two rankings");
    std::vector<FeatureSet> sets;
    for (const auto& [name, t] : tables) sets.push_back(top_m(t.order(), m, name));
    auto out = common_features(sets);
    out.provenance = what + ": " + out.provenance;
    return out;
}

} // namespace detail

/// Fixed classifier, one ranking per dataset.
inline FeatureSet language_independent(const std::map<std::string, RankingTable>& per_dataset, std::size_t m = 22) {
    return detail::intersect_top_m(per_dataset, m, "language-independent");
}

/// Fixed dataset, one ranking per classifier.
inline FeatureSet classifier_independent(const std::map<std::string, RankingTable>& per_classifier,
                                         std::size_t m = 22) {
    return detail::intersect_top_m(per_classifier, m, "classifier-independent");
}

inline FeatureSet fully_independent(const std::map<std::string, FeatureSet>& sets) {
    require(sets.size() >= 2, "fully_independent needs at least two sets");
    std::vector<FeatureSet> v;
    for (const auto& [_, s] : sets) v.push_back(s);
    auto out = common_features(v);
    out.provenance = "fully-independent: " + out.provenance;
    return out;
}

/// rankings[dataset][classifier]; intersects over datasets first.
inline FeatureSet fully_independent_classifier_first(
    const std::map<std::string, std::map<std::string, RankingTable>>& rankings, std::size_t m = 22) {
    std::map<std::string, std::map<std::string, RankingTable>> by_classifier;
    for (const auto& [d, row] : rankings)
        for (const auto& [c, t] : row) by_classifier[c][d] = t;
    std::map<std::string, FeatureSet> sets;
    for (const auto& [c, per_dataset] : by_classifier) sets[c] = language_independent(per_dataset, m);
    return fully_independent(sets);
}

/// rankings[dataset][classifier]; intersects over classifiers first.
inline FeatureSet fully_independent_dataset_first(
    const std::map<std::string, std::map<std::string, RankingTable>>& rankings, std::size_t m = 22) {
    std::map<std::string, FeatureSet> sets;
    for (const auto& [d, per_classifier] : rankings) sets[d] = classifier_independent(per_classifier, m);
    return fully_independent(sets);
}

} // namespace vocalfeat
