#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "../data/dataset.hpp"
#include "../rng.hpp"

namespace vocalfeat {

struct ReliefConfig {
    std::size_t k = 10;
    /// 0 means one pass over every row.
    std::size_t iters = 0;
    std::uint64_t seed = 0;
    /// Exhaustive walks rows in index order; otherwise rows are drawn at random.
    bool exhaustive = true;
};

inline std::vector<double> relieff(const LabeledDataset& ds, const ReliefConfig& cfg = {}) {
    const std::size_t n = ds.size(), d = ds.dims();
    require(n > 0, "ReliefF on an empty dataset", ErrorCode::empty_data);
    require(cfg.k >= 1, "ReliefF needs k >= 1");
    const auto counts = ds.class_counts();
    for (std::size_t c = 0; c < counts.size(); ++c)
        require(counts[c] == 0 || counts[c] >= cfg.k + 1,
                "class '" + ds.class_names[c] + "' has fewer than k+1 samples", ErrorCode::too_few_samples);
    std::vector<double> w(d, 0.0);
    const std::size_t iters = cfg.iters == 0 && cfg.exhaustive ? n : cfg.iters;
    if (iters == 0) return w;

    std::vector<double> lo(d), range(d);
    for (std::size_t f = 0; f < d; ++f) {
        const auto col = ds.features.column(f);
        const auto [a, b] = std::minmax_element(col.begin(), col.end());
        lo[f] = *a;
        range[f] = *b - *a;
    }
    auto diff = [&](std::size_t f, std::size_t a, std::size_t b) {
        return range[f] > 0.0 ? std::abs(ds.features(a, f) - ds.features(b, f)) / range[f] : 0.0;
    };
    auto distance = [&](std::size_t a, std::size_t b) {
        double acc = 0.0;
        for (std::size_t f = 0; f < d; ++f) acc += diff(f, a, b);
        return acc;
    };
    auto identical = [&](std::size_t a, std::size_t b) {
        for (std::size_t f = 0; f < d; ++f)
            if (ds.features(a, f) != ds.features(b, f)) return false;
        return true;
    };
    std::vector<double> prior(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) prior[c] = static_cast<double>(counts[c]) / static_cast<double>(n);

    Rng rng(cfg.seed);
    const double m = static_cast<double>(iters);
    for (std::size_t it = 0; it < iters; ++it) {
        const std::size_t i = cfg.exhaustive ? it % n : static_cast<std::size_t>(rng.below(n));
        const auto yi = static_cast<std::size_t>(ds.labels[i]);
        std::vector<std::vector<std::pair<double, std::size_t>>> by_class(counts.size());
        for (std::size_t j = 0; j < n; ++j) {
            const auto yj = static_cast<std::size_t>(ds.labels[j]);
            if (yj == yi && (j == i || identical(i, j))) continue;
            by_class[yj].emplace_back(distance(i, j), j);
        }
        for (std::size_t c = 0; c < by_class.size(); ++c) {
            auto& cand = by_class[c];
            if (cand.empty()) continue;
            const std::size_t take = std::min(cfg.k, cand.size());
            std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(take), cand.end());
            const double scale = c == yi ? -1.0 / (m * static_cast<double>(take))
                                         : prior[c] / (1.0 - prior[yi]) / (m * static_cast<double>(take));
            for (std::size_t t = 0; t < take; ++t)
                for (std::size_t f = 0; f < d; ++f) w[f] += scale * diff(f, i, cand[t].second);
        }
    }
    return w;
}

} // namespace vocalfeat
