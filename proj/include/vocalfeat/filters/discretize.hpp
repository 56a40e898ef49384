#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "../error.hpp"

namespace vocalfeat {

inline constexpr int kDefaultBins = 10;

struct DiscreteColumn {
    std::vector<int> bins;
    int n_bins = 0;
    std::vector<double> edges;
};

/// Equal-width bins over [min, max]; the maximum lands in the last bin.
inline DiscreteColumn discretize(const std::vector<double>& column, int n_bins = kDefaultBins) {
    require(n_bins >= 2, "discretize needs at least two bins");
    require(!column.empty(), "discretize of an empty column", ErrorCode::empty_data);
    const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
    const double lo = *lo_it, hi = *hi_it;
    DiscreteColumn out;
    out.n_bins = n_bins;
    out.bins.assign(column.size(), 0);
    out.edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double width = hi > lo ? (hi - lo) / n_bins : 1.0 / n_bins;
    for (int i = 0; i <= n_bins; ++i) out.edges[static_cast<std::size_t>(i)] = lo + width * i;
    if (hi > lo) {
        out.edges.back() = hi;
        for (std::size_t i = 0; i < column.size(); ++i) {
            const int b = static_cast<int>(std::floor((column[i] - lo) / width));
            out.bins[i] = std::clamp(b, 0, n_bins - 1);
        }
    }
    return out;
}

} // namespace vocalfeat
