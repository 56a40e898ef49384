#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "../data/dataset.hpp"
#include "entropy.hpp"

namespace vocalfeat {

/// Correlation-based merit of a feature subset, using SU as the correlation measure.
inline double cfs_merit(const std::vector<int>& subset, const LabeledDataset& ds, int n_bins = kDefaultBins) {
    require(!subset.empty(), "CFS subset is empty", ErrorCode::empty_subset);
    const auto sub = select_features(ds, subset);
    std::vector<DiscreteColumn> cols;
    for (std::size_t c = 0; c < sub.dims(); ++c) cols.push_back(discretize(sub.features.column(c), n_bins));
    const double k = static_cast<double>(cols.size());
    double rcf = 0.0;
    for (const auto& c : cols) rcf += symmetrical_uncertainty(c, ds.labels);
    rcf /= k;
    double rff = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            rff += symmetrical_uncertainty(cols[i].bins, cols[j].bins);
            ++pairs;
        }
    if (pairs > 0) rff /= static_cast<double>(pairs);
    const double denom = std::sqrt(k + k * (k - 1.0) * rff);
    return denom > 0.0 ? k * rcf / denom : 0.0;
}

} // namespace vocalfeat
