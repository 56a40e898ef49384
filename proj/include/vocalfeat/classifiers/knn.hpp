#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "../matrix.hpp"
#include "standardize.hpp"

namespace vocalfeat {

struct KnnModel {
    std::size_t k = 1;
    Standardizer standardizer;
    /// Standardized training rows.
    Matrix points;
    std::vector<int> labels;
    int n_classes = 0;
};

inline KnnModel train_knn(const Matrix& x, const std::vector<int>& y, int n_classes, std::size_t k = 1,
                          bool standardize = true) {
    require(k >= 1, "k must be positive");
    require(k <= x.rows(), "k exceeds the number of training samples", ErrorCode::too_few_samples);
    require(y.size() == x.rows(), "label count differs from row count", ErrorCode::length_mismatch);
    KnnModel m;
    m.k = k;
    m.standardizer = standardize ? Standardizer::fit(x) : Standardizer{std::vector<double>(x.cols(), 0.0),
                                                                       std::vector<double>(x.cols(), 1.0)};
    m.points = m.standardizer.transform(x);
    m.labels = y;
    m.n_classes = n_classes;
    return m;
}

/// Sorted (squared distance, index) of the k nearest standardized training rows.
inline std::vector<std::pair<double, std::size_t>> knn_neighbors(const KnnModel& m, std::span<const double> x) {
    require(x.size() == m.points.cols(), "query dimension mismatch", ErrorCode::dimension_mismatch);
    const auto q = m.standardizer.transform(x);
    std::vector<std::pair<double, std::size_t>> d(m.points.rows());
    for (std::size_t r = 0; r < m.points.rows(); ++r) {
        double acc = 0.0;
        const auto row = m.points.row(r);
        for (std::size_t c = 0; c < q.size(); ++c) acc += (row[c] - q[c]) * (row[c] - q[c]);
        d[r] = {acc, r};
    }
    const std::size_t k = std::min(m.k, d.size());
    std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
    d.resize(k);
    return d;
}

inline int predict_knn(const KnnModel& m, std::span<const double> x) {
    const auto nn = knn_neighbors(m, x);
    std::vector<std::size_t> votes(static_cast<std::size_t>(m.n_classes), 0);
    for (const auto& [_, idx] : nn) ++votes[static_cast<std::size_t>(m.labels[idx])];
    const std::size_t top = *std::max_element(votes.begin(), votes.end());
    for (const auto& [_, idx] : nn) {
        const int c = m.labels[idx];
        if (votes[static_cast<std::size_t>(c)] == top) return c;
    }
    return m.labels[nn.front().second];
}

} // namespace vocalfeat
