#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "../error.hpp"
#include "../matrix.hpp"
#include "../rng.hpp"
#include "standardize.hpp"

namespace vocalfeat {

/// One-vs-rest linear SVMs; row c of `weights` is class c, last column is the bias.
struct MsvmModel {
    Standardizer standardizer;
    Matrix weights;
    int n_classes = 0;
};

inline MsvmModel train_msvm(const Matrix& x, const std::vector<int>& y, int n_classes, double lambda,
                            std::size_t epochs, std::uint64_t seed) {
    require(lambda > 0.0, "svm lambda must be positive");
    require(y.size() == x.rows(), "label count differs from row count", ErrorCode::length_mismatch);
    std::vector<int> present(static_cast<std::size_t>(n_classes), 0);
    for (int c : y) present[static_cast<std::size_t>(c)] = 1;
    require(std::accumulate(present.begin(), present.end(), 0) >= 2, "M-SVM needs at least two classes",
            ErrorCode::single_class);

    MsvmModel m;
    m.n_classes = n_classes;
    m.standardizer = Standardizer::fit(x);
    const Matrix z = m.standardizer.transform(x);
    const std::size_t n = z.rows(), d = z.cols() + 1;
    m.weights = Matrix(static_cast<std::size_t>(n_classes), d, 0.0);
    const double radius = 1.0 / std::sqrt(lambda);

    for (int c = 0; c < n_classes; ++c) {
        if (!present[static_cast<std::size_t>(c)]) continue;
        auto w = m.weights.row(static_cast<std::size_t>(c));
        Rng rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(c + 1));
        std::vector<std::size_t> order(n);
        std::size_t t = 0;
        for (std::size_t e = 0; e < epochs; ++e) {
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            for (std::size_t i : order) {
                ++t;
                const double eta = 1.0 / (lambda * static_cast<double>(t));
                const double yi = y[i] == c ? 1.0 : -1.0;
                const auto row = z.row(i);
                double margin = w[d - 1];
                for (std::size_t j = 0; j + 1 < d; ++j) margin += w[j] * row[j];
                const double shrink = 1.0 - eta * lambda;
                for (double& v : w) v *= shrink;
                if (yi * margin < 1.0) {
                    for (std::size_t j = 0; j + 1 < d; ++j) w[j] += eta * yi * row[j];
                    w[d - 1] += eta * yi;
                }
                double norm = 0.0;
                for (double v : w) norm += v * v;
                norm = std::sqrt(norm);
                if (norm > radius)
                    for (double& v : w) v *= radius / norm;
            }
        }
    }
    return m;
}

inline std::vector<double> msvm_margins(const MsvmModel& m, std::span<const double> x) {
    require(x.size() + 1 == m.weights.cols(), "query dimension mismatch", ErrorCode::dimension_mismatch);
    const auto z = m.standardizer.transform(x);
    std::vector<double> out(static_cast<std::size_t>(m.n_classes));
    for (std::size_t c = 0; c < out.size(); ++c) {
        const auto w = m.weights.row(c);
        double acc = w[z.size()];
        for (std::size_t j = 0; j < z.size(); ++j) acc += w[j] * z[j];
        out[c] = acc;
    }
    return out;
}

/// Arg-max margin; ties go to the lowest class index.
inline int predict_msvm(const MsvmModel& m, std::span<const double> x) {
    const auto margins = msvm_margins(m, x);
    return static_cast<int>(std::max_element(margins.begin(), margins.end()) - margins.begin());
}

} // namespace vocalfeat
