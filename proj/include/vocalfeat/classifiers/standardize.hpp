#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "../matrix.hpp"

namespace vocalfeat {

/// Z-score statistics fitted on training rows; zero-variance columns keep scale 1.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    static Standardizer fit(const Matrix& x) {
        Standardizer s;
        const std::size_t n = x.rows(), d = x.cols();
        s.mean.assign(d, 0.0);
        s.scale.assign(d, 1.0);
        if (n == 0) return s;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < d; ++c) s.mean[c] += x(r, c);
        for (double& m : s.mean) m /= static_cast<double>(n);
        std::vector<double> var(d, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < d; ++c) var[c] += (x(r, c) - s.mean[c]) * (x(r, c) - s.mean[c]);
        for (std::size_t c = 0; c < d; ++c) {
            const double sd = std::sqrt(var[c] / static_cast<double>(n));
            s.scale[c] = sd > 0.0 ? sd : 1.0;
        }
        return s;
    }

    std::vector<double> transform(std::span<const double> x) const {
        std::vector<double> out(x.size());
        for (std::size_t c = 0; c < x.size(); ++c) out[c] = (x[c] - mean[c]) / scale[c];
        return out;
    }

    Matrix transform(const Matrix& x) const {
        Matrix out(x.rows(), x.cols());
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = (x(r, c) - mean[c]) / scale[c];
        return out;
    }
};

} // namespace vocalfeat
