#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "../error.hpp"
#include "../matrix.hpp"
#include "knn.hpp"
#include "standardize.hpp"

namespace vocalfeat {

struct EigenResult {
    std::vector<double> values;
    /// Column j is the eigenvector of values[j].
    Matrix vectors;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
inline EigenResult jacobi_eigen(Matrix a, std::size_t max_sweeps = 100) {
    const std::size_t n = a.rows();
    require(n == a.cols(), "Jacobi needs a square matrix", ErrorCode::dimension_mismatch);
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) (i == j ? scale : off) += a(i, j) * a(i, j);
        if (off <= 1e-30 * std::max(scale, 1e-300)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    EigenResult r;
    r.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.values[i] = a(i, i);
    r.vectors = v;
    return r;
}

struct PcaModel {
    std::vector<double> mean;
    /// Row j is component j.
    Matrix components;
    /// All covariance eigenvalues, descending.
    std::vector<double> eigenvalues;
    /// Set when some retained component carries no variance.
    bool rank_deficient = false;

    std::size_t dims() const { return components.rows(); }

    double explained_ratio() const {
        const double total = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
        if (total <= 0.0) return 0.0;
        double kept = 0.0;
        for (std::size_t j = 0; j < dims(); ++j) kept += eigenvalues[j];
        return kept / total;
    }

    std::vector<double> project(std::span<const double> x) const {
        std::vector<double> out(dims(), 0.0);
        for (std::size_t j = 0; j < dims(); ++j)
            for (std::size_t i = 0; i < x.size(); ++i) out[j] += components(j, i) * (x[i] - mean[i]);
        return out;
    }

    Matrix project(const Matrix& x) const {
        Matrix out(x.rows(), dims());
        for (std::size_t r = 0; r < x.rows(); ++r) {
            const auto p = project(x.row(r));
            std::copy(p.begin(), p.end(), out.row(r).begin());
        }
        return out;
    }

    std::vector<double> reconstruct(std::span<const double> z) const {
        std::vector<double> out(mean);
        for (std::size_t j = 0; j < dims(); ++j)
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += components(j, i) * z[j];
        return out;
    }
};

inline PcaModel pca_fit(const Matrix& x, std::size_t dims) {
    const std::size_t n = x.rows(), d = x.cols();
    require(dims >= 1 && dims <= d, "PCA dims must lie in [1, feature count]");
    require(n >= 1, "PCA on an empty matrix", ErrorCode::empty_data);
    PcaModel m;
    m.mean.assign(d, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) m.mean[c] += x(r, c);
    for (double& v : m.mean) v /= static_cast<double>(n);
    Matrix cov(d, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < d; ++i) {
            const double di = x(r, i) - m.mean[i];
            for (std::size_t j = i; j < d; ++j) cov(i, j) += di * (x(r, j) - m.mean[j]);
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            cov(i, j) /= static_cast<double>(n);
            cov(j, i) = cov(i, j);
        }
    const auto eig = jacobi_eigen(cov);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eig.values[a] > eig.values[b]; });
    m.components = Matrix(dims, d);
    for (std::size_t j = 0; j < d; ++j) m.eigenvalues.push_back(std::max(0.0, eig.values[order[j]]));
    for (std::size_t j = 0; j < dims; ++j) {
        std::size_t arg = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (std::abs(eig.vectors(i, order[j])) > std::abs(eig.vectors(arg, order[j])) + 1e-12) arg = i;
        const double sign = eig.vectors(arg, order[j]) < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < d; ++i) m.components(j, i) = sign * eig.vectors(i, order[j]);
    }
    const double top = m.eigenvalues.front();
    m.rank_deficient = m.eigenvalues[dims - 1] <= 1e-12 * std::max(top, 1e-300);
    return m;
}

/// Standardize, project onto leading components, then nearest neighbour.
struct PcaKnnModel {
    Standardizer standardizer;
    PcaModel pca;
    KnnModel knn;
};

inline PcaKnnModel train_pca_knn(const Matrix& x, const std::vector<int>& y, int n_classes, std::size_t dims,
                                 std::size_t k) {
    PcaKnnModel m;
    m.standardizer = Standardizer::fit(x);
    m.pca = pca_fit(m.standardizer.transform(x), dims);
    m.knn = train_knn(m.pca.project(m.standardizer.transform(x)), y, n_classes, k, false);
    return m;
}

inline int predict_pca_knn(const PcaKnnModel& m, std::span<const double> x) {
    require(x.size() == m.standardizer.mean.size(), "query dimension mismatch", ErrorCode::dimension_mismatch);
    const auto z = m.pca.project(m.standardizer.transform(x));
    return predict_knn(m.knn, z);
}

} // namespace vocalfeat
