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

/// One logistic hidden layer followed by a softmax output layer.
struct MlpParams {
    Matrix w1;               // hidden x inputs
    std::vector<double> b1;  // hidden
    Matrix w2;               // classes x hidden
    std::vector<double> b2;  // classes

    std::vector<double> flatten() const {
        std::vector<double> out(w1.data());
        out.insert(out.end(), b1.begin(), b1.end());
        out.insert(out.end(), w2.data().begin(), w2.data().end());
        out.insert(out.end(), b2.begin(), b2.end());
        return out;
    }

    void assign(const std::vector<double>& flat) {
        require(flat.size() == size(), "parameter vector size mismatch", ErrorCode::dimension_mismatch);
        auto it = flat.begin();
        auto take = [&](std::vector<double>& dst) {
            std::copy_n(it, dst.size(), dst.begin());
            it += static_cast<std::ptrdiff_t>(dst.size());
        };
        take(w1.data());
        take(b1);
        take(w2.data());
        take(b2);
    }

    std::size_t size() const { return w1.data().size() + b1.size() + w2.data().size() + b2.size(); }
};

inline MlpParams mlp_init(std::size_t inputs, std::size_t hidden, std::size_t classes, std::uint64_t seed) {
    Rng rng(seed);
    MlpParams p{Matrix(hidden, inputs), std::vector<double>(hidden), Matrix(classes, hidden),
                std::vector<double>(classes)};
    for (double& v : p.w1.data()) v = rng.uniform(-0.5, 0.5);
    for (double& v : p.b1) v = rng.uniform(-0.5, 0.5);
    for (double& v : p.w2.data()) v = rng.uniform(-0.5, 0.5);
    for (double& v : p.b2) v = rng.uniform(-0.5, 0.5);
    return p;
}

namespace detail {

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

inline void mlp_forward(const MlpParams& p, std::span<const double> x, std::vector<double>& h,
                        std::vector<double>& prob) {
    const std::size_t nh = p.b1.size(), nc = p.b2.size();
    h.assign(nh, 0.0);
    for (std::size_t j = 0; j < nh; ++j) {
        double a = p.b1[j];
        const auto w = p.w1.row(j);
        for (std::size_t i = 0; i < x.size(); ++i) a += w[i] * x[i];
        h[j] = logistic(a);
    }
    prob.assign(nc, 0.0);
    for (std::size_t c = 0; c < nc; ++c) {
        double a = p.b2[c];
        const auto w = p.w2.row(c);
        for (std::size_t j = 0; j < nh; ++j) a += w[j] * h[j];
        prob[c] = a;
    }
    const double mx = *std::max_element(prob.begin(), prob.end());
    double sum = 0.0;
    for (double& v : prob) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : prob) v /= sum;
}

} // namespace detail

/// Mean cross-entropy over the rows of x.
inline double mlp_loss(const MlpParams& p, const Matrix& x, const std::vector<int>& y) {
    std::vector<double> h, prob;
    double loss = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
        detail::mlp_forward(p, x.row(r), h, prob);
        loss -= std::log(std::max(prob[static_cast<std::size_t>(y[r])], 1e-300));
    }
    return loss / static_cast<double>(x.rows());
}

/// Gradient of mlp_loss, same layout as MlpParams.
inline MlpParams mlp_gradient(const MlpParams& p, const Matrix& x, const std::vector<int>& y) {
    const std::size_t nh = p.b1.size(), nc = p.b2.size(), ni = p.w1.cols();
    MlpParams g{Matrix(nh, ni), std::vector<double>(nh, 0.0), Matrix(nc, nh), std::vector<double>(nc, 0.0)};
    std::vector<double> h, prob, dh(nh);
    const double inv_n = 1.0 / static_cast<double>(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const auto row = x.row(r);
        detail::mlp_forward(p, row, h, prob);
        prob[static_cast<std::size_t>(y[r])] -= 1.0;
        std::fill(dh.begin(), dh.end(), 0.0);
        for (std::size_t c = 0; c < nc; ++c) {
            const double delta = prob[c] * inv_n;
            g.b2[c] += delta;
            for (std::size_t j = 0; j < nh; ++j) {
                g.w2(c, j) += delta * h[j];
                dh[j] += delta * p.w2(c, j);
            }
        }
        for (std::size_t j = 0; j < nh; ++j) {
            const double da = dh[j] * h[j] * (1.0 - h[j]);
            g.b1[j] += da;
            for (std::size_t i = 0; i < ni; ++i) g.w1(j, i) += da * row[i];
        }
    }
    return g;
}

struct MlpModel {
    Standardizer standardizer;
    MlpParams params;
    int n_classes = 0;
    std::vector<double> loss_history;
};

inline MlpModel train_mlp(const Matrix& x, const std::vector<int>& y, int n_classes, std::size_t hidden,
                          double lr, std::size_t epochs, std::uint64_t seed) {
    require(hidden >= 1, "hidden layer size must be positive");
    require(lr > 0.0, "learning rate must be positive");
    require(y.size() == x.rows(), "label count differs from row count", ErrorCode::length_mismatch);
    std::vector<int> present(static_cast<std::size_t>(n_classes), 0);
    for (int c : y) present[static_cast<std::size_t>(c)] = 1;
    require(std::accumulate(present.begin(), present.end(), 0) >= 2, "MLP needs at least two classes",
            ErrorCode::single_class);
    MlpModel m;
    m.n_classes = n_classes;
    m.standardizer = Standardizer::fit(x);
    const Matrix z = m.standardizer.transform(x);
    m.params = mlp_init(z.cols(), hidden, static_cast<std::size_t>(n_classes), seed);
    m.loss_history.reserve(epochs + 1);
    for (std::size_t e = 0; e < epochs; ++e) {
        m.loss_history.push_back(mlp_loss(m.params, z, y));
        const MlpParams g = mlp_gradient(m.params, z, y);
        auto flat = m.params.flatten();
        const auto gf = g.flatten();
        for (std::size_t i = 0; i < flat.size(); ++i) flat[i] -= lr * gf[i];
        m.params.assign(flat);
    }
    m.loss_history.push_back(mlp_loss(m.params, z, y));
    return m;
}

inline std::vector<double> mlp_probabilities(const MlpModel& m, std::span<const double> x) {
    require(x.size() == m.params.w1.cols(), "query dimension mismatch", ErrorCode::dimension_mismatch);
    const auto z = m.standardizer.transform(x);
    std::vector<double> h, prob;
    detail::mlp_forward(m.params, z, h, prob);
    return prob;
}

inline int predict_mlp(const MlpModel& m, std::span<const double> x) {
    const auto prob = mlp_probabilities(m, x);
    return static_cast<int>(std::max_element(prob.begin(), prob.end()) - prob.begin());
}

} // namespace vocalfeat
