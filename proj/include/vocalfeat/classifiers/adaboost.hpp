#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../matrix.hpp"

namespace vocalfeat {

inline constexpr double kPerfectStumpAlpha = 10.0;

/// Predicts `polarity` when x[feature] > threshold, otherwise -polarity.
struct Stump {
    std::size_t feature = 0;
    double threshold = 0.0;
    int polarity = 1;
    double alpha = 0.0;

    int predict(std::span<const double> x) const { return x[feature] > threshold ? polarity : -polarity; }
};

struct AdaBoostModel {
    std::vector<Stump> stumps;
    /// Weighted error of each completed round.
    std::vector<double> round_errors;
    /// Running product of 2*sqrt(eps*(1-eps)) after each round.
    std::vector<double> error_bounds;
    /// Unweighted training error of the ensemble after each round.
    std::vector<double> training_errors;
    /// Sum of alpha per input column.
    std::vector<double> feature_weights;
    std::size_t dims = 0;
    std::string diagnostic;
};

/// Lowest weighted-error stump over all features and all midpoints between distinct values.
inline Stump best_stump(const Matrix& x, const std::vector<int>& y, const std::vector<double>& w, double& error) {
    const std::size_t n = x.rows();
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double pos_total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (y[i] > 0) pos_total += w[i];
    Stump best;
    error = 1.0;
    bool found = false;
    std::vector<std::size_t> order(n);
    for (std::size_t f = 0; f < x.cols(); ++f) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x(a, f) < x(b, f); });
        double left_pos = 0.0, left_neg = 0.0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const std::size_t i = order[k];
            (y[i] > 0 ? left_pos : left_neg) += w[i];
            const double a = x(i, f), b = x(order[k + 1], f);
            if (!(a < b)) continue;
            const double right_neg = (total - pos_total) - left_neg;
            const double err_pos = (left_pos + right_neg) / total;
            const double err_neg = 1.0 - err_pos;
            const double thr = a + (b - a) / 2.0;
            if (!found || err_pos < error) {
                best = {f, thr, 1, 0.0};
                error = err_pos;
                found = true;
            }
            if (err_neg < error) {
                best = {f, thr, -1, 0.0};
                error = err_neg;
            }
        }
    }
    if (!found) {
        error = 0.5;
        return best;
    }
    double wrong = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (best.predict(x.row(i)) != y[i]) wrong += w[i];
    error = wrong / total;
    return best;
}

/// Binary AdaBoost on labels in {-1, +1}.
inline AdaBoostModel train_adaboost(const Matrix& x, const std::vector<int>& y, std::size_t rounds) {
    require(rounds >= 1, "boosting needs at least one round");
    require(y.size() == x.rows(), "label count differs from row count", ErrorCode::length_mismatch);
    bool has_pos = false, has_neg = false;
    for (int v : y) {
        require(v == 1 || v == -1, "AdaBoost labels must be +1 or -1");
        (v > 0 ? has_pos : has_neg) = true;
    }
    require(has_pos && has_neg, "AdaBoost needs both classes", ErrorCode::single_class);

    const std::size_t n = x.rows();
    AdaBoostModel m;
    m.dims = x.cols();
    m.feature_weights.assign(x.cols(), 0.0);
    std::vector<double> w(n, 1.0 / static_cast<double>(n)), score(n, 0.0);
    double bound = 1.0;
    for (std::size_t t = 0; t < rounds; ++t) {
        double eps = 0.0;
        Stump s = best_stump(x, y, w, eps);
        if (eps >= 0.5) {
            m.diagnostic = "round " + std::to_string(t + 1) + ": best stump has weighted error " +
                           std::to_string(eps) + " >= 0.5";
            if (m.stumps.empty()) throw Error(ErrorCode::training_failed, m.diagnostic);
            break;
        }
        const bool perfect = eps <= 0.0;
        s.alpha = perfect ? kPerfectStumpAlpha : 0.5 * std::log((1.0 - eps) / eps);
        m.stumps.push_back(s);
        m.round_errors.push_back(eps);
        bound *= 2.0 * std::sqrt(std::max(0.0, eps * (1.0 - eps)));
        m.error_bounds.push_back(bound);
        m.feature_weights[s.feature] += s.alpha;

        double wsum = 0.0;
        std::size_t wrong = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = s.predict(x.row(i));
            score[i] += s.alpha * h;
            w[i] *= std::exp(-s.alpha * y[i] * h);
            wsum += w[i];
            if ((score[i] > 0.0 ? 1 : -1) != y[i]) ++wrong;
        }
        m.training_errors.push_back(static_cast<double>(wrong) / static_cast<double>(n));
        if (perfect) break;
        for (double& v : w) v /= wsum;
    }
    return m;
}

inline double adaboost_score(const AdaBoostModel& m, std::span<const double> x) {
    require(x.size() == m.dims, "query dimension mismatch", ErrorCode::dimension_mismatch);
    double acc = 0.0;
    for (const auto& s : m.stumps) acc += s.alpha * s.predict(x);
    return acc;
}

/// +1 when the weighted vote is positive, otherwise -1.
inline int predict_adaboost(const AdaBoostModel& m, std::span<const double> x) {
    return adaboost_score(m, x) > 0.0 ? 1 : -1;
}

} // namespace vocalfeat
