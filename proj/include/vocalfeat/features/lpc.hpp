#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "../audio/framing.hpp"
#include "stats.hpp"

namespace vocalfeat {

inline constexpr double kMaxFormantBandwidthHz = 400.0;
inline constexpr double kFormantEdgeGuardHz = 50.0;

/// Levinson-Durbin on autocorrelation r[0..p]; returns a[0..p] with a[0] = 1, or empty when singular.
inline std::vector<double> levinson_durbin(const std::vector<double>& r, std::size_t order) {
    if (r.size() <= order || r[0] <= 0.0) return {};
    std::vector<double> a(order + 1, 0.0), tmp(order + 1);
    a[0] = 1.0;
    double err = r[0];
    for (std::size_t i = 1; i <= order; ++i) {
        double acc = r[i];
        for (std::size_t j = 1; j < i; ++j) acc += a[j] * r[i - j];
        const double k = -acc / err;
        tmp = a;
        for (std::size_t j = 1; j < i; ++j) a[j] = tmp[j] + k * tmp[i - j];
        a[i] = k;
        err *= 1.0 - k * k;
        if (err <= 0.0) return {};
    }
    return a;
}

inline std::vector<double> autocorrelation(const std::vector<double>& x, std::size_t max_lag) {
    std::vector<double> r(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag && lag < x.size(); ++lag)
        for (std::size_t i = lag; i < x.size(); ++i) r[lag] += x[i] * x[i - lag];
    return r;
}

inline std::size_t lpc_order(int sample_rate) { return 2 + static_cast<std::size_t>(sample_rate / 1000); }

/// Candidate formant frequencies of one frame, ascending.
inline std::vector<double> frame_formants(const std::vector<double>& frame, int sample_rate) {
    const std::size_t p = lpc_order(sample_rate);
    const auto a = levinson_durbin(autocorrelation(frame, p), p);
    if (a.empty()) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t j = 0; j < p; ++j) companion(0, static_cast<Eigen::Index>(j)) = -a[j + 1];
    for (std::size_t i = 1; i < p; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) return {};
    std::vector<double> out;
    const double fs = sample_rate;
    for (const auto& z : solver.eigenvalues()) {
        if (z.imag() <= 0.0) continue;
        const double mag = std::abs(z);
        if (mag <= 0.0) continue;
        const double freq = std::atan2(z.imag(), z.real()) * fs / (2.0 * std::numbers::pi);
        const double bw = -std::log(mag) * fs / std::numbers::pi;
        if (bw < kMaxFormantBandwidthHz && freq > kFormantEdgeGuardHz && freq < fs / 2.0 - kFormantEdgeGuardHz)
            out.push_back(freq);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// f_k holds the k-th root of every frame with at least k valid roots.
/// Only frames with three or more roots enter `complete` and the x1..x20 statistics.
struct FormantTracks {
    std::vector<double> f1, f2, f3;
    std::vector<std::array<double, 3>> complete;
    std::size_t size() const noexcept { return f1.size(); }
};

inline FormantTracks extract_formants(const FrameSequence& frames) {
    FormantTracks t;
    for (const auto& f : frames.frames) {
        const auto roots = frame_formants(f, frames.sample_rate);
        if (roots.size() >= 1) t.f1.push_back(roots[0]);
        if (roots.size() >= 2) t.f2.push_back(roots[1]);
        if (roots.size() >= 3) {
            t.f3.push_back(roots[2]);
            t.complete.push_back({roots[0], roots[1], roots[2]});
        }
    }
    return t;
}

/// x1..x20 ordering: max, min, std, mean, median of F1..F3, then the cross-formant means.
inline std::array<double, 20> formant_statistics(const FormantTracks& t) {
    std::array<double, 20> out{};
    if (t.complete.empty()) return out;
    for (std::size_t f = 0; f < 3; ++f) {
        std::vector<double> v;
        for (const auto& frame : t.complete) v.push_back(frame[f]);
        out[0 + f] = *std::max_element(v.begin(), v.end());
        out[3 + f] = *std::min_element(v.begin(), v.end());
        out[6 + f] = std_of(v);
        out[9 + f] = mean_of(v);
        out[12 + f] = median_of(v);
    }
    for (int s = 0; s < 5; ++s) out[15 + s] = (out[s * 3] + out[s * 3 + 1] + out[s * 3 + 2]) / 3.0;
    return out;
}

} // namespace vocalfeat
