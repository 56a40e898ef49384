#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "../audio/framing.hpp"
#include "../dsp/fft.hpp"
#include "../matrix.hpp"

namespace vocalfeat {

inline constexpr double kLogFloor = 1e-10;

inline double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
inline double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

/// Triangular mel filters over bins 0..nfft/2, spanning 0 Hz to sample_rate/2; rows are filters.
inline Matrix mel_filterbank(std::size_t n_filters, std::size_t nfft, int sample_rate) {
    const std::size_t bins = nfft / 2 + 1;
    const double mel_hi = hz_to_mel(sample_rate / 2.0);
    std::vector<double> edges(n_filters + 2);
    for (std::size_t i = 0; i < edges.size(); ++i)
        edges[i] = mel_to_hz(mel_hi * static_cast<double>(i) / static_cast<double>(n_filters + 1));
    Matrix w(n_filters, bins);
    for (std::size_t j = 0; j < n_filters; ++j) {
        const double lo = edges[j], mid = edges[j + 1], hi = edges[j + 2];
        for (std::size_t k = 0; k < bins; ++k) {
            const double f = static_cast<double>(k) * sample_rate / static_cast<double>(nfft);
            if (f > lo && f <= mid) w(j, k) = (f - lo) / (mid - lo);
            else if (f > mid && f < hi) w(j, k) = (hi - f) / (hi - mid);
        }
    }
    return w;
}

inline std::vector<double> log_filterbank_energies(const std::vector<double>& frame, const Matrix& bank,
                                                   std::size_t nfft) {
    const auto power = power_spectrum(frame, nfft);
    std::vector<double> out(bank.rows());
    for (std::size_t j = 0; j < bank.rows(); ++j) {
        double e = 0.0;
        for (std::size_t k = 0; k < power.size(); ++k) e += bank(j, k) * power[k];
        out[j] = std::log(std::max(e, kLogFloor));
    }
    return out;
}

/// Per-frame log mel energies, frames × n_filters.
inline Matrix extract_fbe(const FrameSequence& frames, std::size_t n_filters = 13) {
    require(frames.frame_len >= 2, "frame length must be at least 2");
    const std::size_t nfft = next_pow2(frames.frame_len);
    const auto bank = mel_filterbank(n_filters, nfft, frames.sample_rate);
    Matrix out(frames.size(), n_filters);
    for (std::size_t t = 0; t < frames.size(); ++t) {
        const auto e = log_filterbank_energies(frames.frames[t], bank, nfft);
        for (std::size_t j = 0; j < n_filters; ++j) out(t, j) = e[j];
    }
    return out;
}

/// Orthonormal DCT-II basis, row k is coefficient k.
inline Matrix dct_matrix(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            m(k, i) = scale * std::cos(std::numbers::pi * static_cast<double>(k) * (2.0 * static_cast<double>(i) + 1.0) /
                                       (2.0 * static_cast<double>(n)));
    }
    return m;
}

inline std::vector<double> dct2(const std::vector<double>& x) {
    const auto m = dct_matrix(x.size());
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t i = 0; i < x.size(); ++i) out[k] += m(k, i) * x[i];
    return out;
}

inline Matrix mfcc_from_fbe(const Matrix& fbe) {
    const auto m = dct_matrix(fbe.cols());
    Matrix out(fbe.rows(), fbe.cols());
    for (std::size_t t = 0; t < fbe.rows(); ++t)
        for (std::size_t k = 0; k < fbe.cols(); ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < fbe.cols(); ++i) acc += m(k, i) * fbe(t, i);
            out(t, k) = acc;
        }
    return out;
}

inline Matrix extract_mfcc(const FrameSequence& frames, std::size_t n_filters = 13) {
    return mfcc_from_fbe(extract_fbe(frames, n_filters));
}

} // namespace vocalfeat
