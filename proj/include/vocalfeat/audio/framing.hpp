#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "../error.hpp"
#include "signal.hpp"

namespace vocalfeat {

enum class Window { rectangular, hamming };

/// Symmetric window of length n.
inline std::vector<double> make_window(Window w, std::size_t n) {
    std::vector<double> out(n, 1.0);
    if (w == Window::hamming && n > 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                             static_cast<double>(n - 1));
    }
    return out;
}

struct FrameSequence {
    std::vector<std::vector<double>> frames;
    std::size_t frame_len = 0;
    std::size_t hop = 0;
    int sample_rate = 0;
    /// Set when the signal was shorter than one frame and got zero-padded.
    bool padded = false;

    std::size_t size() const noexcept { return frames.size(); }
};

inline std::size_t ms_to_samples(double ms, int sample_rate) {
    return static_cast<std::size_t>(std::lround(ms * sample_rate / 1000.0));
}

inline FrameSequence frame_samples(const std::vector<double>& x, int sample_rate, std::size_t frame_len,
                                   std::size_t hop, Window window) {
    require(hop > 0 && frame_len >= hop, "frame length must be >= hop > 0");
    const auto w = make_window(window, frame_len);
    FrameSequence fs;
    fs.frame_len = frame_len;
    fs.hop = hop;
    fs.sample_rate = sample_rate;
    if (x.size() < frame_len) {
        std::vector<double> f(frame_len, 0.0);
        for (std::size_t i = 0; i < x.size(); ++i) f[i] = x[i] * w[i];
        fs.frames.push_back(std::move(f));
        fs.padded = true;
        return fs;
    }
    const std::size_t count = (x.size() - frame_len) / hop + 1;
    fs.frames.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<double> f(frame_len);
        for (std::size_t i = 0; i < frame_len; ++i) f[i] = x[k * hop + i] * w[i];
        fs.frames.push_back(std::move(f));
    }
    return fs;
}

inline FrameSequence frame_signal(const Signal& s, double frame_ms, double hop_ms,
                                  Window window = Window::hamming) {
    require(hop_ms > 0 && frame_ms >= hop_ms, "frame_ms must be >= hop_ms > 0");
    const std::size_t len = std::max<std::size_t>(1, ms_to_samples(frame_ms, s.sample_rate()));
    const std::size_t hop = std::max<std::size_t>(1, ms_to_samples(hop_ms, s.sample_rate()));
    return frame_samples(s.samples(), s.sample_rate(), len, std::min(hop, len), window);
}

} // namespace vocalfeat
