#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "../audio/framing.hpp"
#include "../dsp/fft.hpp"
#include "../error.hpp"
#include "stats.hpp"

namespace vocalfeat {

inline constexpr double kHnrFloorDb = -20.0;
inline constexpr double kHnrCeilDb = 40.0;

struct PitchConfig {
    double min_hz = 50.0;
    double max_hz = 500.0;
    double voicing_threshold = 0.3;
};

struct FramePeriodicity {
    bool voiced = false;
    double f0 = 0.0;
    /// Normalized autocorrelation at the selected peak.
    double r = 0.0;
};

/// Normalized cross-correlation of a frame with itself at lags 0..max_lag.
inline std::vector<double> nccf(const std::vector<double>& x, std::size_t max_lag) {
    const std::size_t n = x.size();
    max_lag = std::min(max_lag, n - 1);
    const std::size_t nfft = next_pow2(2 * n);
    std::vector<std::complex<double>> buf(nfft);
    for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
    fft(buf);
    for (auto& v : buf) v = std::norm(v);
    fft(buf, true);

    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i] * x[i];

    std::vector<double> out(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        const double e1 = prefix[n - lag];
        const double e2 = prefix[n] - prefix[lag];
        const double denom = std::sqrt(e1 * e2);
        out[lag] = denom > 1e-300 ? buf[lag].real() / denom : 0.0;
    }
    return out;
}

inline FramePeriodicity analyze_frame(const std::vector<double>& frame, int sample_rate,
                                      const PitchConfig& cfg) {
    FramePeriodicity out;
    const std::size_t n = frame.size();
    const auto min_lag = static_cast<std::size_t>(std::max(2.0, std::floor(sample_rate / cfg.max_hz)));
    const std::size_t max_lag =
        std::min(static_cast<std::size_t>(std::ceil(sample_rate / cfg.min_hz)), 2 * n / 3);
    if (max_lag <= min_lag + 1) return out;

    const auto r = nccf(frame, max_lag + 1);
    if (r.size() < max_lag + 2) return out;
    double best = -1.0;
    std::vector<std::size_t> peaks;
    for (std::size_t lag = min_lag; lag <= max_lag; ++lag) {
        if (r[lag] >= r[lag - 1] && r[lag] > r[lag + 1]) {
            peaks.push_back(lag);
            best = std::max(best, r[lag]);
        }
    }
    if (peaks.empty() || best < cfg.voicing_threshold) return out;
    std::size_t chosen = peaks.front();
    for (std::size_t lag : peaks) {
        if (r[lag] >= 0.95 * best) {
            chosen = lag;
            break;
        }
    }
    const double ym = r[chosen - 1], y0 = r[chosen], yp = r[chosen + 1];
    const double curv = ym - 2.0 * y0 + yp;
    double shift = 0.0, peak = y0;
    if (curv < 0.0) {
        shift = std::clamp(0.5 * (ym - yp) / curv, -0.5, 0.5);
        peak = y0 - 0.25 * (ym - yp) * shift;
    }
    out.voiced = true;
    out.f0 = sample_rate / (static_cast<double>(chosen) + shift);
    out.r = std::clamp(peak, 0.0, 1.0);
    return out;
}

inline std::vector<FramePeriodicity> analyze_periodicity(const FrameSequence& frames,
                                                         const PitchConfig& cfg = {}) {
    require(frames.sample_rate >= 2.0 * cfg.max_hz, "sample rate below twice the pitch search ceiling");
    std::vector<FramePeriodicity> out;
    out.reserve(frames.size());
    for (const auto& f : frames.frames) out.push_back(analyze_frame(f, frames.sample_rate, cfg));
    return out;
}

/// Median f0 over voiced frames, 0 when nothing is voiced.
inline double extract_pitch(const FrameSequence& frames, const PitchConfig& cfg = {}) {
    std::vector<double> f0;
    for (const auto& p : analyze_periodicity(frames, cfg))
        if (p.voiced) f0.push_back(p.f0);
    return f0.empty() ? 0.0 : median_of(f0);
}

inline double hnr_from_r(double r) {
    if (r <= 0.0) return kHnrFloorDb;
    if (r >= 1.0) return kHnrCeilDb;
    return std::clamp(10.0 * std::log10(r / (1.0 - r)), kHnrFloorDb, kHnrCeilDb);
}

inline double extract_hnr(const FrameSequence& frames, const PitchConfig& cfg = {}) {
    std::vector<double> db;
    for (const auto& p : analyze_periodicity(frames, cfg))
        if (p.voiced) db.push_back(hnr_from_r(p.r));
    return db.empty() ? kHnrFloorDb : mean_of(db);
}

/// Rectangular frames spanning three periods of the lowest searched pitch.
inline FrameSequence pitch_frames(const Signal& s, double hop_ms, const PitchConfig& cfg = {}) {
    const double frame_ms = 3000.0 / cfg.min_hz;
    return frame_signal(s, frame_ms, std::min(hop_ms, frame_ms), Window::rectangular);
}

} // namespace vocalfeat
