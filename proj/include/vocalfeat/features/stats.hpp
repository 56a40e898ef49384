#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "../audio/signal.hpp"
#include "../error.hpp"

namespace vocalfeat {

inline constexpr double kIntensityFloorDb = -120.0;

inline double mean_of(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc / static_cast<double>(x.size());
}

/// Population variance.
inline double variance_of(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    const double m = mean_of(x);
    double acc = 0.0;
    for (double v : x) acc += (v - m) * (v - m);
    return acc / static_cast<double>(x.size());
}

inline double std_of(const std::vector<double>& x) { return std::sqrt(variance_of(x)); }

/// Linear-interpolated quantile, q in [0, 1].
inline double quantile_of(std::vector<double> x, double q) {
    require(!x.empty(), "quantile of empty sequence");
    std::sort(x.begin(), x.end());
    const double pos = q * static_cast<double>(x.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, x.size() - 1);
    return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

inline double median_of(const std::vector<double>& x) { return quantile_of(x, 0.5); }

inline double extract_intensity(const Signal& s) {
    double acc = 0.0;
    for (double v : s.samples()) acc += v * v;
    const double rms = std::sqrt(acc / static_cast<double>(s.size()));
    if (rms <= 0.0) return kIntensityFloorDb;
    return std::max(kIntensityFloorDb, 20.0 * std::log10(rms));
}

struct ZcrResult {
    double zcr = 0.0;
    double zcr_density = 0.0;
};

inline ZcrResult extract_zcr(const Signal& s) {
    require(s.size() >= 2, "ZCR needs at least two samples");
    const auto& x = s.samples();
    std::size_t changes = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if ((x[i - 1] >= 0.0) != (x[i] >= 0.0)) ++changes;
    return {static_cast<double>(changes) / static_cast<double>(x.size() - 1),
            static_cast<double>(changes) / s.duration()};
}

/// Pearson correlation of x[0..n-2] with x[1..n-1]; 1.0 when either side is constant.
inline double lag1_autocorrelation(const std::vector<double>& x) {
    if (x.size() < 3) return 1.0;
    const std::size_t n = x.size() - 1;
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += x[i];
        mb += x[i + 1];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = x[i] - ma, b = x[i + 1] - mb;
        sab += a * b;
        saa += a * a;
        sbb += b * b;
    }
    if (saa <= 0.0 || sbb <= 0.0) return 1.0;
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

struct SignalStatistics {
    double min = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double max = 0.0;
    double std = 0.0;
    double percentile = 0.0;
    double autocorrelation = 0.0;
};

inline SignalStatistics signal_statistics(const Signal& s, double percentile_q = 0.9) {
    require(s.size() >= 2, "statistics need at least two samples");
    const auto& x = s.samples();
    SignalStatistics st;
    st.min = *std::min_element(x.begin(), x.end());
    st.max = *std::max_element(x.begin(), x.end());
    st.mean = mean_of(x);
    st.variance = variance_of(x);
    st.std = std::sqrt(st.variance);
    std::vector<double> mag(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mag[i] = std::abs(x[i]);
    st.percentile = quantile_of(std::move(mag), percentile_q);
    st.autocorrelation = lag1_autocorrelation(x);
    return st;
}

} // namespace vocalfeat
