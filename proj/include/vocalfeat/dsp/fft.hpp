#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "../error.hpp"

namespace vocalfeat {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// In-place iterative radix-2 FFT; size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a, bool inverse = false) {
    const std::size_t n = a.size();
    require(n > 0 && (n & (n - 1)) == 0, "FFT size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(k));
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse)
        for (auto& v : a) v /= static_cast<double>(n);
}

/// Zero-padded FFT of a real frame to `nfft` points; returns bins 0..nfft/2.
inline std::vector<std::complex<double>> real_spectrum(const std::vector<double>& x, std::size_t nfft) {
    std::vector<std::complex<double>> buf(nfft);
    for (std::size_t i = 0; i < x.size() && i < nfft; ++i) buf[i] = x[i];
    fft(buf);
    buf.resize(nfft / 2 + 1);
    return buf;
}

inline std::vector<double> power_spectrum(const std::vector<double>& x, std::size_t nfft) {
    const auto spec = real_spectrum(x, nfft);
    std::vector<double> out(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k) out[k] = std::norm(spec[k]);
    return out;
}

} // namespace vocalfeat
