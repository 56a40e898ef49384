#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "../audio/framing.hpp"
#include "../audio/signal.hpp"
#include "../audio/wav.hpp"
#include "../dsp/fft.hpp"
#include "../features/mel.hpp"
#include "../matrix.hpp"

namespace vocalfeat {

/// STFT magnitudes, time frames x frequency bins (fft_size/2 + 1).
struct Spectrogram {
    Matrix magnitudes;
    double frame_ms = 0.0;
    double hop_ms = 0.0;
    int sample_rate = 0;
    std::size_t fft_size = 0;

    std::size_t frames() const { return magnitudes.rows(); }
    std::size_t bins() const { return magnitudes.cols(); }

    /// Natural log of each magnitude with a 1e-10 floor.
    Matrix log_compressed() const {
        Matrix out(magnitudes.rows(), magnitudes.cols());
        for (std::size_t i = 0; i < out.data().size(); ++i)
            out.data()[i] = std::log(std::max(magnitudes.data()[i], kLogFloor));
        return out;
    }

    double bin_hz(std::size_t k) const { return static_cast<double>(k) * sample_rate / static_cast<double>(fft_size); }
};

inline Spectrogram spectrogram(const Signal& s, double frame_ms = 25.0, double hop_ms = 10.0) {
    const auto frames = frame_signal(s, frame_ms, hop_ms, Window::hamming);
    Spectrogram sp;
    sp.frame_ms = frame_ms;
    sp.hop_ms = hop_ms;
    sp.sample_rate = s.sample_rate();
    sp.fft_size = next_pow2(frames.frame_len);
    sp.magnitudes = Matrix(frames.size(), sp.fft_size / 2 + 1);
    for (std::size_t t = 0; t < frames.size(); ++t) {
        const auto spec = real_spectrum(frames.frames[t], sp.fft_size);
        for (std::size_t k = 0; k < spec.size(); ++k) sp.magnitudes(t, k) = std::abs(spec[k]);
    }
    return sp;
}

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

/// Bilinear resize with aligned corners.
inline Matrix resize_bilinear(const Matrix& src, std::size_t out_rows, std::size_t out_cols) {
    require(out_rows > 0 && out_cols > 0 && !src.empty(), "resize needs non-empty input and output");
    Matrix out(out_rows, out_cols);
    auto coord = [](std::size_t i, std::size_t n_out, std::size_t n_in) {
        return n_out > 1 ? static_cast<double>(i) * static_cast<double>(n_in - 1) / static_cast<double>(n_out - 1) : 0.0;
    };
    for (std::size_t r = 0; r < out_rows; ++r) {
        const double y = coord(r, out_rows, src.rows());
        const auto y0 = static_cast<std::size_t>(std::floor(y));
        const std::size_t y1 = std::min(y0 + 1, src.rows() - 1);
        const double fy = y - static_cast<double>(y0);
        for (std::size_t c = 0; c < out_cols; ++c) {
            const double x = coord(c, out_cols, src.cols());
            const auto x0 = static_cast<std::size_t>(std::floor(x));
            const std::size_t x1 = std::min(x0 + 1, src.cols() - 1);
            const double fx = x - static_cast<double>(x0);
            const double top = src(y0, x0) * (1.0 - fx) + src(y0, x1) * fx;
            const double bottom = src(y1, x0) * (1.0 - fx) + src(y1, x1) * fx;
            out(r, c) = top * (1.0 - fy) + bottom * fy;
        }
    }
    return out;
}

/// Log-magnitude image, frequency rising upward, time left to right; a constant matrix maps to 128.
inline GrayImage render_image(const Spectrogram& sp, std::size_t side = 227) {
    require(side > 0, "image side must be positive");
    require(sp.frames() > 0 && sp.bins() > 0, "spectrogram is empty", ErrorCode::empty_data);
    const Matrix lg = sp.log_compressed();
    Matrix oriented(sp.bins(), sp.frames());
    for (std::size_t t = 0; t < sp.frames(); ++t)
        for (std::size_t k = 0; k < sp.bins(); ++k) oriented(sp.bins() - 1 - k, t) = lg(t, k);
    const auto [lo_it, hi_it] = std::minmax_element(oriented.data().begin(), oriented.data().end());
    const double lo = *lo_it, hi = *hi_it;
    for (double& v : oriented.data()) v = hi > lo ? 255.0 * (v - lo) / (hi - lo) : 128.0;
    const Matrix resized = resize_bilinear(oriented, side, side);
    GrayImage img{side, side, std::vector<std::uint8_t>(side * side)};
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        img.pixels[i] = static_cast<std::uint8_t>(std::clamp(std::lround(resized.data()[i]), 0L, 255L));
    return img;
}

inline std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

inline GrayImage decode_pgm(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    auto token = [&] {
        while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
        std::string t;
        while (pos < bytes.size() && !std::isspace(bytes[pos])) t.push_back(static_cast<char>(bytes[pos++]));
        return t;
    };
    if (token() != "P5") throw Error(ErrorCode::parse_error, "not a binary PGM");
    GrayImage img;
    try {
        img.width = std::stoul(token());
        img.height = std::stoul(token());
        if (std::stoul(token()) != 255) throw Error(ErrorCode::parse_error, "PGM maxval must be 255");
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::parse_error, "malformed PGM header");
    }
    ++pos;
    if (bytes.size() - pos != img.width * img.height) throw Error(ErrorCode::parse_error, "PGM payload size mismatch");
    img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    return img;
}

inline void export_image(const Spectrogram& sp, const std::filesystem::path& path, std::size_t side = 227) {
    write_file_bytes(path, encode_pgm(render_image(sp, side)));
}

} // namespace vocalfeat
