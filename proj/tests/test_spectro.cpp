#include <gtest/gtest.h>

#include <filesystem>

#include <vocalfeat/audio/framing.hpp>
#include <vocalfeat/spectro/spectrogram.hpp>

#include "oracles.hpp"

using namespace vocalfeat;

TEST(Spectrogram, ShapeAndToneBin) {
    const Signal s(oracle::sine(1000.0, 0.5, 16000, 16000), 16000);
    const auto sp = spectrogram(s);
    EXPECT_EQ(sp.fft_size, 512u);
    EXPECT_EQ(sp.bins(), 257u);
    EXPECT_EQ(sp.frames(), frame_signal(s, 25.0, 10.0).size());
    for (std::size_t t = 0; t < sp.frames(); ++t) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < sp.bins(); ++k)
            if (sp.magnitudes(t, k) > sp.magnitudes(t, best)) best = k;
        EXPECT_NEAR(sp.bin_hz(best), 1000.0, 16000.0 / 512.0);
    }
}

TEST(Spectrogram, SilenceIsLogFloor) {
    const Signal s(std::vector<double>(4000, 0.0), 16000);
    const auto sp = spectrogram(s);
    for (double v : sp.magnitudes.data()) EXPECT_EQ(v, 0.0);
    const auto lg = sp.log_compressed();
    for (double v : lg.data()) EXPECT_DOUBLE_EQ(v, std::log(1e-10));
}

TEST(Spectrogram, ImpulseLightsOnlyCoveringFrames) {
    std::vector<double> x(8000, 0.0);
    x[3000] = 1.0;
    const Signal s(x, 16000);
    const auto frames = frame_signal(s, 25.0, 10.0);
    const auto sp = spectrogram(s);
    for (std::size_t t = 0; t < sp.frames(); ++t) {
        const std::size_t start = t * frames.hop;
        const bool covers = start <= 3000 && 3000 < start + frames.frame_len;
        double energy = 0.0;
        for (std::size_t k = 0; k < sp.bins(); ++k) energy += sp.magnitudes(t, k);
        if (covers) EXPECT_GT(energy, 0.0) << t;
        else EXPECT_EQ(energy, 0.0) << t;
    }
}

TEST(Spectrogram, ParsevalPerFrame) {
    const Signal s(oracle::white_noise(8000, 0.3, 5), 16000);
    const auto frames = frame_signal(s, 25.0, 10.0);
    const auto sp = spectrogram(s);
    const double n = static_cast<double>(sp.fft_size);
    for (std::size_t t = 0; t < sp.frames(); ++t) {
        double time_energy = 0.0;
        for (double v : frames.frames[t]) time_energy += v * v;
        double freq = 0.0;
        for (std::size_t k = 0; k < sp.bins(); ++k) {
            const double p = sp.magnitudes(t, k) * sp.magnitudes(t, k);
            freq += (k == 0 || k + 1 == sp.bins()) ? p : 2.0 * p;
        }
        EXPECT_NEAR(freq / n, time_energy, 0.01 * time_energy);
    }
}

TEST(SpectrogramImage, SizeAndConstantInput) {
    const Signal tone(oracle::sine(440.0, 0.5, 16000, 8000), 16000);
    const auto img = render_image(spectrogram(tone));
    EXPECT_EQ(img.width, 227u);
    EXPECT_EQ(img.height, 227u);
    EXPECT_EQ(img.pixels.size(), 227u * 227u);
    const auto flat = render_image(spectrogram(Signal(std::vector<double>(4000, 0.0), 16000)));
    for (auto p : flat.pixels) EXPECT_EQ(p, 128);
}

TEST(SpectrogramImage, LowFrequenciesAtBottom) {
    const Signal tone(oracle::sine(500.0, 0.5, 16000, 8000), 16000);
    const auto img = render_image(spectrogram(tone));
    const std::size_t col = 113;
    double top = 0.0, bottom = 0.0;
    for (std::size_t r = 0; r < 20; ++r) {
        top += img.pixels[r * 227 + col];
        bottom += img.pixels[(226 - r) * 227 + col];
    }
    EXPECT_GT(bottom, top);
}

TEST(SpectrogramImage, PgmRoundTripAndByteIdenticalExport) {
    const Signal s(oracle::white_noise(6000, 0.2, 9), 16000);
    const auto dir = std::filesystem::temp_directory_path() / "vocalfeat_spectro_test";
    std::filesystem::create_directories(dir);
    export_image(spectrogram(s), dir / "a.pgm");
    export_image(spectrogram(s), dir / "b.pgm");
    const auto a = read_file_bytes(dir / "a.pgm"), b = read_file_bytes(dir / "b.pgm");
    EXPECT_EQ(a, b);
    const auto img = decode_pgm(a);
    EXPECT_EQ(img.width, 227u);
    EXPECT_EQ(encode_pgm(img), a);
    EXPECT_THROW(decode_pgm({'P', '2'}), Error);
    std::filesystem::remove_all(dir);
}

TEST(SpectrogramImage, BilinearResizeKeepsCorners) {
    const auto src = Matrix::from_rows({{0.0, 10.0}, {20.0, 30.0}});
    const auto out = resize_bilinear(src, 3, 3);
    EXPECT_DOUBLE_EQ(out(0, 0), 0.0);
    EXPECT_DOUBLE_EQ(out(2, 2), 30.0);
    EXPECT_DOUBLE_EQ(out(1, 1), 15.0);
}
