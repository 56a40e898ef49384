#include <gtest/gtest.h>

#include <filesystem>

#include <vocalfeat/audio/framing.hpp>
#include <vocalfeat/audio/signal.hpp>
#include <vocalfeat/audio/wav.hpp>
#include <vocalfeat/dsp/fft.hpp>
#include <vocalfeat/rng.hpp>

#include "oracles.hpp"

using namespace vocalfeat;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "vocalfeat_audio_test";
    fs::create_directories(dir);
    return dir / name;
}

ErrorCode decode_error(const std::vector<std::uint8_t>& bytes) {
    try {
        decode_wav_pcm16(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::invalid_argument;
}

} // namespace

TEST(Wav, ScalesSixteenBitSamples) {
    const auto path = temp_path("scale.wav");
    write_wav(path, Pcm16{{0, 16384, -32768}, 16000, 1});
    const Signal s = read_wav(path);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_DOUBLE_EQ(s[0], 0.0);
    EXPECT_DOUBLE_EQ(s[1], 0.5);
    EXPECT_DOUBLE_EQ(s[2], -1.0);
}

TEST(Wav, AveragesChannels) {
    const auto s = pcm16_to_signal(Pcm16{{16384, 0, 16384, -16384}, 16000, 2});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_DOUBLE_EQ(s[0], 0.25);
    EXPECT_DOUBLE_EQ(s[1], 0.0);
    const auto full = pcm16_to_signal(Pcm16{{32767, 0}, 8000, 2});
    EXPECT_NEAR(full[0], 0.5, 1e-4);
}

TEST(Wav, HeaderSampleRatePassesThrough) {
    const auto path = temp_path("rate.wav");
    write_wav(path, Pcm16{{1, 2, 3}, 8000, 1});
    EXPECT_EQ(read_wav(path).sample_rate(), 8000);
}

TEST(Wav, DistinctErrorCodes) {
    try {
        read_wav(temp_path("missing.wav"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::file_not_found);
    }
    auto bytes = encode_wav_pcm16(Pcm16{{1, 2}, 16000, 1});
    auto float_fmt = bytes;
    float_fmt[20] = 3;
    EXPECT_EQ(decode_error(float_fmt), ErrorCode::not_pcm);
    auto eight_bit = bytes;
    eight_bit[34] = 8;
    EXPECT_EQ(decode_error(eight_bit), ErrorCode::not_pcm);
    const auto empty = encode_wav_pcm16(Pcm16{{}, 16000, 1});
    EXPECT_EQ(decode_error(empty), ErrorCode::empty_data);
    EXPECT_EQ(decode_error({'j', 'u', 'n', 'k'}), ErrorCode::malformed_file);
}

TEST(Wav, SkipsUnknownChunks) {
    auto bytes = encode_wav_pcm16(Pcm16{{7, -7}, 16000, 1});
    std::vector<std::uint8_t> extra{'L', 'I', 'S', 'T', 3, 0, 0, 0, 'a', 'b', 'c', 0};
    bytes.insert(bytes.begin() + 36, extra.begin(), extra.end());
    const auto pcm = decode_wav_pcm16(bytes);
    EXPECT_EQ(pcm.samples, (std::vector<std::int16_t>{7, -7}));
}

TEST(Wav, RoundTripIsBitExact) {
    Rng rng(5);
    Pcm16 pcm{{}, 22050, 1};
    for (int i = 0; i < 5000; ++i) pcm.samples.push_back(static_cast<std::int16_t>(static_cast<int>(rng.below(65536)) - 32768));
    pcm.samples.push_back(-32768);
    pcm.samples.push_back(32767);
    const auto path = temp_path("roundtrip.wav");
    write_wav(path, pcm);
    const Signal s = read_wav(path);
    ASSERT_EQ(s.size(), pcm.samples.size());
    for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(std::lround(s[i] * 32768.0), pcm.samples[i]);
    EXPECT_EQ(to_pcm16(s).samples, pcm.samples);
}

TEST(Signal, RejectsInvalidInput) {
    EXPECT_THROW(Signal({}, 16000), Error);
    EXPECT_THROW(Signal({0.1}, 0), Error);
    EXPECT_THROW(Signal({std::nan("")}, 16000), Error);
}

TEST(PeakNormalize, Examples) {
    EXPECT_EQ(peak_normalize(Signal({0.5, -0.25}, 10)).samples(), (std::vector<double>{1.0, -0.5}));
    EXPECT_EQ(peak_normalize(Signal({0, 0, 0}, 10)).samples(), (std::vector<double>{0, 0, 0}));
    EXPECT_EQ(peak_normalize(Signal({-2.0, 1.0}, 10)).samples(), (std::vector<double>{-1.0, 0.5}));
}

TEST(PeakNormalize, Idempotent) {
    const Signal s(oracle::white_noise(1000, 0.3, 9), 8000);
    const auto once = peak_normalize(s);
    EXPECT_EQ(peak_normalize(once), once);
}

TEST(Framing, CountFormula) {
    const Signal s(std::vector<double>(400, 0.1), 1000);
    EXPECT_EQ(frame_samples(s.samples(), 1000, 200, 100, Window::rectangular).size(), 3u);
    for (std::size_t len = 50; len < 400; len += 37)
        for (std::size_t frame = 8; frame <= len; frame += 29)
            for (std::size_t hop = 1; hop <= frame; hop += 7) {
                const auto fr = frame_samples(std::vector<double>(len, 1.0), 1000, frame, hop, Window::hamming);
                ASSERT_EQ(fr.size(), (len - frame) / hop + 1);
                ASSERT_FALSE(fr.padded);
                for (const auto& f : fr.frames) ASSERT_EQ(f.size(), frame);
            }
}

TEST(Framing, HammingOnOnesEqualsWindow) {
    const auto fr = frame_samples(std::vector<double>(64, 1.0), 1000, 64, 32, Window::hamming);
    const auto w = make_window(Window::hamming, 64);
    ASSERT_EQ(fr.size(), 1u);
    for (std::size_t i = 0; i < 64; ++i) {
        EXPECT_DOUBLE_EQ(fr.frames[0][i], w[i]);
        EXPECT_NEAR(w[i], 0.54 - 0.46 * std::cos(2 * std::numbers::pi * i / 63.0), 1e-15);
    }
}

TEST(Framing, ShortSignalGivesOnePaddedFrame) {
    const auto fr = frame_samples(std::vector<double>(100, 1.0), 1000, 200, 100, Window::rectangular);
    ASSERT_EQ(fr.size(), 1u);
    EXPECT_TRUE(fr.padded);
    EXPECT_EQ(fr.frames[0].size(), 200u);
    EXPECT_EQ(fr.frames[0][99], 1.0);
    EXPECT_EQ(fr.frames[0][100], 0.0);
}

TEST(Framing, MillisecondOverload) {
    const Signal s(std::vector<double>(16000, 0.2), 16000);
    const auto fr = frame_signal(s, 25, 10);
    EXPECT_EQ(fr.frame_len, 400u);
    EXPECT_EQ(fr.hop, 160u);
    EXPECT_EQ(fr.size(), (16000u - 400u) / 160u + 1u);
    EXPECT_THROW(frame_signal(s, 10, 25), Error);
    EXPECT_THROW(frame_signal(s, 10, 0), Error);
}

TEST(FitLength, Examples) {
    std::vector<double> x(100);
    for (std::size_t i = 0; i < 100; ++i) x[i] = static_cast<double>(i);
    const auto cropped = fit_length(Signal(x, 100), 80);
    ASSERT_EQ(cropped.size(), 80u);
    EXPECT_EQ(cropped[0], 10.0);
    EXPECT_EQ(cropped[79], 89.0);

    const Signal short_sig(std::vector<double>(80, 1.0), 100);
    const auto padded = fit_length(short_sig, 100);
    ASSERT_EQ(padded.size(), 100u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_EQ(padded[i], 0.0);
        EXPECT_EQ(padded[99 - i], 0.0);
    }
    EXPECT_EQ(padded[10], 1.0);
    EXPECT_EQ(padded[89], 1.0);
    const Signal same(x, 100);
    EXPECT_EQ(fit_length(same, 100), same);
    EXPECT_THROW(fit_length(same, 0), Error);
}

TEST(Fft, MatchesNaiveDft) {
    const auto x = oracle::white_noise(100, 1.0, 3);
    const auto fast = real_spectrum(x, 128);
    const auto slow = oracle::naive_dft(x, 128);
    for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-9);
}
