#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "../error.hpp"
#include "signal.hpp"

namespace vocalfeat {

/// Interleaved 16-bit PCM as stored in the file.
struct Pcm16 {
    std::vector<std::int16_t> samples;
    int sample_rate = 0;
    int channels = 1;
};

namespace detail {

inline std::uint32_t read_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
           std::uint32_t(p[3]) << 24;
}

inline std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

} // namespace detail

inline Pcm16 decode_wav_pcm16(const std::vector<std::uint8_t>& bytes) {
    using detail::read_u16;
    using detail::read_u32;
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw Error(ErrorCode::malformed_file, "not a RIFF/WAVE file");

    Pcm16 out;
    bool have_fmt = false;
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint8_t* hdr = bytes.data() + pos;
        const std::uint32_t size = read_u32(hdr + 4);
        const std::size_t body = pos + 8;
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (size < 16 || body + 16 > bytes.size())
                throw Error(ErrorCode::malformed_file, "truncated fmt chunk");
            const std::uint16_t format = read_u16(bytes.data() + body);
            out.channels = read_u16(bytes.data() + body + 2);
            out.sample_rate = static_cast<int>(read_u32(bytes.data() + body + 4));
            const std::uint16_t bits = read_u16(bytes.data() + body + 14);
            if (format != 1 || bits != 16)
                throw Error(ErrorCode::not_pcm, "only 16-bit PCM (format tag 1) is supported");
            if (out.channels == 0 || out.sample_rate <= 0)
                throw Error(ErrorCode::malformed_file, "invalid channel count or sample rate");
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            if (!have_fmt) throw Error(ErrorCode::malformed_file, "data chunk before fmt chunk");
            const std::size_t avail = std::min<std::size_t>(size, bytes.size() - body);
            const std::size_t count = avail / 2;
            if (count == 0) throw Error(ErrorCode::empty_data, "data chunk is empty");
            out.samples.resize(count);
            for (std::size_t i = 0; i < count; ++i)
                out.samples[i] = static_cast<std::int16_t>(read_u16(bytes.data() + body + 2 * i));
            out.samples.resize(count - count % static_cast<std::size_t>(out.channels));
            if (out.samples.empty()) throw Error(ErrorCode::empty_data, "data chunk is empty");
            return out;
        }
        pos = body + size + (size & 1u);
    }
    throw Error(have_fmt ? ErrorCode::empty_data : ErrorCode::malformed_file,
                have_fmt ? "missing data chunk" : "missing fmt chunk");
}

inline std::vector<std::uint8_t> encode_wav_pcm16(const Pcm16& pcm) {
    require(pcm.channels > 0 && pcm.sample_rate > 0, "invalid WAV parameters");
    const auto data_bytes = static_cast<std::uint32_t>(pcm.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    detail::put_u32(out, 36 + data_bytes);
    out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
    detail::put_u32(out, 16);
    detail::put_u16(out, 1);
    detail::put_u16(out, static_cast<std::uint16_t>(pcm.channels));
    detail::put_u32(out, static_cast<std::uint32_t>(pcm.sample_rate));
    detail::put_u32(out, static_cast<std::uint32_t>(pcm.sample_rate * pcm.channels * 2));
    detail::put_u16(out, static_cast<std::uint16_t>(pcm.channels * 2));
    detail::put_u16(out, 16);
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    detail::put_u32(out, data_bytes);
    for (std::int16_t s : pcm.samples) detail::put_u16(out, static_cast<std::uint16_t>(s));
    return out;
}

inline Signal pcm16_to_signal(const Pcm16& pcm, std::string source_id = {}) {
    const std::size_t ch = static_cast<std::size_t>(pcm.channels);
    const std::size_t frames = pcm.samples.size() / ch;
    std::vector<double> mono(frames);
    for (std::size_t i = 0; i < frames; ++i) {
        double acc = 0.0;
        for (std::size_t c = 0; c < ch; ++c) acc += pcm.samples[i * ch + c] / 32768.0;
        mono[i] = acc / static_cast<double>(ch);
    }
    return Signal(std::move(mono), pcm.sample_rate, std::move(source_id));
}

/// Rounds to the nearest 16-bit code, clamping to the representable range.
inline Pcm16 to_pcm16(const Signal& s) {
    Pcm16 pcm;
    pcm.sample_rate = s.sample_rate();
    pcm.samples.reserve(s.size());
    for (double v : s.samples()) {
        const double q = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0);
        pcm.samples.push_back(static_cast<std::int16_t>(q));
    }
    return pcm;
}

inline std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::file_not_found, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::io_error, "write failed for " + path.string());
}

inline Signal read_wav(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw Error(ErrorCode::file_not_found, "no such file: " + path.string());
    return pcm16_to_signal(decode_wav_pcm16(read_file_bytes(path)), path.filename().string());
}

inline void write_wav(const std::filesystem::path& path, const Pcm16& pcm) {
    write_file_bytes(path, encode_wav_pcm16(pcm));
}

inline void write_wav(const std::filesystem::path& path, const Signal& s) {
    write_wav(path, to_pcm16(s));
}

} // namespace vocalfeat
