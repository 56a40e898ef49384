#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../audio/signal.hpp"
#include "../audio/wav.hpp"
#include "../error.hpp"
#include "../rng.hpp"
#include "manifest.hpp"

namespace vocalfeat {

/// Per-class ranges; each utterance draws its parameters uniformly from them.
struct SynthClass {
    std::string name;
    double f0_lo = 100.0, f0_hi = 120.0;
    /// Target RMS amplitude.
    double rms_lo = 0.05, rms_hi = 0.06;
    /// One-pole low-pass coefficient, larger is darker.
    double tilt_lo = 0.3, tilt_hi = 0.7;
    /// Noise RMS relative to the voiced RMS.
    double noise_lo = 0.05, noise_hi = 0.2;
};

/// Five emotions with disjoint pitch and loudness bands; anger is the highest and loudest.
inline std::vector<SynthClass> default_synth_classes() {
    return {
        {"anger", 290.0, 330.0, 0.24, 0.28, 0.3, 0.7, 0.05, 0.2},
        {"fear", 180.0, 200.0, 0.085, 0.10, 0.3, 0.7, 0.05, 0.2},
        {"happiness", 225.0, 255.0, 0.14, 0.165, 0.3, 0.7, 0.05, 0.2},
        {"neutral", 120.0, 135.0, 0.05, 0.06, 0.3, 0.7, 0.05, 0.2},
        {"sadness", 85.0, 95.0, 0.03, 0.036, 0.3, 0.7, 0.05, 0.2},
    };
}

inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Band-limited-free sawtooth through a one-pole tilt, plus white noise, scaled to the drawn RMS.
inline Signal synth_utterance(const SynthClass& c, double duration_s, int sample_rate, std::uint64_t seed) {
    require(duration_s > 0.0 && sample_rate > 0, "synthesis needs positive duration and sample rate");
    Rng rng(seed);
    const double f0 = rng.uniform(c.f0_lo, c.f0_hi);
    const double rms = rng.uniform(c.rms_lo, c.rms_hi);
    const double tilt = rng.uniform(c.tilt_lo, c.tilt_hi);
    const double noise = rng.uniform(c.noise_lo, c.noise_hi);
    const double phase0 = rng.uniform01();
    const auto n = static_cast<std::size_t>(std::lround(duration_s * sample_rate));
    std::vector<double> x(n);
    double y = 0.0, phase = phase0;
    for (std::size_t i = 0; i < n; ++i) {
        const double saw = 2.0 * phase - 1.0;
        y = (1.0 - tilt) * saw + tilt * y;
        x[i] = y;
        phase += f0 / sample_rate;
        phase -= std::floor(phase);
    }
    double acc = 0.0;
    for (double v : x) acc += v * v;
    const double voiced_rms = std::sqrt(acc / static_cast<double>(n));
    for (double& v : x) v = v / voiced_rms + noise * rng.normal();
    acc = 0.0;
    for (double v : x) acc += v * v;
    const double total_rms = std::sqrt(acc / static_cast<double>(n));
    for (double& v : x) v *= rms / total_rms;
    return Signal(std::move(x), sample_rate);
}

struct SynthOptions {
    std::size_t n_per_class = 40;
    std::uint64_t seed = 1;
    double duration_s = 1.0;
    int sample_rate = 16000;
    std::string corpus_id = "synthetic";
    unsigned jobs = 1;
};

/// Writes WAVs plus manifest.csv into out_dir and returns the manifest.
inline CorpusManifest synth_corpus(const std::filesystem::path& out_dir, const std::vector<SynthClass>& classes,
                                   const SynthOptions& opt = {}) {
    require(classes.size() >= 2, "synthesis needs at least two classes");
    require(opt.n_per_class >= 1, "n_per_class must be positive");
    for (const auto& c : classes)
        require(!c.name.empty() && c.f0_lo > 0 && c.f0_hi >= c.f0_lo && c.rms_lo > 0 && c.rms_hi >= c.rms_lo &&
                    c.tilt_lo >= 0 && c.tilt_hi < 1 && c.tilt_hi >= c.tilt_lo && c.noise_lo >= 0 &&
                    c.noise_hi >= c.noise_lo,
                "invalid synthesis parameters for class '" + c.name + "'");
    std::filesystem::create_directories(out_dir);
    CorpusManifest m;
    m.corpus_id = opt.corpus_id;
    m.base_dir = out_dir;
    std::vector<std::uint64_t> seeds;
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        for (std::size_t i = 0; i < opt.n_per_class; ++i) {
            std::ostringstream name;
            name << classes[ci].name << '_' << std::setw(3) << std::setfill('0') << i << ".wav";
            m.entries.push_back({name.str(), classes[ci].name});
            seeds.push_back(mix_seed(opt.seed ^ mix_seed((ci << 32) | i)));
        }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < m.entries.size(); k = next++) {
            const auto& c = classes[k / opt.n_per_class];
            write_wav(out_dir / m.entries[k].path, synth_utterance(c, opt.duration_s, opt.sample_rate, seeds[k]));
        }
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    write_manifest(out_dir / "manifest.csv", m);
    return m;
}

} // namespace vocalfeat
