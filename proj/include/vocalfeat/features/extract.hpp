#pragma once

#include <array>
#include <cmath>
#include <string>

#include "../audio/framing.hpp"
#include "../audio/signal.hpp"
#include "catalogue.hpp"
#include "config.hpp"
#include "lpc.hpp"
#include "mel.hpp"
#include "pitch.hpp"
#include "stats.hpp"

namespace vocalfeat {

struct FeatureVector {
    std::array<double, kNumFeatures> values{};
    std::string label;
    std::string corpus;

    /// 1-based access matching the x1..x84 labels.
    double& at(int index) { return values.at(static_cast<std::size_t>(index - 1)); }
    double at(int index) const { return values.at(static_cast<std::size_t>(index - 1)); }

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

inline FeatureVector extract_feature_vector(const Signal& input, const ExtractionConfig& cfg = {}) {
    cfg.validate();
    const Signal s = cfg.peak_normalize ? peak_normalize(input) : input;
    FeatureVector fv;
    auto& v = fv.values;

    const auto spectral = frame_signal(s, cfg.frame_ms, cfg.hop_ms, Window::hamming);
    const auto formants = formant_statistics(extract_formants(spectral));
    for (int i = 0; i < 20; ++i) v[static_cast<std::size_t>(i)] = formants[static_cast<std::size_t>(i)];

    const PitchConfig pcfg{cfg.pitch_min_hz, cfg.pitch_max_hz, cfg.voicing_threshold};
    double pitch = 0.0, hnr = kHnrFloorDb;
    if (s.sample_rate() >= 2.0 * pcfg.max_hz) {
        const auto periodicity = analyze_periodicity(pitch_frames(s, cfg.hop_ms, pcfg), pcfg);
        std::vector<double> f0, db;
        for (const auto& p : periodicity)
            if (p.voiced) {
                f0.push_back(p.f0);
                db.push_back(hnr_from_r(p.r));
            }
        if (!f0.empty()) {
            pitch = median_of(f0);
            hnr = mean_of(db);
        }
    }

    v[20] = extract_intensity(s);
    if (s.size() >= 2) {
        const auto st = signal_statistics(s, cfg.percentile_q);
        const auto z = extract_zcr(s);
        v[21] = st.std;
        v[22] = st.autocorrelation;
        v[25] = st.min;
        v[26] = st.mean;
        v[27] = st.variance;
        v[28] = st.max;
        v[29] = st.percentile;
        v[30] = z.zcr;
        v[31] = z.zcr_density;
    } else {
        v[22] = 1.0;
        v[25] = v[26] = v[28] = s[0];
        v[29] = std::abs(s[0]);
    }
    v[23] = pitch;
    v[24] = hnr;

    const auto fbe = extract_fbe(spectral, static_cast<std::size_t>(cfg.n_filters));
    const auto mfcc = mfcc_from_fbe(fbe);
    for (std::size_t j = 0; j < 13; ++j) {
        const auto mc = mfcc.column(j);
        const auto fc = fbe.column(j);
        v[32 + j] = std_of(mc);
        v[45 + j] = mean_of(mc);
        v[58 + j] = std_of(fc);
        v[71 + j] = mean_of(fc);
    }

    for (double& x : v)
        if (!std::isfinite(x)) x = 0.0;
    return fv;
}

} // namespace vocalfeat
