#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace vocalfeat {

/// Mono sample buffer at a fixed sample rate.
class Signal {
public:
    Signal(std::vector<double> samples, int sample_rate, std::string source_id = {})
        : samples_(std::move(samples)), sample_rate_(sample_rate), source_id_(std::move(source_id)) {
        require(!samples_.empty(), "signal has no samples", ErrorCode::empty_data);
        require(sample_rate_ > 0, "sample rate must be positive");
        for (double v : samples_) require(std::isfinite(v), "signal contains a non-finite sample");
    }

    const std::vector<double>& samples() const noexcept { return samples_; }
    int sample_rate() const noexcept { return sample_rate_; }
    const std::string& source_id() const noexcept { return source_id_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double duration() const noexcept { return static_cast<double>(samples_.size()) / sample_rate_; }
    double operator[](std::size_t i) const { return samples_[i]; }

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<double> samples_;
    int sample_rate_;
    std::string source_id_;
};

inline Signal peak_normalize(const Signal& s) {
    double peak = 0.0;
    for (double v : s.samples()) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return s;
    std::vector<double> out(s.samples());
    for (double& v : out) v /= peak;
    return Signal(std::move(out), s.sample_rate(), s.source_id());
}

/// Center-crops or symmetrically zero-pads to `target` samples.
inline Signal fit_length(const Signal& s, std::size_t target) {
    require(target > 0, "target length must be positive");
    const std::size_t n = s.size();
    if (n == target) return s;
    std::vector<double> out(target, 0.0);
    if (n > target) {
        const std::size_t start = (n - target) / 2;
        std::copy_n(s.samples().begin() + static_cast<std::ptrdiff_t>(start), target, out.begin());
    } else {
        const std::size_t left = (target - n) / 2;
        std::copy(s.samples().begin(), s.samples().end(), out.begin() + static_cast<std::ptrdiff_t>(left));
    }
    return Signal(std::move(out), s.sample_rate(), s.source_id());
}

} // namespace vocalfeat
