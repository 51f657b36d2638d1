// BPSK over the binary-input AWGN channel, with a counter-based RNG so that
// every frame's randomness is a pure function of (seed, frame index, stream).
// Reproducibility across worker counts and library versions is a hard
// requirement here, which rules out implementation-defined distributions;
// the Gaussian draw is therefore an explicit Box-Muller transform.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "pac/types.hpp"

namespace pac {

inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// SplitMix64 sequence over a state derived from (seed, stream, substream).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) noexcept
        : state_(mix64(mix64(mix64(seed) ^ stream) ^ substream)) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    Bit next_bit() noexcept { return static_cast<Bit>(next() & 1u); }

    // Uniform draw in (0, 1]; never zero, so it is safe under a logarithm.
    double next_unit() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws are produced in pairs.
    double next_gauss() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream tags separating the per-frame substreams.
inline constexpr std::uint64_t kStreamData = 1;
inline constexpr std::uint64_t kStreamNoise = 2;

// Eb/N0 in dB and the induced noise variance for unit-energy BPSK.
struct ChannelSpec {
    double ebn0_db = 0.0;

    double sigma2(double rate) const {
        if (rate <= 0.0) throw ParamError("ChannelSpec: rate must be positive");
        return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
    }
    double sigma(double rate) const { return std::sqrt(sigma2(rate)); }
};

// 0 -> +1, 1 -> -1 (unit energy).
inline std::vector<double> bpsk_modulate(const BitVector& x) {
    std::vector<double> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1.0 : 1.0;
    return s;
}

inline void awgn_add(std::vector<double>& sym, double sigma, CounterRng& rng) {
    if (sigma <= 0.0) throw ParamError("awgn_add: sigma must be positive");
    for (double& v : sym) v += sigma * rng.next_gauss();
}

inline std::vector<double> awgn_channel(const std::vector<double>& sym, double sigma,
                                        std::uint64_t seed) {
    CounterRng rng(seed, 0, kStreamNoise);
    std::vector<double> out = sym;
    awgn_add(out, sigma, rng);
    return out;
}

// LLR_i = 2 y_i / sigma^2 under the 0 -> +1 mapping (positive favors bit 0).
inline LlrVector channel_llr(const std::vector<double>& y, double sigma) {
    if (sigma <= 0.0) throw ParamError("channel_llr: sigma must be positive");
    LlrVector llr(y.size());
    const double scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < y.size(); ++i) llr[i] = scale * y[i];
    return llr;
}

}  // namespace pac
