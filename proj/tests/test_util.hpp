// Shared helpers for the test suites: frame generation and random profiles.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "pac/channel.hpp"
#include "pac/polar.hpp"
#include "pac/types.hpp"

namespace pactest {

struct Frame {
    pac::BitVector data;
    pac::BitVector codeword;
    pac::LlrVector llr;
};

// One Monte-Carlo frame keyed the same way as the simulation harness:
// data bits from stream (seed, frame, data), noise from (seed, frame, noise).
inline Frame make_frame(const pac::CodeConfig& cfg, double ebn0_db, std::uint64_t seed,
                        std::uint64_t frame) {
    Frame f;
    f.data.resize(cfg.K);
    pac::CounterRng data_rng(seed, frame, pac::kStreamData);
    for (auto& b : f.data) b = data_rng.next_bit();
    f.codeword = pac::pac_encode(f.data, cfg);
    const pac::ChannelSpec ch{ebn0_db};
    const double sigma = ch.sigma(cfg.rate());
    pac::CounterRng noise_rng(seed, frame, pac::kStreamNoise);
    f.llr.resize(cfg.N);
    const double scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < cfg.N; ++i) {
        const double sym = f.codeword[i] ? -1.0 : 1.0;
        f.llr[i] = scale * (sym + sigma * noise_rng.next_gauss());
    }
    return f;
}

// Noiseless saturated LLRs for a codeword.
inline pac::LlrVector saturated_llrs(const pac::BitVector& x, double mag = 20.0) {
    pac::LlrVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] ? -mag : mag;
    return y;
}

// A random information set of size K drawn without replacement from [0, N).
inline std::vector<std::size_t> random_info_set(pac::CounterRng& rng, std::size_t N,
                                                std::size_t K) {
    std::vector<std::size_t> all(N);
    for (std::size_t i = 0; i < N; ++i) all[i] = i;
    for (std::size_t i = N; i > 1; --i)
        std::swap(all[i - 1], all[static_cast<std::size_t>(rng.next() % i)]);
    all.resize(K);
    std::sort(all.begin(), all.end());
    return all;
}

// A random impulse response of length m+1 with both end taps set.
inline pac::BitVector random_conv(pac::CounterRng& rng, std::size_t m) {
    pac::BitVector c(m + 1, 0);
    c.front() = 1;
    c.back() = 1;
    for (std::size_t i = 1; i < m; ++i) c[i] = rng.next_bit();
    return c;
}

}  // namespace pactest
