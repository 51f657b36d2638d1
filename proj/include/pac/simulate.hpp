// Monte-Carlo frame-error-rate harness. Every frame's data and noise are
// keyed by (seed, frame index), and the stopping rule scans per-frame error
// indicators in frame order, so results are byte-identical for any worker
// count and paired across decoder variants sharing a seed.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdio>
#include <memory>
#include <ostream>
#include <thread>

#include "pac/channel.hpp"
#include "pac/decoder.hpp"
#include "pac/types.hpp"

namespace pac {

struct FerRecord {
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    double fer = 0.0;
    double wall_time_s = 0.0;
};

namespace detail {

// Decode one frame and report whether the decoded message differs from the sent one.
inline bool frame_error(ListDecoder& dec, const CodeConfig& cfg, double sigma,
                        std::uint64_t seed, std::uint64_t frame, BitVector& d,
                        std::vector<double>& sym) {
    CounterRng data_rng(seed, frame, kStreamData);
    d.resize(cfg.K);
    for (Bit& b : d) b = data_rng.next_bit();
    const BitVector x = pac_encode(d, cfg);
    sym.resize(cfg.N);
    for (std::size_t i = 0; i < cfg.N; ++i) sym[i] = x[i] ? -1.0 : 1.0;
    CounterRng noise_rng(seed, frame, kStreamNoise);
    awgn_add(sym, sigma, noise_rng);
    const DecodeResult res = dec.decode(channel_llr(sym, sigma));
    return res.info_bits != d;
}

}  // namespace detail

// Simulate each Eb/N0 point until min_errors error frames or max_frames frames.
// The stopping frame is exact: frames = t + 1 for the first frame index t at
// which the cumulative error count reaches min_errors (or max_frames if first).
inline std::vector<FerRecord> run_fer(const CodeConfig& config, std::size_t L, Variant variant,
                                      const std::vector<double>& ebn0_points,
                                      std::uint64_t min_errors, std::uint64_t max_frames,
                                      std::uint64_t seed, unsigned workers) {
    config.validate();
    if (min_errors < 1) throw ParamError("run_fer: min_errors must be at least 1");
    if (max_frames < 1) throw ParamError("run_fer: max_frames must be at least 1");
    if (workers < 1) throw ParamError("run_fer: workers must be at least 1");
    if (config.K < 1) throw ParamError("run_fer: K must be at least 1");

    std::vector<std::unique_ptr<ListDecoder>> decoders;
    decoders.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        decoders.push_back(std::make_unique<ListDecoder>(config, L, variant));

    std::vector<FerRecord> out;
    out.reserve(ebn0_points.size());
    const std::uint64_t block = std::uint64_t{512} * workers;
    std::vector<std::uint8_t> err(block);
    BitVector d_scratch;
    std::vector<double> sym_scratch;

    for (double point : ebn0_points) {
        const auto t0 = std::chrono::steady_clock::now();
        const double sigma = ChannelSpec{point}.sigma(config.rate());
        std::uint64_t frames = 0, errors = 0;
        bool done = false;
        for (std::uint64_t start = 0; !done && start < max_frames; start += block) {
            const std::uint64_t count = std::min(block, max_frames - start);
            if (workers == 1) {
                for (std::uint64_t t = 0; t < count; ++t)
                    err[t] = detail::frame_error(*decoders[0], config, sigma, seed, start + t,
                                                 d_scratch, sym_scratch);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                const std::uint64_t stripe = (count + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    const std::uint64_t lo = std::min<std::uint64_t>(w * stripe, count);
                    const std::uint64_t hi = std::min<std::uint64_t>(lo + stripe, count);
                    if (lo >= hi) break;
                    pool.emplace_back([&, w, lo, hi] {
                        BitVector d;
                        std::vector<double> sym;
                        for (std::uint64_t t = lo; t < hi; ++t)
                            err[t] = detail::frame_error(*decoders[w], config, sigma, seed,
                                                         start + t, d, sym);
                    });
                }
                for (std::thread& th : pool) th.join();
            }
            // serial scan in frame order decides the exact stopping frame
            for (std::uint64_t t = 0; t < count; ++t) {
                errors += err[t];
                if (errors >= min_errors) {
                    frames = start + t + 1;
                    done = true;
                    break;
                }
            }
            if (!done) frames = start + count;
        }
        FerRecord rec;
        rec.ebn0_db = point;
        rec.frames = frames;
        rec.errors = errors;
        rec.fer = frames ? static_cast<double>(errors) / static_cast<double>(frames) : 0.0;
        rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(rec);
    }
    return out;
}

// CSV with the fixed column set; formatting is locale-free and deterministic.
inline void write_fer_csv(std::ostream& os, const std::vector<FerRecord>& records,
                          Variant variant, std::size_t N, std::size_t K, std::size_t L,
                          std::uint64_t seed) {
    os << "ebn0_db,frames,errors,fer,variant,n,k,list_size,seed\n";
    char buf[256];
    for (const FerRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%.6g,%llu,%llu,%.9g,%s,%zu,%zu,%zu,%llu\n", r.ebn0_db,
                      static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.errors), r.fer, to_string(variant), N, K,
                      L, static_cast<unsigned long long>(seed));
        os << buf;
    }
}

}  // namespace pac
