// Core types for polarization-adjusted convolutional (PAC) coding.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pac {

// Bits are stored one per byte at API boundaries; packed forms are never observable.
using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;
using LlrVector = std::vector<double>;

// Invalid argument values (bad sizes, malformed options).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unreadable, unwritable, or malformed files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr bool is_power_of_two(std::size_t x) noexcept {
    return x != 0 && (x & (x - 1)) == 0;
}

inline std::size_t log2_exact(std::size_t x) {
    if (!is_power_of_two(x))
        throw ParamError("log2_exact: " + std::to_string(x) + " is not a power of two");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < x) ++n;
    return n;
}

// Frozen/information mask over the N leaf positions (1 = frozen).
struct RateProfile {
    BitVector frozen;

    std::size_t size() const noexcept { return frozen.size(); }

    std::size_t info_count() const noexcept {
        std::size_t k = 0;
        for (Bit f : frozen) k += (f == 0);
        return k;
    }

    std::vector<std::size_t> info_indices() const {
        std::vector<std::size_t> a;
        a.reserve(info_count());
        for (std::size_t i = 0; i < frozen.size(); ++i)
            if (!frozen[i]) a.push_back(i);
        return a;
    }

    static RateProfile from_info_indices(std::size_t N, const std::vector<std::size_t>& A) {
        RateProfile p;
        p.frozen.assign(N, Bit{1});
        for (std::size_t i : A) {
            if (i >= N) throw ParamError("rate profile: information index out of range");
            if (!p.frozen[i]) throw ParamError("rate profile: duplicate information index");
            p.frozen[i] = 0;
        }
        return p;
    }
};

// One PAC code: block length N = 2^n, K information bits at indices A,
// and the convolution impulse response c (c[0] = c[m] = 1).
struct CodeConfig {
    std::size_t N = 0;
    std::size_t K = 0;
    std::vector<std::size_t> A;  // sorted information indices
    BitVector c;                 // impulse response, length m + 1

    std::size_t m() const noexcept { return c.empty() ? 0 : c.size() - 1; }
    std::size_t n() const { return log2_exact(N); }
    double rate() const noexcept { return N ? static_cast<double>(K) / static_cast<double>(N) : 0.0; }

    RateProfile profile() const { return RateProfile::from_info_indices(N, A); }

    void validate() const {
        if (!is_power_of_two(N) || N < 2)
            throw ParamError("CodeConfig: N must be a power of two, at least 2");
        if (K > N) throw ParamError("CodeConfig: K must not exceed N");
        if (A.size() != K) throw ParamError("CodeConfig: |A| must equal K");
        if (!std::is_sorted(A.begin(), A.end()))
            throw ParamError("CodeConfig: A must be sorted");
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i] >= N) throw ParamError("CodeConfig: information index out of range");
            if (i > 0 && A[i] == A[i - 1])
                throw ParamError("CodeConfig: duplicate information index");
        }
        if (c.empty()) throw ParamError("CodeConfig: impulse response must be non-empty");
        if (c.size() > 64) throw ParamError("CodeConfig: impulse response longer than 64 taps");
        for (Bit b : c)
            if (b != 0 && b != 1) throw ParamError("CodeConfig: impulse response must be 0/1");
        if (c.front() != 1 || c.back() != 1)
            throw ParamError("CodeConfig: impulse response must start and end with 1");
    }
};

inline CodeConfig make_config(std::size_t N, std::size_t K, std::vector<std::size_t> A, BitVector c) {
    CodeConfig cfg;
    cfg.N = N;
    cfg.K = K;
    cfg.A = std::move(A);
    cfg.c = std::move(c);
    cfg.validate();
    return cfg;
}

}  // namespace pac
