// Rate-1 convolutional transform over GF(2): bit-serial encoder, its inverse,
// and the block encoder u = v T (T upper-triangular Toeplitz from c).
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>

#include "pac/types.hpp"

namespace pac {

// m bits of convolution state; bit 0 is the most recent input.
class ShiftRegister {
public:
    ShiftRegister() = default;

    explicit ShiftRegister(std::size_t m) : m_(m) {
        if (m > 63) throw ParamError("ShiftRegister: at most 63 state bits supported");
    }

    static ShiftRegister from_raw(std::size_t m, std::uint64_t bits) {
        ShiftRegister s(m);
        s.bits_ = bits & s.mask();
        return s;
    }

    std::size_t size() const noexcept { return m_; }
    std::uint64_t raw() const noexcept { return bits_; }
    std::uint64_t mask() const noexcept { return m_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - m_)); }

    Bit bit(std::size_t i) const {
        if (i >= m_) throw ParamError("ShiftRegister: state index out of range");
        return static_cast<Bit>((bits_ >> i) & 1u);
    }

    void reset() noexcept { bits_ = 0; }

    void shift_in(Bit v) noexcept { bits_ = ((bits_ << 1) | (v & 1u)) & mask(); }

    friend bool operator==(const ShiftRegister& a, const ShiftRegister& b) noexcept {
        return a.m_ == b.m_ && a.bits_ == b.bits_;
    }

private:
    std::size_t m_ = 0;
    std::uint64_t bits_ = 0;
};

// Precomputed tap mask for fast register stepping: taps bit i-1 mirrors c[i].
struct ConvTaps {
    std::uint64_t taps = 0;
    std::uint64_t mask = 0;
    std::size_t m = 0;

    ConvTaps() = default;

    explicit ConvTaps(const BitVector& c) {
        if (c.empty() || c.front() != 1)
            throw ParamError("ConvTaps: impulse response must be non-empty with leading 1");
        if (c.size() > 64) throw ParamError("ConvTaps: impulse response longer than 64 taps");
        m = c.size() - 1;
        mask = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
        for (std::size_t i = 1; i <= m; ++i)
            if (c[i] & 1u) taps |= std::uint64_t{1} << (i - 1);
    }
};

// One encoder step on a raw state word: emits u = v ⊕ ⊕ c_i s_{i-1}, shifts v in.
inline Bit conv_step_enc(std::uint64_t& state, Bit v, const ConvTaps& t) noexcept {
    const Bit u = static_cast<Bit>((v ^ std::popcount(state & t.taps)) & 1u);
    state = ((state << 1) | (v & 1u)) & t.mask;
    return u;
}

// Inverse step: recovers the unique v that would have emitted u from this state.
inline Bit conv_step_inv(std::uint64_t& state, Bit u, const ConvTaps& t) noexcept {
    const Bit v = static_cast<Bit>((u ^ std::popcount(state & t.taps)) & 1u);
    state = ((state << 1) | v) & t.mask;
    return v;
}

struct ConvStep {
    Bit out;
    ShiftRegister state;
};

inline ConvStep conv_bit_enc(Bit v, const ShiftRegister& s, const BitVector& c) {
    const ConvTaps t(c);
    if (s.size() != t.m) throw ParamError("conv_bit_enc: register size must equal m");
    std::uint64_t raw = s.raw();
    const Bit u = conv_step_enc(raw, v, t);
    return {u, ShiftRegister::from_raw(t.m, raw)};
}

inline ConvStep conv_bit_inv_enc(Bit u, const ShiftRegister& s, const BitVector& c) {
    const ConvTaps t(c);
    if (s.size() != t.m) throw ParamError("conv_bit_inv_enc: register size must equal m");
    std::uint64_t raw = s.raw();
    const Bit v = conv_step_inv(raw, u, t);
    return {v, ShiftRegister::from_raw(t.m, raw)};
}

// Block encoding from the all-zero state; equals v T over GF(2).
inline BitVector conv_encode(const BitVector& v, const BitVector& c) {
    const ConvTaps t(c);
    BitVector u(v.size());
    std::uint64_t state = 0;
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = conv_step_enc(state, v[i] & 1u, t);
    return u;
}

// Block inverse from the all-zero state; recovers v with conv_encode(v, c) = u.
inline BitVector conv_decode(const BitVector& u, const BitVector& c) {
    const ConvTaps t(c);
    BitVector v(u.size());
    std::uint64_t state = 0;
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = conv_step_inv(state, u[i] & 1u, t);
    return v;
}

}  // namespace pac
