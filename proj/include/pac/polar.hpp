// Polar transform x = u P^⊗n (an involution over GF(2)) and the full
// PAC encoding pipeline: rate profile → convolution → polar transform.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pac/convolution.hpp"
#include "pac/types.hpp"

namespace pac {

// In-place butterfly; stage h combines positions j and j + h.
inline void polar_transform_inplace(BitVector& x) {
    const std::size_t N = x.size();
    if (!is_power_of_two(N)) throw ParamError("polar_transform: length must be a power of two");
    for (std::size_t h = 1; h < N; h <<= 1)
        for (std::size_t i = 0; i < N; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) x[j] ^= x[j + h];
}

inline BitVector polar_transform(BitVector u) {
    polar_transform_inplace(u);
    return u;
}

// Explicit N×N transform matrix (row-major, N = 2^n), for structural checks:
// x = u M with M the n-fold Kronecker power of [1 0; 1 1].
inline std::vector<BitVector> polar_matrix(std::size_t n) {
    std::vector<BitVector> M{BitVector{1}};
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t half = M.size();
        std::vector<BitVector> M2(2 * half, BitVector(2 * half, 0));
        for (std::size_t i = 0; i < half; ++i)
            for (std::size_t j = 0; j < half; ++j) {
                M2[i][j] = M[i][j];
                M2[half + i][j] = M[i][j];
                M2[half + i][half + j] = M[i][j];
            }
        M.swap(M2);
    }
    return M;
}

// d (K bits) → v (profile insertion) → u = conv(v) → x = polar(u).
inline BitVector pac_encode(const BitVector& d, const CodeConfig& cfg) {
    if (d.size() != cfg.K) throw ParamError("pac_encode: message length must equal K");
    BitVector v(cfg.N, 0);
    for (std::size_t i = 0; i < cfg.K; ++i) v[cfg.A[i]] = d[i] & 1u;
    BitVector x = conv_encode(v, cfg.c);
    polar_transform_inplace(x);
    return x;
}

}  // namespace pac
