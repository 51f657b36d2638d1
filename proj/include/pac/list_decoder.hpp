// Baseline list decoding: full tree traversal, one path split per
// information leaf, pruning to the L lowest path metrics. Also provides the
// forced-path metric used as an exhaustive maximum-likelihood oracle in tests.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pac/decoder.hpp"

namespace pac {

inline DecodeResult decode_list(const LlrVector& y_llr, const CodeConfig& config, std::size_t L) {
    ListDecoder dec(config, L, Variant::List);
    dec.set_collect_survivors(true);
    return dec.decode(y_llr);
}

namespace detail {

inline double forced_sc_metric(const LlrVector& alpha, const BitVector& u) {
    const std::size_t W = u.size();
    if (W == 1) return decision_penalty(alpha[0], u[0]);
    const std::size_t h = W / 2;
    BitVector ul(u.begin(), u.begin() + h);
    BitVector ur(u.begin() + h, u.end());
    LlrVector child(h);
    for (std::size_t i = 0; i < h; ++i) child[i] = f_op(alpha[i], alpha[i + h]);
    double pm = forced_sc_metric(child, ul);
    const BitVector bl = polar_transform(ul);
    for (std::size_t i = 0; i < h; ++i) child[i] = g_op(alpha[i], alpha[i + h], bl[i]);
    pm += forced_sc_metric(child, ur);
    return pm;
}

}  // namespace detail

// Metric of the hypothesis v: run the SC recursion with every leaf decision
// forced to v's convolution output, accumulating the decision penalties.
// decode_list with L >= 2^K returns the global argmin of this function.
inline double forced_path_metric(const LlrVector& y_llr, const BitVector& v,
                                 const CodeConfig& config) {
    if (y_llr.size() != config.N) throw ParamError("forced_path_metric: LLR length must equal N");
    if (v.size() != config.N) throw ParamError("forced_path_metric: v length must equal N");
    const RateProfile profile = config.profile();
    for (std::size_t i = 0; i < config.N; ++i)
        if (profile.frozen[i] && v[i] != 0)
            throw ParamError("forced_path_metric: v must be zero at frozen positions");
    const BitVector u = conv_encode(v, config.c);
    return detail::forced_sc_metric(y_llr, u);
}

}  // namespace pac
