// Fast list decoding: the traversal stops at constituent nodes and decodes
// them in closed form. With {Rate0, Rate1, Rev} enabled the output is
// bit-identical to baseline list decoding; adding SPC trades exactness for
// fewer decoding time steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pac/decoder.hpp"

namespace pac {

inline DecodeResult decode_fast_list(const LlrVector& y_llr, const CodeConfig& config,
                                     std::size_t L, KindSet enabled) {
    ListDecoder dec(config, L, enabled);
    dec.set_collect_survivors(true);
    return dec.decode(y_llr);
}

inline DecodeResult decode_fast_list(const LlrVector& y_llr, const CodeConfig& config,
                                     std::size_t L, Variant variant) {
    return decode_fast_list(y_llr, config, L, enabled_kinds(variant));
}

}  // namespace pac
