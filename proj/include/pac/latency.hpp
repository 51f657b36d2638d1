// Decoding time-step accounting under the unit-cost model: one f operation,
// one g operation, or one path split each cost one step; encoding transforms
// inside node decoders are free; a whole-node metric update is one step.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>

#include "pac/node_plan.hpp"
#include "pac/types.hpp"

namespace pac {

struct TimeStepReport {
    Variant variant = Variant::List;
    std::size_t N = 0, K = 0, L = 0;
    std::size_t traversal = 0;             // f/g steps of the pruned traversal
    std::size_t splits = 0;                // split steps at General information leaves
    std::array<std::size_t, 4> per_kind{}; // Rate0, Rate1, Rev, SPC subtotals
    std::size_t total = 0;
};

// Steps one constituent node costs: the bit-by-bit figure for the baseline
// ("fast" false) or the closed-form figure for the fast decoders ("fast" true).
inline std::size_t node_time_steps(NodeKind kind, std::size_t width, std::size_t L, bool fast) {
    if (!is_power_of_two(width)) throw ParamError("node_time_steps: width must be a power of two");
    if (L < 1) throw ParamError("node_time_steps: list size must be at least 1");
    switch (kind) {
        case NodeKind::Rate0: return fast ? 1 : 2 * width - 2;
        case NodeKind::Rate1: return fast ? std::min(L - 1, width) : 3 * width - 2;
        case NodeKind::Rev:
            if (width < 2) throw ParamError("node_time_steps: Rev requires width >= 2");
            return fast ? 2 : 2 * width - 1;
        case NodeKind::Spc:
            if (width < 2) throw ParamError("node_time_steps: SPC requires width >= 2");
            return fast ? std::min(L, width) + 1 : 3 * width - 3;
        case NodeKind::General: break;
    }
    throw ParamError("node_time_steps: no entry for this node kind");
}

// Total decoder steps: 2 traversal steps per internal node of the pruned tree,
// the per-node figures above for constituent nodes, one split per General
// information leaf, and nothing for General frozen leaves. With no constituent
// kinds enabled this reduces to the baseline 2N - 2 + K.
inline TimeStepReport total_time_steps(const CodeConfig& config, std::size_t L, Variant variant) {
    config.validate();
    if (L < 1) throw ParamError("total_time_steps: list size must be at least 1");
    const RateProfile profile = config.profile();
    const NodePlan plan = classify(profile, enabled_kinds(variant));
    TimeStepReport rep;
    rep.variant = variant;
    rep.N = config.N;
    rep.K = config.K;
    rep.L = L;
    rep.traversal = 2 * (plan.nodes.size() - 1);
    for (const NodeDescriptor& node : plan.nodes) {
        if (node.kind == NodeKind::General) {
            if (!profile.frozen[node.base]) ++rep.splits;
        } else {
            rep.per_kind[static_cast<std::size_t>(node.kind)] +=
                node_time_steps(node.kind, node.width, L, true);
        }
    }
    rep.total = rep.traversal + rep.splits;
    for (std::size_t s : rep.per_kind) rep.total += s;
    return rep;
}

inline std::string format_report_text(const TimeStepReport& rep) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "variant    %s\n"
                  "N          %zu\n"
                  "K          %zu\n"
                  "L          %zu\n"
                  "traversal  %zu\n"
                  "splits     %zu\n"
                  "Rate0      %zu\n"
                  "Rate1      %zu\n"
                  "Rev        %zu\n"
                  "SPC        %zu\n"
                  "total      %zu\n",
                  to_string(rep.variant), rep.N, rep.K, rep.L, rep.traversal, rep.splits,
                  rep.per_kind[0], rep.per_kind[1], rep.per_kind[2], rep.per_kind[3], rep.total);
    return std::string(buf);
}

}  // namespace pac
