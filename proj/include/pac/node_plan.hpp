// Decomposition of the rate profile's binary tree into constituent nodes:
// Rate-0 (all frozen), Rate-1 (all information), Rev (all frozen except the
// last position), SPC (frozen first position only), General otherwise.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

#include "pac/types.hpp"

namespace pac {

enum class NodeKind : std::uint8_t { Rate0 = 0, Rate1 = 1, Rev = 2, Spc = 3, General = 4 };

inline const char* to_string(NodeKind k) noexcept {
    switch (k) {
        case NodeKind::Rate0: return "Rate0";
        case NodeKind::Rate1: return "Rate1";
        case NodeKind::Rev: return "Rev";
        case NodeKind::Spc: return "SPC";
        case NodeKind::General: return "General";
    }
    return "?";
}

// Which constituent kinds the decomposition may emit.
struct KindSet {
    bool rate0 = false;
    bool rate1 = false;
    bool rev = false;
    bool spc = false;

    bool contains(NodeKind k) const noexcept {
        switch (k) {
            case NodeKind::Rate0: return rate0;
            case NodeKind::Rate1: return rate1;
            case NodeKind::Rev: return rev;
            case NodeKind::Spc: return spc;
            case NodeKind::General: return false;
        }
        return false;
    }

    static KindSet none() noexcept { return {}; }
    static KindSet three() noexcept { return {true, true, true, false}; }
    static KindSet all() noexcept { return {true, true, true, true}; }
};

enum class Variant : std::uint8_t { List = 0, Fast3 = 1, Fast4 = 2 };

inline KindSet enabled_kinds(Variant v) noexcept {
    switch (v) {
        case Variant::List: return KindSet::none();
        case Variant::Fast3: return KindSet::three();
        case Variant::Fast4: return KindSet::all();
    }
    return KindSet::none();
}

inline const char* to_string(Variant v) noexcept {
    switch (v) {
        case Variant::List: return "list";
        case Variant::Fast3: return "fast3";
        case Variant::Fast4: return "fast4";
    }
    return "?";
}

inline std::optional<Variant> variant_from_string(std::string_view s) noexcept {
    if (s == "list") return Variant::List;
    if (s == "fast3") return Variant::Fast3;
    if (s == "fast4") return Variant::Fast4;
    return std::nullopt;
}

// One tree node: subtree of width 2^(n - depth) covering leaves [base, base + width).
struct NodeDescriptor {
    std::uint32_t depth = 0;
    std::uint32_t base = 0;
    std::uint32_t width = 0;
    NodeKind kind = NodeKind::General;
};

// Terminal nodes of the pruned traversal, left to right. terminal_at maps
// heap node ids (root = 1, children 2i and 2i + 1) to indices into nodes,
// or -1 for internal nodes that the traversal descends through.
struct NodePlan {
    std::size_t N = 0;
    KindSet enabled;
    std::vector<NodeDescriptor> nodes;
    std::vector<std::int32_t> terminal_at;

    bool is_terminal(std::size_t heap_id) const { return terminal_at[heap_id] >= 0; }
    const NodeDescriptor& node_of(std::size_t heap_id) const {
        return nodes[static_cast<std::size_t>(terminal_at[heap_id])];
    }
};

// Greedy top-down decomposition: each node is the shallowest (maximal) match
// among the enabled kinds, tested in priority order Rate0, Rate1, Rev, SPC;
// Rev and SPC require width >= 2. Unmatched single leaves become General.
inline NodePlan classify(const RateProfile& profile, KindSet enabled) {
    const std::size_t N = profile.size();
    if (!is_power_of_two(N)) throw ParamError("classify: profile length must be a power of two");
    NodePlan plan;
    plan.N = N;
    plan.enabled = enabled;
    plan.terminal_at.assign(2 * N, -1);

    // prefix[i] = number of frozen positions before leaf i
    std::vector<std::size_t> prefix(N + 1, 0);
    for (std::size_t i = 0; i < N; ++i) prefix[i + 1] = prefix[i] + (profile.frozen[i] ? 1 : 0);

    const auto emit = [&](std::size_t id, std::uint32_t depth, std::size_t base, std::size_t width,
                          NodeKind kind) {
        plan.terminal_at[id] = static_cast<std::int32_t>(plan.nodes.size());
        plan.nodes.push_back({depth, static_cast<std::uint32_t>(base),
                              static_cast<std::uint32_t>(width), kind});
    };

    const auto rec = [&](auto&& self, std::size_t id, std::uint32_t depth, std::size_t base,
                         std::size_t width) -> void {
        const std::size_t nf = prefix[base + width] - prefix[base];
        if (enabled.rate0 && nf == width) return emit(id, depth, base, width, NodeKind::Rate0);
        if (enabled.rate1 && nf == 0) return emit(id, depth, base, width, NodeKind::Rate1);
        if (width >= 2) {
            if (enabled.rev && nf == width - 1 && !profile.frozen[base + width - 1])
                return emit(id, depth, base, width, NodeKind::Rev);
            if (enabled.spc && nf == 1 && profile.frozen[base])
                return emit(id, depth, base, width, NodeKind::Spc);
        }
        if (width == 1) return emit(id, depth, base, width, NodeKind::General);
        self(self, 2 * id, depth + 1, base, width / 2);
        self(self, 2 * id + 1, depth + 1, base + width / 2, width / 2);
    };
    rec(rec, 1, 0, 0, N);
    return plan;
}

}  // namespace pac
