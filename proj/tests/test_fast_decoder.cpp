// Unit tests: constituent-node classification and the fast list decoder's
// equivalence with the baseline list decoder.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "pac/fast_decoder.hpp"
#include "pac/list_decoder.hpp"
#include "pac/pac.hpp"
#include "test_util.hpp"

using namespace pac;
using pactest::make_frame;
using pactest::saturated_llrs;

namespace {

CodeConfig pac84() { return make_config(8, 4, {3, 5, 6, 7}, {1, 1, 1}); }

RateProfile mask_profile(std::initializer_list<int> frozen) {
    RateProfile p;
    for (int b : frozen) p.frozen.push_back(static_cast<Bit>(b));
    return p;
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, NodeKind>> shape(const NodePlan& plan) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, NodeKind>> v;
    for (const NodeDescriptor& d : plan.nodes) v.emplace_back(d.base, d.width, d.kind);
    return v;
}

}  // namespace

TEST_CASE("classification is greedy-maximal in priority order") {
    using Row = std::tuple<std::uint32_t, std::uint32_t, NodeKind>;
    const RateProfile p84 = pac84().profile();  // frozen at 0,1,2,4

    SECTION("all four kinds: the (8,4) profile is one Rev and one SPC node") {
        const auto s = shape(classify(p84, KindSet::all()));
        REQUIRE(s == std::vector<Row>{{0, 4, NodeKind::Rev}, {4, 4, NodeKind::Spc}});
    }
    SECTION("without SPC the right half splits further") {
        const auto s = shape(classify(p84, KindSet::three()));
        REQUIRE(s == std::vector<Row>{{0, 4, NodeKind::Rev},
                                      {4, 2, NodeKind::Rev},
                                      {6, 2, NodeKind::Rate1}});
    }
    SECTION("no kinds enabled: every leaf is General") {
        const NodePlan plan = classify(p84, KindSet::none());
        REQUIRE(plan.nodes.size() == 8);
        for (const NodeDescriptor& d : plan.nodes) {
            REQUIRE(d.width == 1);
            REQUIRE(d.kind == NodeKind::General);
        }
    }
    SECTION("uniform profiles collapse to a single root node") {
        const auto all_frozen = shape(classify(mask_profile({1, 1, 1, 1}), KindSet::all()));
        REQUIRE(all_frozen == std::vector<Row>{{0, 4, NodeKind::Rate0}});
        const auto all_info = shape(classify(mask_profile({0, 0, 0, 0}), KindSet::all()));
        REQUIRE(all_info == std::vector<Row>{{0, 4, NodeKind::Rate1}});
    }
    SECTION("a frozen-then-info pair is Rev before SPC") {
        const RateProfile fi = mask_profile({1, 0});
        REQUIRE(shape(classify(fi, KindSet::all())) == std::vector<Row>{{0, 2, NodeKind::Rev}});
        KindSet only_spc;
        only_spc.spc = true;
        REQUIRE(shape(classify(fi, only_spc)) == std::vector<Row>{{0, 2, NodeKind::Spc}});
        KindSet only_rev;
        only_rev.rev = true;
        REQUIRE(shape(classify(fi, only_rev)) == std::vector<Row>{{0, 2, NodeKind::Rev}});
    }
    SECTION("terminals partition the leaves for random profiles") {
        CounterRng rng(31, 0, 0);
        for (int t = 0; t < 20; ++t) {
            RateProfile p;
            p.frozen.resize(64);
            for (auto& b : p.frozen) b = rng.next_bit();
            for (KindSet ks : {KindSet::none(), KindSet::three(), KindSet::all()}) {
                const NodePlan plan = classify(p, ks);
                std::uint32_t next = 0;
                for (const NodeDescriptor& d : plan.nodes) {
                    REQUIRE(d.base == next);
                    REQUIRE(d.width == (std::uint32_t{64} >> d.depth));
                    next += d.width;
                    if (!ks.contains(d.kind)) {
                        REQUIRE(d.kind == NodeKind::General);
                        REQUIRE(d.width == 1);
                    }
                }
                REQUIRE(next == 64);
            }
        }
    }
}

TEST_CASE("split-round accounting per node kind") {
    const CodeConfig cfg = pac84();
    const auto f = make_frame(cfg, 2.0, 910, 0);
    SECTION("all four kinds at L=4: one Rev split, W-1 SPC rounds") {
        ListDecoder dec(cfg, 4, Variant::Fast4);
        const DecodeResult res = dec.decode(f.llr);
        REQUIRE(res.stats.node_invocations[static_cast<std::size_t>(NodeKind::Rev)] == 1);
        REQUIRE(res.stats.node_invocations[static_cast<std::size_t>(NodeKind::Spc)] == 1);
        REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Rev)] == 1);
        REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Spc)] == 3);
    }
    SECTION("list size 1 caps SPC rounds at L-1 = 0") {
        ListDecoder dec(cfg, 1, Variant::Fast4);
        const DecodeResult res = dec.decode(f.llr);
        REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Spc)] == 0);
        REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Rev)] == 1);
    }
    SECTION("an all-information code is one Rate-1 node with min(L-1, N) rounds") {
        const CodeConfig all_info = make_config(8, 8, {0, 1, 2, 3, 4, 5, 6, 7}, {1, 1, 1});
        const auto g = make_frame(all_info, 3.0, 911, 0);
        ListDecoder dec(all_info, 4, Variant::Fast3);
        const DecodeResult res = dec.decode(g.llr);
        REQUIRE(res.stats.node_invocations[static_cast<std::size_t>(NodeKind::Rate1)] == 1);
        REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Rate1)] == 3);
        ListDecoder wide(all_info, 64, Variant::Fast3);
        REQUIRE(wide.decode(g.llr).stats.split_rounds[static_cast<std::size_t>(NodeKind::Rate1)] ==
                8);
    }
}

TEST_CASE("Rev candidates are bitwise complements; SPC survivors satisfy parity") {
    const CodeConfig cfg = make_config(16, 8, rm_profile(16, 8).info_indices(), {1, 0, 1, 1});
    ListDecoder dec(cfg, 4, Variant::Fast4);
    std::size_t rev_events = 0, spc_entries = 0;
    dec.set_observer([&](const NodeEvent& ev) {
        if (ev.kind == NodeKind::Rev) {
            ++rev_events;
            for (const auto& [b0, b1] : ev.rev_candidates) {
                REQUIRE(b0.size() == ev.width);
                for (std::size_t i = 0; i < b0.size(); ++i) REQUIRE(b1[i] == (b0[i] ^ 1));
            }
        } else if (ev.kind == NodeKind::Spc) {
            for (const auto& [beta, u0] : ev.spc_survivors) {
                ++spc_entries;
                Bit parity = 0;
                for (Bit b : beta) parity ^= b;
                REQUIRE(parity == u0);
            }
        }
    });
    for (std::uint64_t t = 0; t < 50; ++t) dec.decode(make_frame(cfg, 1.0, 912, t).llr);
    REQUIRE(rev_events > 0);
    REQUIRE(spc_entries > 0);
}

TEST_CASE("Rev node from a zero register offers the all-zero and all-one halves") {
    // A width-2 code whose only information bit is the last one: the two
    // candidate partial-sum vectors per entering path must be (0,0) and (1,1).
    const CodeConfig cfg = make_config(2, 1, {1}, {1, 1, 1});
    ListDecoder dec(cfg, 2, Variant::Fast4);
    bool seen = false;
    dec.set_observer([&](const NodeEvent& ev) {
        REQUIRE(ev.kind == NodeKind::Rev);
        REQUIRE(ev.rev_candidates.size() == 1);
        REQUIRE(ev.rev_candidates[0].first == BitVector{0, 0});
        REQUIRE(ev.rev_candidates[0].second == BitVector{1, 1});
        seen = true;
    });
    dec.decode({0.5, -1.25});
    REQUIRE(seen);
}

TEST_CASE("Rate-0 node charges the whole-node metric in place") {
    const CodeConfig cfg = make_config(4, 0, {}, {1, 1, 1});
    const LlrVector llr{1.5, -2.0, 0.25, -0.5};
    const DecodeResult res = decode_fast_list(llr, cfg, 4, Variant::Fast4);
    REQUIRE(res.survivors.size() == 1);
    REQUIRE_THAT(res.pm, Catch::Matchers::WithinRel(2.5, 1e-12));  // |-2.0| + |-0.5|
    REQUIRE(res.survivors[0].root_beta == BitVector(4, 0));
    REQUIRE(res.survivors[0].uhat == BitVector(4, 0));
}

TEST_CASE("Rate-1 node at list size 1 is a plain hard decision") {
    const CodeConfig cfg = make_config(4, 4, {0, 1, 2, 3}, {1, 1});
    const LlrVector llr{0.75, -2.0, 3.0, -0.25};
    ListDecoder dec(cfg, 1, Variant::Fast3);
    dec.set_collect_survivors(true);
    const DecodeResult res = dec.decode(llr);
    REQUIRE(res.pm == 0.0);
    REQUIRE(res.stats.split_rounds[static_cast<std::size_t>(NodeKind::Rate1)] == 0);
    REQUIRE(res.survivors[0].root_beta == hard_decision(llr));
}

TEST_CASE("SPC node at list size 1 repairs parity at the least-reliable position") {
    // Frozen first leaf, zero register: the node's own parity target is 0.
    const CodeConfig cfg = make_config(4, 3, {1, 2, 3}, {1, 1});
    ListDecoder dec(cfg, 1, Variant::Fast4);
    dec.set_collect_survivors(true);
    SECTION("hard decisions already satisfy parity: nothing changes, no cost") {
        const LlrVector llr{2.0, -1.0, 3.0, -4.0};  // hard (0,1,0,1), parity 0
        const DecodeResult res = dec.decode(llr);
        REQUIRE(res.pm == 0.0);
        REQUIRE(res.survivors[0].root_beta == BitVector{0, 1, 0, 1});
    }
    SECTION("odd parity flips the least-reliable bit and pays its magnitude") {
        const LlrVector llr{2.0, -1.0, 3.0, 4.0};  // hard (0,1,0,0), parity 1
        const DecodeResult res = dec.decode(llr);
        REQUIRE_THAT(res.pm, Catch::Matchers::WithinRel(1.0, 1e-12));
        REQUIRE(res.survivors[0].root_beta == BitVector{0, 0, 0, 0});
    }
}

TEST_CASE("fast and baseline decoders agree on random codes") {
    CounterRng rng(32, 0, 0);
    std::uint64_t frame = 0;
    for (int case_i = 0; case_i < 36; ++case_i) {
        const std::size_t N = std::size_t{8} << (case_i % 3);  // 8, 16, 32
        const std::size_t K = 1 + static_cast<std::size_t>(rng.next() % (N - 1));
        const CodeConfig cfg = make_config(N, K, pactest::random_info_set(rng, N, K),
                                           pactest::random_conv(rng, 1 + case_i % 4));
        const std::size_t L = std::size_t{1} << (case_i % 4);  // 1, 2, 4, 8
        ListDecoder base(cfg, L, Variant::List);
        ListDecoder fast3(cfg, L, Variant::Fast3);
        ListDecoder fast4(cfg, L, Variant::Fast4);
        for (int t = 0; t < 25; ++t, ++frame) {
            const auto f = make_frame(cfg, 1.5, 913, frame);
            const DecodeResult want = base.decode(f.llr);
            for (ListDecoder* dec : {&fast3, &fast4}) {
                const DecodeResult got = dec->decode(f.llr);
                REQUIRE(got.info_bits == want.info_bits);
                REQUIRE_THAT(got.pm, Catch::Matchers::WithinRel(want.pm, 1e-9) ||
                                         Catch::Matchers::WithinAbs(want.pm, 1e-12));
            }
        }
    }
}

TEST_CASE("a KindSet argument mirrors the named variants") {
    const CodeConfig cfg = pac84();
    const auto f = make_frame(cfg, 2.0, 914, 1);
    const DecodeResult via_variant = decode_fast_list(f.llr, cfg, 4, Variant::Fast3);
    const DecodeResult via_kinds = decode_fast_list(f.llr, cfg, 4, KindSet::three());
    REQUIRE(via_variant.info_bits == via_kinds.info_bits);
    REQUIRE(via_variant.pm == via_kinds.pm);
}

TEST_CASE("noiseless loopback for every variant") {
    const CodeConfig cfg = make_config(64, 32, rm_profile(64, 32).info_indices(),
                                       {1, 0, 1, 1, 0, 1, 1});
    CounterRng rng(33, 0, 0);
    for (int t = 0; t < 10; ++t) {
        BitVector d(32);
        for (auto& b : d) b = rng.next_bit();
        const LlrVector llr = saturated_llrs(pac_encode(d, cfg));
        for (Variant v : {Variant::List, Variant::Fast3, Variant::Fast4})
            for (std::size_t L : {std::size_t{1}, std::size_t{4}}) {
                const DecodeResult res = decode_fast_list(llr, cfg, L, v);
                REQUIRE(res.info_bits == d);
                REQUIRE(res.pm == 0.0);
            }
    }
}

TEST_CASE("matched-seed frame-error indicators rarely differ between fast variants") {
    // The four-kind and three-kind plans explore slightly different candidate
    // sets, so per-frame agreement is statistical, not exact; at a working
    // SNR the two decoders' error indicators should agree on nearly every frame.
    const CodeConfig cfg = make_config(128, 32, rm_profile(128, 32).info_indices(),
                                       {1, 0, 1, 1, 0, 1, 1});
    ListDecoder a(cfg, 4, Variant::Fast4);
    ListDecoder b(cfg, 4, Variant::Fast3);
    std::uint64_t err_a = 0, err_b = 0;
    const std::uint64_t frames = 400;
    for (std::uint64_t t = 0; t < frames; ++t) {
        const auto f = make_frame(cfg, 1.0, 915, t);
        err_a += a.decode(f.llr).info_bits != f.data;
        err_b += b.decode(f.llr).info_bits != f.data;
    }
    const double p1 = static_cast<double>(err_a) / frames;
    const double p2 = static_cast<double>(err_b) / frames;
    const double pooled = (static_cast<double>(err_a) + static_cast<double>(err_b)) /
                          (2.0 * static_cast<double>(frames));
    const double sigma3 = 3.0 * std::sqrt(std::max(pooled * (1.0 - pooled) * 2.0 /
                                                       static_cast<double>(frames),
                                                   1e-12));
    REQUIRE(std::fabs(p1 - p2) <= std::max(sigma3, 0.05));
}
