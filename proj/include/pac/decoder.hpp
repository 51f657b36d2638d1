// List decoding engine for PAC codes. One recursive core serves both the
// baseline bit-by-bit list decoder (every leaf visited) and the fast variants
// that stop at Rate-0 / Rate-1 / Rev / SPC nodes and decode them in closed form.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <span>
#include <utility>

#include "pac/convolution.hpp"
#include "pac/node_plan.hpp"
#include "pac/polar.hpp"
#include "pac/sc_kernel.hpp"
#include "pac/types.hpp"

namespace pac {

// Indices of the <= L smallest metrics, ordered by (metric, index); ties at
// the cut keep the lower index. Input order is the candidate creation order.
inline std::vector<std::uint32_t> select_survivors(std::span<const double> pms, std::size_t L) {
    std::vector<std::uint32_t> idx(pms.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (pms[a] != pms[b]) return pms[a] < pms[b];
        return a < b;
    });
    if (idx.size() > L) idx.resize(L);
    return idx;
}

// Per-kind counters; indexed by static_cast<size_t>(NodeKind).
struct DecodeStats {
    std::array<std::size_t, 5> node_invocations{};
    std::array<std::size_t, 5> split_rounds{};

    std::size_t total_split_rounds() const noexcept {
        std::size_t s = 0;
        for (std::size_t v : split_rounds) s += v;
        return s;
    }
};

// Instrumentation record emitted once per constituent-node invocation.
struct NodeEvent {
    NodeKind kind = NodeKind::General;
    std::uint32_t depth = 0, base = 0, width = 0;
    std::size_t splits = 0;  // selection rounds performed
    // Rev: the two candidate partial-sum vectors of each entering path.
    std::vector<std::pair<BitVector, BitVector>> rev_candidates;
    // SPC: per surviving path, the chosen partial sums and the path's u0.
    std::vector<std::pair<BitVector, Bit>> spc_survivors;
};
using NodeObserver = std::function<void(const NodeEvent&)>;

struct Survivor {
    double pm = 0.0;
    BitVector info_bits;  // v̂ restricted to the information set
    BitVector vhat;       // full decided message vector
    BitVector uhat;       // convolution output along the path
    BitVector root_beta;  // partial sums at the tree root (codeword estimate)
};

struct DecodeResult {
    BitVector info_bits;  // winner's information bits, length K
    double pm = 0.0;      // winner's path metric
    std::vector<Survivor> survivors;  // filled only when requested
    DecodeStats stats;
};

class ListDecoder {
public:
    ListDecoder(CodeConfig cfg, std::size_t L, Variant variant)
        : ListDecoder(std::move(cfg), L, enabled_kinds(variant)) {}

    ListDecoder(CodeConfig cfg, std::size_t L, KindSet kinds) : cfg_(std::move(cfg)), L_(L) {
        cfg_.validate();
        if (L_ < 1) throw ParamError("ListDecoder: list size must be at least 1");
        N_ = cfg_.N;
        n_ = cfg_.n();
        taps_ = ConvTaps(cfg_.c);
        frozen_ = cfg_.profile().frozen;
        plan_ = classify(cfg_.profile(), kinds);
        off_.resize(n_ + 1);
        for (std::size_t d = 0; d <= n_; ++d) off_[d] = 2 * N_ - 2 * (N_ >> d);
        pool_.resize(2 * L_);
        for (Slot& s : pool_) {
            s.alpha.resize(2 * N_ - 1);
            s.beta.resize(2 * N_ - 1);
            s.beta_left.resize(2 * N_ - 1);
            s.vhat.resize(N_);
            s.uhat.resize(N_);
        }
        scratch_bits_.resize(N_);
        active_.reserve(L_);
        free_.reserve(2 * L_);
        new_active_.reserve(L_);
    }

    const NodePlan& plan() const noexcept { return plan_; }
    const CodeConfig& config() const noexcept { return cfg_; }
    std::size_t list_size() const noexcept { return L_; }

    void set_observer(NodeObserver obs) { obs_ = std::move(obs); }
    void set_collect_survivors(bool on) noexcept { collect_survivors_ = on; }

    DecodeResult decode(const LlrVector& y) {
        if (y.size() != N_) throw ParamError("decode: LLR vector length must equal N");
        stats_ = DecodeStats{};
        active_.clear();
        free_.clear();
        for (std::uint32_t s = static_cast<std::uint32_t>(pool_.size()); s-- > 1;) free_.push_back(s);
        active_.push_back(0);
        pool_[0].pm = 0.0;
        pool_[0].reg = 0;
        std::copy(y.begin(), y.end(), pool_[0].alpha.begin());

        descend(1, 0, 0, N_);

        std::size_t best = 0;
        for (std::size_t i = 1; i < active_.size(); ++i)
            if (pool_[active_[i]].pm < pool_[active_[best]].pm) best = i;

        DecodeResult res;
        res.stats = stats_;
        const Slot& win = pool_[active_[best]];
        res.pm = win.pm;
        res.info_bits.resize(cfg_.K);
        for (std::size_t i = 0; i < cfg_.K; ++i) res.info_bits[i] = win.vhat[cfg_.A[i]];
        if (collect_survivors_) {
            res.survivors.reserve(active_.size());
            for (std::uint32_t slot : active_) {
                const Slot& s = pool_[slot];
                Survivor sv;
                sv.pm = s.pm;
                sv.vhat = s.vhat;
                sv.uhat = s.uhat;
                sv.root_beta.assign(s.beta.begin(), s.beta.begin() + N_);
                sv.info_bits.resize(cfg_.K);
                for (std::size_t i = 0; i < cfg_.K; ++i) sv.info_bits[i] = s.vhat[cfg_.A[i]];
                res.survivors.push_back(std::move(sv));
            }
        }
        return res;
    }

private:
    struct Slot {
        double pm = 0.0;
        std::uint64_t reg = 0;
        std::vector<double> alpha;    // flat per-depth LLR workspace
        std::vector<Bit> beta;        // flat per-depth partial sums
        std::vector<Bit> beta_left;   // saved left-child partial sums
        BitVector vhat, uhat;
    };

    // Staged candidate during node-internal split rounds.
    struct Staged {
        double pm = 0.0;
        std::uint32_t parent = 0;          // position in active_ at node entry
        Bit gamma = 0;                     // SPC parity state
        std::vector<std::uint32_t> flips;  // node-local positions flipped vs. hard decision
    };

    double* alpha_at(std::uint32_t slot, std::size_t d) { return pool_[slot].alpha.data() + off_[d]; }
    Bit* beta_at(std::uint32_t slot, std::size_t d) { return pool_[slot].beta.data() + off_[d]; }
    Bit* beta_left_at(std::uint32_t slot, std::size_t d) {
        return pool_[slot].beta_left.data() + off_[d];
    }

    void copy_slot(std::uint32_t dst, std::uint32_t src) {
        Slot& a = pool_[dst];
        const Slot& b = pool_[src];
        a.pm = b.pm;
        a.reg = b.reg;
        std::copy(b.alpha.begin(), b.alpha.end(), a.alpha.begin());
        std::copy(b.beta.begin(), b.beta.end(), a.beta.begin());
        std::copy(b.beta_left.begin(), b.beta_left.end(), a.beta_left.begin());
        std::copy(b.vhat.begin(), b.vhat.end(), a.vhat.begin());
        std::copy(b.uhat.begin(), b.uhat.end(), a.uhat.begin());
    }

    // Replace the active set with the staged survivors (already in survivor
    // order). The first survivor of a parent keeps the parent's slot; further
    // ones get clones taken before any in-place mutation.
    template <class Apply>
    void materialize(const std::vector<Staged>& surv, Apply&& apply) {
        const std::size_t P = active_.size();
        cnt_.assign(P, 0);
        for (const Staged& s : surv) ++cnt_[s.parent];
        clone_base_.assign(P, 0);
        clones_.clear();
        for (std::size_t l = 0; l < P; ++l) {
            clone_base_[l] = static_cast<std::uint32_t>(clones_.size());
            for (std::size_t e = 1; e < cnt_[l]; ++e) {
                const std::uint32_t dst = free_.back();
                free_.pop_back();
                copy_slot(dst, active_[l]);
                clones_.push_back(dst);
            }
        }
        used_.assign(P, 0);
        new_active_.clear();
        for (std::size_t i = 0; i < surv.size(); ++i) {
            const Staged& s = surv[i];
            const std::uint32_t slot =
                used_[s.parent] == 0 ? active_[s.parent]
                                     : clones_[clone_base_[s.parent] + used_[s.parent] - 1];
            ++used_[s.parent];
            pool_[slot].pm = s.pm;
            apply(pool_[slot], s, i);
            new_active_.push_back(slot);
        }
        for (std::size_t l = 0; l < P; ++l)
            if (cnt_[l] == 0) free_.push_back(active_[l]);
        active_.swap(new_active_);
    }

    // Run one selection round over staged candidates; result is in (pm, index) order.
    void select_round(std::vector<Staged>& cand, std::vector<Staged>& out) {
        cand_pm_.resize(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) cand_pm_[i] = cand[i].pm;
        const std::vector<std::uint32_t> sel = select_survivors(cand_pm_, L_);
        out.clear();
        for (std::uint32_t i : sel) out.push_back(std::move(cand[i]));
    }

    void descend(std::size_t id, std::size_t depth, std::size_t base, std::size_t width) {
        if (plan_.is_terminal(id)) {
            const NodeDescriptor& node = plan_.node_of(id);
            switch (node.kind) {
                case NodeKind::Rate0: return node_rate0(node, depth);
                case NodeKind::Rate1: return node_rate1(node, depth);
                case NodeKind::Rev: return node_rev(node, depth);
                case NodeKind::Spc: return node_spc(node, depth);
                case NodeKind::General:
                    return frozen_[base] ? leaf_frozen(base, depth) : leaf_info(base, depth);
            }
            return;
        }
        const std::size_t h = width / 2;
        for (std::uint32_t slot : active_) {
            const double* a = alpha_at(slot, depth);
            double* out = alpha_at(slot, depth + 1);
            for (std::size_t i = 0; i < h; ++i) out[i] = f_op(a[i], a[i + h]);
        }
        descend(2 * id, depth + 1, base, h);
        for (std::uint32_t slot : active_) {
            const double* a = alpha_at(slot, depth);
            const Bit* bl = beta_at(slot, depth + 1);
            Bit* save = beta_left_at(slot, depth + 1);
            std::copy(bl, bl + h, save);
            double* out = alpha_at(slot, depth + 1);
            for (std::size_t i = 0; i < h; ++i) out[i] = g_op(a[i], a[i + h], save[i]);
        }
        descend(2 * id + 1, depth + 1, base + h, h);
        for (std::uint32_t slot : active_) {
            const Bit* bl = beta_left_at(slot, depth + 1);
            const Bit* br = beta_at(slot, depth + 1);
            Bit* b = beta_at(slot, depth);
            for (std::size_t i = 0; i < h; ++i) {
                b[i] = bl[i] ^ br[i];
                b[h + i] = br[i];
            }
        }
    }

    void leaf_frozen(std::size_t base, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::General)];
        for (std::uint32_t slot : active_) {
            Slot& s = pool_[slot];
            const Bit u = conv_step_enc(s.reg, 0, taps_);
            s.pm += decision_penalty(alpha_at(slot, depth)[0], u);
            s.vhat[base] = 0;
            s.uhat[base] = u;
            beta_at(slot, depth)[0] = u;
        }
    }

    void leaf_info(std::size_t base, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::General)];
        ++stats_.split_rounds[static_cast<std::size_t>(NodeKind::General)];
        const std::size_t P = active_.size();
        stage_.clear();
        for (Bit b = 0; b < 2; ++b)
            for (std::uint32_t l = 0; l < P; ++l) {
                const Slot& s = pool_[active_[l]];
                // u for message bit b, without touching the register yet
                const Bit fb = static_cast<Bit>(std::popcount(s.reg & taps_.taps) & 1);
                Staged c;
                c.pm = s.pm + decision_penalty(alpha_at(active_[l], depth)[0],
                                               static_cast<Bit>(b ^ fb));
                c.parent = l;
                c.gamma = b;  // reused as the branch bit
                stage_.push_back(std::move(c));
            }
        select_round(stage_, stage_out_);
        materialize(stage_out_, [&](Slot& s, const Staged& st, std::size_t) {
            const Bit v = st.gamma;
            const Bit u = conv_step_enc(s.reg, v, taps_);
            s.vhat[base] = v;
            s.uhat[base] = u;
            beta_at(static_cast<std::uint32_t>(&s - pool_.data()), depth)[0] = u;
        });
    }

    void node_rate0(const NodeDescriptor& node, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::Rate0)];
        const std::size_t W = node.width;
        for (std::uint32_t slot : active_) {
            Slot& s = pool_[slot];
            Bit* u = scratch_bits_.data();
            for (std::size_t i = 0; i < W; ++i) u[i] = conv_step_enc(s.reg, 0, taps_);
            std::copy(u, u + W, s.uhat.begin() + node.base);
            std::fill(s.vhat.begin() + node.base, s.vhat.begin() + node.base + W, Bit{0});
            Bit* b = beta_at(slot, depth);
            std::copy(u, u + W, b);
            butterfly(b, W);
            s.pm = calc_pm(s.pm, alpha_at(slot, depth), b, W);
        }
        if (obs_) {
            NodeEvent ev;
            ev.kind = NodeKind::Rate0;
            ev.depth = node.depth;
            ev.base = node.base;
            ev.width = node.width;
            ev.splits = 0;
            obs_(ev);
        }
    }

    void node_rate1(const NodeDescriptor& node, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::Rate1)];
        const std::size_t W = node.width;
        const std::size_t P = active_.size();
        const std::size_t rounds = std::min(L_ - 1, W);
        stats_.split_rounds[static_cast<std::size_t>(NodeKind::Rate1)] += rounds;

        stage_hard_.resize(P * W);
        stage_order_.resize(P * W);
        for (std::uint32_t l = 0; l < P; ++l) {
            const double* a = alpha_at(active_[l], depth);
            Bit* h = stage_hard_.data() + l * W;
            std::uint32_t* ord = stage_order_.data() + l * W;
            for (std::size_t i = 0; i < W; ++i) {
                h[i] = hard_decision_bit(a[i]);
                ord[i] = static_cast<std::uint32_t>(i);
            }
            std::sort(ord, ord + W, [&](std::uint32_t x, std::uint32_t y) {
                const double ax = std::fabs(a[x]), ay = std::fabs(a[y]);
                if (ax != ay) return ax < ay;
                return x < y;
            });
        }

        stage_out_.clear();
        for (std::uint32_t l = 0; l < P; ++l) {
            Staged s;
            s.pm = pool_[active_[l]].pm;
            s.parent = l;
            stage_out_.push_back(std::move(s));
        }
        for (std::size_t r = 0; r < rounds; ++r) {
            stage_.clear();
            for (Bit b = 0; b < 2; ++b)
                for (const Staged& s : stage_out_) {
                    const std::uint32_t pos = stage_order_[s.parent * W + r];
                    const double a = alpha_at(active_[s.parent], depth)[pos];
                    const Bit hard = stage_hard_[s.parent * W + pos];
                    Staged c = s;
                    if (b != hard) {
                        c.pm += std::fabs(a);
                        c.flips.push_back(pos);
                    }
                    stage_.push_back(std::move(c));
                }
            select_round(stage_, stage_out_);
        }

        materialize(stage_out_, [&](Slot& s, const Staged& st, std::size_t) {
            const std::uint32_t slot = static_cast<std::uint32_t>(&s - pool_.data());
            Bit* b = beta_at(slot, depth);
            std::copy(stage_hard_.begin() + st.parent * W, stage_hard_.begin() + (st.parent + 1) * W, b);
            for (std::uint32_t pos : st.flips) b[pos] ^= 1;
            Bit* u = scratch_bits_.data();
            std::copy(b, b + W, u);
            butterfly(u, W);
            for (std::size_t i = 0; i < W; ++i) {
                s.uhat[node.base + i] = u[i];
                s.vhat[node.base + i] = conv_step_inv(s.reg, u[i], taps_);
            }
        });
        if (obs_) {
            NodeEvent ev;
            ev.kind = NodeKind::Rate1;
            ev.depth = node.depth;
            ev.base = node.base;
            ev.width = node.width;
            ev.splits = rounds;
            obs_(ev);
        }
    }

    void node_rev(const NodeDescriptor& node, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::Rev)];
        stats_.split_rounds[static_cast<std::size_t>(NodeKind::Rev)] += 1;
        const std::size_t W = node.width;
        const std::size_t P = active_.size();

        NodeEvent ev;
        if (obs_) {
            ev.kind = NodeKind::Rev;
            ev.depth = node.depth;
            ev.base = node.base;
            ev.width = node.width;
            ev.splits = 1;
        }

        // Per entering path: convolution outputs for the all-zero message, the
        // register after the W-1 forced zeros, and the branch-0 partial sums.
        stage_u_.resize(P * W);
        stage_beta0_.resize(P * W);
        stage_reg_.resize(P);
        stage_.clear();
        stage_.resize(2 * P);
        for (std::uint32_t l = 0; l < P; ++l) {
            const Slot& s = pool_[active_[l]];
            std::uint64_t reg = s.reg;
            Bit* u = stage_u_.data() + l * W;
            for (std::size_t i = 0; i + 1 < W; ++i) u[i] = conv_step_enc(reg, 0, taps_);
            stage_reg_[l] = reg;
            u[W - 1] = static_cast<Bit>(std::popcount(reg & taps_.taps) & 1);  // last bit for v = 0
            Bit* b0 = stage_beta0_.data() + l * W;
            std::copy(u, u + W, b0);
            butterfly(b0, W);
            const double* a = alpha_at(active_[l], depth);
            double pm0 = s.pm, pm1 = s.pm;
            for (std::size_t i = 0; i < W; ++i) {
                pm0 += decision_penalty(a[i], b0[i]);
                pm1 += decision_penalty(a[i], static_cast<Bit>(b0[i] ^ 1));
            }
            stage_[l] = Staged{pm0, l, Bit{0}, {}};
            stage_[P + l] = Staged{pm1, l, Bit{1}, {}};
            if (obs_) {
                BitVector beta0(b0, b0 + W), beta1(W);
                for (std::size_t i = 0; i < W; ++i) beta1[i] = b0[i] ^ 1;
                ev.rev_candidates.emplace_back(std::move(beta0), std::move(beta1));
            }
        }
        select_round(stage_, stage_out_);
        materialize(stage_out_, [&](Slot& s, const Staged& st, std::size_t) {
            const std::uint32_t slot = static_cast<std::uint32_t>(&s - pool_.data());
            const Bit v = st.gamma;  // the single split bit
            const Bit* u = stage_u_.data() + st.parent * W;
            const Bit* b0 = stage_beta0_.data() + st.parent * W;
            std::fill(s.vhat.begin() + node.base, s.vhat.begin() + node.base + W - 1, Bit{0});
            s.vhat[node.base + W - 1] = v;
            std::copy(u, u + W, s.uhat.begin() + node.base);
            s.uhat[node.base + W - 1] = static_cast<Bit>(u[W - 1] ^ v);
            Bit* b = beta_at(slot, depth);
            for (std::size_t i = 0; i < W; ++i) b[i] = static_cast<Bit>(b0[i] ^ v);
            s.reg = ((stage_reg_[st.parent] << 1) | v) & taps_.mask;
        });
        if (obs_) obs_(ev);
    }

    void node_spc(const NodeDescriptor& node, std::size_t depth) {
        ++stats_.node_invocations[static_cast<std::size_t>(NodeKind::Spc)];
        const std::size_t W = node.width;
        const std::size_t P = active_.size();
        const std::size_t rounds = std::min(L_ - 1, W - 1);
        stats_.split_rounds[static_cast<std::size_t>(NodeKind::Spc)] += rounds;

        stage_hard_.resize(P * W);
        stage_order_.resize(P * W);
        stage_u_.resize(P);  // u0 of each entering path
        stage_out_.clear();
        for (std::uint32_t l = 0; l < P; ++l) {
            const Slot& s = pool_[active_[l]];
            const double* a = alpha_at(active_[l], depth);
            Bit* h = stage_hard_.data() + l * W;
            std::uint32_t* ord = stage_order_.data() + l * W;
            Bit parity = 0;
            for (std::size_t i = 0; i < W; ++i) {
                h[i] = hard_decision_bit(a[i]);
                parity ^= h[i];
                ord[i] = static_cast<std::uint32_t>(i);
            }
            std::sort(ord, ord + W, [&](std::uint32_t x, std::uint32_t y) {
                const double ax = std::fabs(a[x]), ay = std::fabs(a[y]);
                if (ax != ay) return ax < ay;
                return x < y;
            });
            const Bit u0 = static_cast<Bit>(std::popcount(s.reg & taps_.taps) & 1);  // v0 = 0
            stage_u_[l] = u0;
            Staged st;
            st.parent = l;
            st.gamma = static_cast<Bit>(parity ^ u0);
            st.pm = s.pm + (st.gamma ? std::fabs(a[ord[0]]) : 0.0);
            stage_out_.push_back(std::move(st));
        }

        for (std::size_t r = 1; r <= rounds; ++r) {
            stage_.clear();
            for (Bit b = 0; b < 2; ++b)
                for (const Staged& s : stage_out_) {
                    const double* a = alpha_at(active_[s.parent], depth);
                    const std::uint32_t pos = stage_order_[s.parent * W + r];
                    const double a0 = std::fabs(a[stage_order_[s.parent * W]]);
                    const Bit hard = stage_hard_[s.parent * W + pos];
                    Staged c = s;
                    if (b != hard) {
                        c.pm = calc_pm2(c.pm, &a[pos], &b, 1, c.gamma, a0);
                        c.gamma ^= 1;
                        c.flips.push_back(pos);
                    }
                    stage_.push_back(std::move(c));
                }
            select_round(stage_, stage_out_);
        }

        NodeEvent ev;
        if (obs_) {
            ev.kind = NodeKind::Spc;
            ev.depth = node.depth;
            ev.base = node.base;
            ev.width = node.width;
            ev.splits = rounds;
        }
        materialize(stage_out_, [&](Slot& s, const Staged& st, std::size_t) {
            const std::uint32_t slot = static_cast<std::uint32_t>(&s - pool_.data());
            Bit* b = beta_at(slot, depth);
            std::copy(stage_hard_.begin() + st.parent * W, stage_hard_.begin() + (st.parent + 1) * W, b);
            for (std::uint32_t pos : st.flips) b[pos] ^= 1;
            // restore the parity constraint on the least reliable position
            b[stage_order_[st.parent * W]] ^= st.gamma;
            if (obs_) ev.spc_survivors.emplace_back(BitVector(b, b + W), stage_u_[st.parent]);
            Bit* u = scratch_bits_.data();
            std::copy(b, b + W, u);
            butterfly(u, W);
            const Bit u0 = conv_step_enc(s.reg, 0, taps_);
            s.vhat[node.base] = 0;
            s.uhat[node.base] = u0;
            for (std::size_t i = 1; i < W; ++i) {
                s.uhat[node.base + i] = u[i];
                s.vhat[node.base + i] = conv_step_inv(s.reg, u[i], taps_);
            }
        });
        if (obs_) obs_(ev);
    }

    static void butterfly(Bit* x, std::size_t W) {
        for (std::size_t h = 1; h < W; h <<= 1)
            for (std::size_t i = 0; i < W; i += 2 * h)
                for (std::size_t j = i; j < i + h; ++j) x[j] ^= x[j + h];
    }

    CodeConfig cfg_;
    std::size_t L_ = 1, N_ = 0, n_ = 0;
    ConvTaps taps_;
    BitVector frozen_;
    NodePlan plan_;
    std::vector<std::size_t> off_;
    std::vector<Slot> pool_;
    std::vector<std::uint32_t> active_, free_, new_active_;
    std::vector<std::size_t> cnt_;
    std::vector<std::uint32_t> clone_base_, clones_, used_;
    std::vector<Staged> stage_, stage_out_;
    std::vector<double> cand_pm_;
    std::vector<Bit> stage_hard_, stage_beta0_;
    std::vector<std::uint32_t> stage_order_;
    std::vector<Bit> stage_u_;
    std::vector<std::uint64_t> stage_reg_;
    std::vector<Bit> scratch_bits_;
    DecodeStats stats_;
    NodeObserver obs_;
    bool collect_survivors_ = false;
};

}  // namespace pac
