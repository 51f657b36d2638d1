// Min-sum successive-cancellation primitives shared by all decoders:
// f/g message updates, partial-sum combination, hard decisions, and the
// path-metric accumulation subroutines.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>

#include "pac/types.hpp"

namespace pac {

// Min-sum check update with sgn(0) = 0: a zero input forces a zero output.
inline double f_op(double a, double b) noexcept {
    const int sa = (a > 0.0) - (a < 0.0);
    const int sb = (b > 0.0) - (b < 0.0);
    return static_cast<double>(sa * sb) * std::min(std::fabs(a), std::fabs(b));
}

// Variable update given the left partial sum: a + b when beta_l = 0, b - a when 1.
inline double g_op(double a, double b, Bit beta_l) noexcept {
    return beta_l ? b - a : a + b;
}

// Hard decision of one LLR; a zero LLR decides 0 (fixed rule for reproducibility).
inline Bit hard_decision_bit(double a) noexcept {
    return a < 0.0 ? Bit{1} : Bit{0};
}

inline BitVector hard_decision(const LlrVector& a) {
    BitVector b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = hard_decision_bit(a[i]);
    return b;
}

// Partial-sum combination: first half l ⊕ r, second half r.
inline BitVector combine(const BitVector& beta_l, const BitVector& beta_r) {
    if (beta_l.size() != beta_r.size()) throw ParamError("combine: halves must have equal length");
    BitVector out(2 * beta_l.size());
    for (std::size_t i = 0; i < beta_l.size(); ++i) {
        out[i] = beta_l[i] ^ beta_r[i];
        out[beta_l.size() + i] = beta_r[i];
    }
    return out;
}

// Penalty of deciding bit beta against LLR alpha: |alpha| iff beta disagrees
// with the hard decision (zero LLRs contribute nothing either way).
inline double decision_penalty(double alpha, Bit beta) noexcept {
    return beta != hard_decision_bit(alpha) ? std::fabs(alpha) : 0.0;
}

// Accumulate |alpha_i| over every position whose bit disagrees with its LLR.
inline double calc_pm(double pm, const double* alpha, const Bit* beta, std::size_t len) noexcept {
    for (std::size_t i = 0; i < len; ++i) pm += decision_penalty(alpha[i], beta[i]);
    return pm;
}

inline double calc_pm(double pm, std::span<const double> alpha, std::span<const Bit> beta) {
    if (alpha.size() != beta.size()) throw ParamError("calc_pm: length mismatch");
    return calc_pm(pm, alpha.data(), beta.data(), alpha.size());
}

// Single-parity-check variant: a disagreement costs |alpha_i| + (1 - 2 gamma)|alpha0|,
// where alpha0 is the least-reliable LLR of the node and gamma the current parity state.
inline double calc_pm2(double pm, const double* alpha, const Bit* beta, std::size_t len,
                       Bit gamma, double alpha0) noexcept {
    const double a0 = std::fabs(alpha0);
    const double correction = (1.0 - 2.0 * static_cast<double>(gamma)) * a0;
    for (std::size_t i = 0; i < len; ++i)
        if (beta[i] != hard_decision_bit(alpha[i])) pm += std::fabs(alpha[i]) + correction;
    return pm;
}

inline double calc_pm2(double pm, std::span<const double> alpha, std::span<const Bit> beta,
                       Bit gamma, double alpha0) {
    if (alpha.size() != beta.size()) throw ParamError("calc_pm2: length mismatch");
    return calc_pm2(pm, alpha.data(), beta.data(), alpha.size(), gamma, alpha0);
}

}  // namespace pac
