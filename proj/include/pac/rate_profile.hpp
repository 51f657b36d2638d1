// Reed-Muller-style rate profiling (largest Hamming-weight indices)
// and the text file format for rate profiles: "N K" then the sorted
// information indices, whitespace-separated.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pac/types.hpp"

namespace pac {

// Select as information the K indices whose n-bit expansions have the largest
// Hamming weight; ties at the boundary weight are broken toward the larger index.
inline RateProfile rm_profile(std::size_t N, std::size_t K) {
    if (!is_power_of_two(N)) throw ParamError("rm_profile: N must be a power of two");
    if (K > N) throw ParamError("rm_profile: K must not exceed N");
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        const int wa = std::popcount(static_cast<std::uint64_t>(a));
        const int wb = std::popcount(static_cast<std::uint64_t>(b));
        if (wa != wb) return wa > wb;
        return a > b;
    });
    RateProfile p;
    p.frozen.assign(N, Bit{1});
    for (std::size_t i = 0; i < K; ++i) p.frozen[order[i]] = 0;
    return p;
}

struct ProfileFile {
    std::size_t N = 0;
    std::size_t K = 0;
    std::vector<std::size_t> A;  // sorted information indices
};

inline ProfileFile parse_profile_text(std::istream& in) {
    ProfileFile pf;
    if (!(in >> pf.N >> pf.K)) throw IoError("profile: expected header line \"N K\"");
    if (!is_power_of_two(pf.N)) throw IoError("profile: N must be a power of two");
    if (pf.K > pf.N) throw IoError("profile: K must not exceed N");
    pf.A.resize(pf.K);
    for (std::size_t i = 0; i < pf.K; ++i) {
        if (!(in >> pf.A[i])) throw IoError("profile: expected " + std::to_string(pf.K) + " information indices");
        if (pf.A[i] >= pf.N) throw IoError("profile: information index out of range");
        if (i > 0 && pf.A[i] <= pf.A[i - 1]) throw IoError("profile: indices must be strictly increasing");
    }
    std::size_t extra;
    if (in >> extra) throw IoError("profile: trailing data after the index list");
    return pf;
}

inline void format_profile_text(std::ostream& out, std::size_t N, const std::vector<std::size_t>& A) {
    out << N << ' ' << A.size() << '\n';
    for (std::size_t i = 0; i < A.size(); ++i) out << A[i] << (i + 1 < A.size() ? ' ' : '\n');
    if (A.empty()) out << '\n';
}

inline ProfileFile load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file: " + path);
    try {
        return parse_profile_text(in);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    }
}

inline void save_profile_file(const std::string& path, std::size_t N, const std::vector<std::size_t>& A) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    format_profile_text(out, N, A);
    if (!out) throw IoError("failed writing profile file: " + path);
}

}  // namespace pac
