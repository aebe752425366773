#pragma once

// Closed-form constructions and recognizers.
//
// Three families appear here. The unimodal permutations
// (k+1)(k+2)...n k(k-1)...1 with k >= n/2 are exactly the strongly
// 312-avoiding permutations ending in 1, and their squares have an equally
// explicit three-block form. The monotone witnesses are fixed permutations
// of length (k-1)^3 whose square is layered; they show Sav_n(12...k) > 0 at
// the largest length where that is possible at all. Block-cyclic
// permutations are concatenations of value-interval blocks, each a
// singleton or a cyclic rotation (s+1)...L 1...s of its interval; the
// family is closed under taking powers and avoids 321.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sav/permutation.hpp"

namespace sav {

/// (k+1)(k+2)...n k(k-1)...1. Requires n >= 1 and n/2 <= k <= n; for k = n
/// this is the decreasing permutation.
inline Permutation unimodal_ending_in_1(int n, int k) {
    if (n < 1) throw std::domain_error("unimodal_ending_in_1: n must be >= 1");
    if (k > n || 2 * k < n)
        throw std::domain_error("unimodal_ending_in_1: need n/2 <= k <= n, got k = " +
                                std::to_string(k) + " for n = " + std::to_string(n));
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int v = k + 1; v <= n; ++v) w.push_back(v);
    for (int v = k; v >= 1; --v) w.push_back(v);
    return unchecked_permutation(std::move(w));
}

/// The square of unimodal_ending_in_1(n, k) in closed form:
/// (n-k)...1 (n-k+1)...k n...(k+1).
inline Permutation square_of_unimodal(int n, int k) {
    if (n < 1) throw std::domain_error("square_of_unimodal: n must be >= 1");
    if (k > n || 2 * k < n)
        throw std::domain_error("square_of_unimodal: need n/2 <= k <= n, got k = " +
                                std::to_string(k) + " for n = " + std::to_string(n));
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int v = n - k; v >= 1; --v) w.push_back(v);
    for (int v = n - k + 1; v <= k; ++v) w.push_back(v);
    for (int v = n; v >= k + 1; --v) w.push_back(v);
    return unchecked_permutation(std::move(w));
}

/// All strongly 312-avoiding permutations of length n that end in 1 — the
/// unimodal family over admissible k, deduplicated (k = n-1 and k = n both
/// yield the decreasing permutation). Sorted; cardinality floor(n/2) for
/// n >= 2, and {1} for n = 1.
inline std::vector<Permutation> enumerate_strong_312_ending_in_1(int n) {
    if (n < 1) throw std::domain_error("enumerate_strong_312_ending_in_1: n must be >= 1");
    std::vector<Permutation> out;
    for (int k = (n + 1) / 2; k <= n; ++k) out.push_back(unimodal_ending_in_1(n, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Concatenation of decreasing runs whose value ranges ascend left to right.
inline Permutation layered(const std::vector<int>& layer_lengths) {
    std::vector<int> w;
    int offset = 0;
    for (int len : layer_lengths) {
        if (len < 1) throw std::domain_error("layered: layer lengths must be >= 1");
        for (int v = offset + len; v > offset; --v) w.push_back(v);
        offset += len;
    }
    return unchecked_permutation(std::move(w));
}

/// Layer lengths if p is layered, nullopt otherwise. Inverts layered().
inline std::optional<std::vector<int>> is_layered(const Permutation& p) {
    const auto& w = p.one_line();
    std::vector<int> lengths;
    std::size_t i = 0;
    while (i < w.size()) {
        const int top = w[i];  // a layer starting at position i+1 must peak here
        const int len = top - static_cast<int>(i);
        if (len < 1) return std::nullopt;
        for (int j = 0; j < len; ++j)
            if (w[i + static_cast<std::size_t>(j)] != top - j) return std::nullopt;
        lengths.push_back(len);
        i += static_cast<std::size_t>(len);
    }
    return lengths;
}

namespace detail {

// Base words for the monotone witnesses; w_k has length (k-1)^2 and its
// square is the reversal of 1..(k-1)^2.
inline const std::vector<int>& witness_base_word(int k) {
    static const std::vector<int> w3 = {3, 1, 4, 2};
    static const std::vector<int> w4 = {6, 3, 8, 1, 5, 9, 2, 7, 4};
    static const std::vector<int> w5 = {9, 5, 11, 7, 15, 3, 13, 1, 16, 4, 14, 2, 10, 6, 12, 8};
    static const std::vector<int> w6 = {14, 9,  18, 7,  16, 11, 22, 3,  24, 5,  20, 1, 13,
                                        25, 6,  21, 2,  23, 4,  15, 10, 19, 8,  17, 12};
    switch (k) {
        case 3: return w3;
        case 4: return w4;
        case 5: return w5;
        case 6: return w6;
    }
    throw std::domain_error("witness base words exist only for k in 3..6");
}

}  // namespace detail

/// The stored base word w_k (length (k-1)^2) the witness is assembled from.
inline const std::vector<int>& monotone_witness_base(int k) { return detail::witness_base_word(k); }

/// A permutation of length (k-1)^3 that avoids 12...k and whose square also
/// does: k-1 consecutive intervals, each a copy of the base word w_k, with
/// value offsets descending left to right (leftmost interval takes the
/// largest (k-1)^2 values). Supported for k in 3..6.
inline Permutation monotone_witness(int k) {
    const std::vector<int>& base = detail::witness_base_word(k);
    const int m = k - 1;
    const int block = m * m;
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m * block));
    for (int j = 1; j <= m; ++j) {
        const int offset = (m - j) * block;
        for (int v : base) w.push_back(v + offset);
    }
    return unchecked_permutation(std::move(w));
}

struct Block {
    int length = 1;
    int shift = 0;  // the block word is (shift+1)...length 1...shift; 0 only for singletons
    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockSpec {
    std::vector<Block> blocks;
    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Concatenates the blocks on ascending value intervals.
inline Permutation block_cyclic_from_spec(const BlockSpec& spec) {
    std::vector<int> w;
    int offset = 0;
    for (const Block& b : spec.blocks) {
        if (b.length < 1) throw std::domain_error("block_cyclic_from_spec: block length must be >= 1");
        if (b.shift < 0 || b.shift >= b.length)
            throw std::domain_error("block_cyclic_from_spec: need 0 <= shift < length");
        if (b.shift == 0 && b.length > 1)
            throw std::domain_error(
                "block_cyclic_from_spec: shift 0 is only valid for singleton blocks");
        for (int v = b.shift + 1; v <= b.length; ++v) w.push_back(offset + v);
        for (int v = 1; v <= b.shift; ++v) w.push_back(offset + v);
        offset += b.length;
    }
    return unchecked_permutation(std::move(w));
}

/// The block decomposition if p is block-cyclic, nullopt otherwise. The
/// split is the finest one, which is unique: a non-singleton block word
/// (s+1)...L 1...s has no proper prefix forming an initial value interval,
/// so blocks cannot merge ambiguously.
inline std::optional<BlockSpec> recognize_block_cyclic(const Permutation& p) {
    const auto& w = p.one_line();
    const int n = p.size();
    BlockSpec spec;
    int pos = 0;  // 0-based start of the current block
    while (pos < n) {
        int mx = 0;
        int end = -1;  // 0-based inclusive end of the minimal value-interval window
        for (int j = pos; j < n; ++j) {
            mx = std::max(mx, w[static_cast<std::size_t>(j)]);
            if (mx == j + 1) {
                end = j;
                break;
            }
        }
        if (end < 0) return std::nullopt;  // cannot happen for a permutation, but keep it total
        const int len = end - pos + 1;
        if (len == 1) {
            spec.blocks.push_back(Block{1, 0});
        } else {
            const int shift = w[static_cast<std::size_t>(pos)] - pos - 1;
            if (shift < 1 || shift >= len) return std::nullopt;
            for (int j = 0; j < len; ++j) {
                const int expect = (j < len - shift) ? shift + 1 + j : j - (len - shift) + 1;
                if (w[static_cast<std::size_t>(pos + j)] - pos != expect) return std::nullopt;
            }
            spec.blocks.push_back(Block{len, shift});
        }
        pos = end + 1;
    }
    return spec;
}

/// All block-cyclic permutations of length n, sorted. Their number is the
/// weighted composition count h_n (weight 1 for a part of size 1, k-1 for a
/// part of size k).
inline std::vector<Permutation> enumerate_block_cyclic(int n) {
    if (n < 0) throw std::domain_error("enumerate_block_cyclic: n must be >= 0");
    std::vector<Permutation> out;
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    auto extend = [&](auto&& self, int offset) -> void {
        if (offset == n) {
            out.push_back(unchecked_permutation(w));
            return;
        }
        for (int len = 1; len <= n - offset; ++len) {
            const int smin = (len == 1) ? 0 : 1;
            const int smax = (len == 1) ? 0 : len - 1;
            for (int s = smin; s <= smax; ++s) {
                for (int v = s + 1; v <= len; ++v) w.push_back(offset + v);
                for (int v = 1; v <= s; ++v) w.push_back(offset + v);
                self(self, offset + len);
                w.resize(static_cast<std::size_t>(offset));
            }
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sav
