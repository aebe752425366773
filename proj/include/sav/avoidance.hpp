#pragma once

// Pattern containment and strong-avoidance predicates.
//
// A word of distinct integers contains the pattern q when some subsequence
// is order-isomorphic to q. The generic matcher is a positional backtracking
// search; monotone increasing patterns reduce to a longest-increasing-
// subsequence length query, and length-3 patterns have an O(n^2) scan.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "sav/permutation.hpp"

namespace sav {

using Pattern = Permutation;

/// 1-based, strictly increasing positions whose entries realize the pattern.
struct ContainmentWitness {
    std::vector<int> positions;
};

namespace detail {

inline bool is_increasing_run(const std::vector<int>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != static_cast<int>(i) + 1) return false;
    return true;
}

/// Longest increasing subsequence length of a distinct-valued word
/// (patience sorting, O(n log n)).
inline int lis_length_word(std::span<const int> word) {
    std::vector<int> tails;
    for (int v : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

/// 0-based indices of some increasing subsequence of length k, or empty if
/// none exists.
inline std::vector<int> lis_witness_word(std::span<const int> word, int k) {
    std::vector<int> tails_idx;
    std::vector<int> prev(word.size(), -1);
    std::vector<int> tails;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        const int v = word[static_cast<std::size_t>(i)];
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        const auto pos = static_cast<std::size_t>(it - tails.begin());
        if (pos > 0) prev[static_cast<std::size_t>(i)] = tails_idx[pos - 1];
        if (it == tails.end()) {
            tails.push_back(v);
            tails_idx.push_back(i);
        } else {
            *it = v;
            tails_idx[pos] = i;
        }
        if (static_cast<int>(tails.size()) >= k) {
            std::vector<int> chain;
            for (int j = tails_idx[static_cast<std::size_t>(k - 1)]; j != -1;
                 j = prev[static_cast<std::size_t>(j)])
                chain.push_back(j);
            std::reverse(chain.begin(), chain.end());
            chain.resize(static_cast<std::size_t>(k));
            return chain;
        }
    }
    return {};
}

/// Backtracking matcher. Matches q[r..] into word[i..]; `chosen` holds the
/// word values already assigned to q[0..r-1]. A candidate for q[r] must lie
/// strictly between the largest chosen value with a smaller pattern entry
/// and the smallest chosen value with a larger one. Prunes positions that
/// cannot fit the remaining pattern length. `out`, when non-null, receives
/// 0-based word indices of the match.
inline bool match_from(std::span<const int> word, const std::vector<int>& q, int i, int r,
                       std::vector<int>& chosen, std::vector<int>* out) {
    const int k = static_cast<int>(q.size());
    if (r == k) return true;
    const int n = static_cast<int>(word.size());
    for (; n - i >= k - r; ++i) {
        const int x = word[static_cast<std::size_t>(i)];
        bool ok = true;
        for (int s = 0; s < r && ok; ++s)
            ok = (x < chosen[static_cast<std::size_t>(s)]) == (q[static_cast<std::size_t>(r)] <
                                                               q[static_cast<std::size_t>(s)]);
        if (!ok) continue;
        chosen.push_back(x);
        if (out) out->push_back(i);
        if (match_from(word, q, i + 1, r + 1, chosen, out)) return true;
        chosen.pop_back();
        if (out) out->pop_back();
    }
    return false;
}

inline bool word_contains_generic(std::span<const int> word, const std::vector<int>& q) {
    std::vector<int> chosen;
    chosen.reserve(q.size());
    return match_from(word, q, 0, 0, chosen, nullptr);
}

/// O(n^2) scan for any length-3 pattern. For each middle position pick the
/// extremal admissible left value (largest when the pattern's third entry
/// lies below its first, smallest otherwise), then scan right for a
/// completion.
inline bool word_contains_3(std::span<const int> word, const std::vector<int>& q) {
    const int n = static_cast<int>(word.size());
    if (n < 3) return false;
    const int q1 = q[0], q2 = q[1], q3 = q[2];
    const bool left_above_mid = q1 > q2;
    const bool right_above_mid = q3 > q2;
    const bool right_above_left = q3 > q1;
    // prefer the left value that loosens the right element's constraint
    const bool want_max_left = !right_above_left;
    for (int j = 1; j + 1 < n; ++j) {
        const int m = word[static_cast<std::size_t>(j)];
        bool have_left = false;
        int best = 0;
        for (int i = 0; i < j; ++i) {
            const int v = word[static_cast<std::size_t>(i)];
            if ((v > m) != left_above_mid) continue;
            if (!have_left || (want_max_left ? v > best : v < best)) best = v;
            have_left = true;
        }
        if (!have_left) continue;
        for (int t = j + 1; t < n; ++t) {
            const int v = word[static_cast<std::size_t>(t)];
            if ((v > m) == right_above_mid && (v > best) == right_above_left) return true;
        }
    }
    return false;
}

inline bool word_contains(std::span<const int> word, const std::vector<int>& q) {
    if (q.empty()) throw std::invalid_argument("empty pattern");
    if (static_cast<int>(q.size()) > static_cast<int>(word.size())) return false;
    if (is_increasing_run(q)) return lis_length_word(word) >= static_cast<int>(q.size());
    if (q.size() == 3) return word_contains_3(word, q);
    return word_contains_generic(word, q);
}

/// Does some occurrence of q end exactly at the last word position?
inline bool word_contains_ending_at_last(std::span<const int> word, const std::vector<int>& q) {
    const int k = static_cast<int>(q.size());
    const int n = static_cast<int>(word.size());
    if (n < k) return false;
    // pin word.back() to q.back() and match the rest on the left
    const int last = word[static_cast<std::size_t>(n - 1)];
    std::vector<int> chosen;
    chosen.reserve(q.size());
    // reuse match_from with the roles reversed: match q[0..k-2] into
    // word[0..n-2] under the extra constraint imposed by the pinned pair.
    struct Pinned {
        std::span<const int> word;
        const std::vector<int>& q;
        int last_value;
        int k;
        bool run(int i, int r, std::vector<int>& chosen) const {
            if (r == k - 1) return true;
            const int n2 = static_cast<int>(word.size());
            for (; n2 - i >= (k - 1) - r; ++i) {
                const int x = word[static_cast<std::size_t>(i)];
                if ((x < last_value) != (q[static_cast<std::size_t>(r)] < q[static_cast<std::size_t>(k - 1)]))
                    continue;
                bool ok = true;
                for (int s = 0; s < r && ok; ++s)
                    ok = (x < chosen[static_cast<std::size_t>(s)]) ==
                         (q[static_cast<std::size_t>(r)] < q[static_cast<std::size_t>(s)]);
                if (!ok) continue;
                chosen.push_back(x);
                if (run(i + 1, r + 1, chosen)) return true;
                chosen.pop_back();
            }
            return false;
        }
    };
    Pinned pinned{word.first(static_cast<std::size_t>(n - 1)), q, last, k};
    return pinned.run(0, 0, chosen);
}

}  // namespace detail

inline int lis_length(const Permutation& p) { return detail::lis_length_word(p.one_line()); }

/// Finds an occurrence of q in p, or nullopt when p avoids q. Monotone
/// increasing patterns go through the LIS machinery.
inline std::optional<ContainmentWitness> find_pattern(const Permutation& p, const Pattern& q) {
    if (q.empty()) throw std::invalid_argument("empty pattern");
    const auto& word = p.one_line();
    const auto& qv = q.one_line();
    if (q.size() > p.size()) return std::nullopt;
    std::vector<int> idx;
    if (detail::is_increasing_run(qv)) {
        idx = detail::lis_witness_word(word, q.size());
        if (idx.empty()) return std::nullopt;
    } else {
        std::vector<int> chosen;
        chosen.reserve(qv.size());
        if (!detail::match_from(word, qv, 0, 0, chosen, &idx)) return std::nullopt;
    }
    ContainmentWitness w;
    w.positions.reserve(idx.size());
    for (int i : idx) w.positions.push_back(i + 1);
    return w;
}

/// Boolean containment with the fast paths (LIS for monotone increasing q,
/// O(n^2) scan for |q| = 3); agrees with find_pattern everywhere.
inline bool contains(const Permutation& p, const Pattern& q) {
    return detail::word_contains(p.one_line(), q.one_line());
}

inline bool avoids(const Permutation& p, const Pattern& q) { return !contains(p, q); }

/// Both p and p^2 avoid q.
inline bool strongly_avoids(const Permutation& p, const Pattern& q) {
    return avoids(p, q) && avoids(square(p), q);
}

}  // namespace sav
