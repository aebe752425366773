#pragma once

// Exhaustive enumeration of (strongly) q-avoiding permutations.
//
// The search places values position by position, in increasing value order,
// so complete permutations appear in lexicographic one-line order. A branch
// is cut as soon as the standardized prefix contains q; for the strong mode
// the square condition is checked on the completed permutation, with an
// optional early check on the partial square (every chain i -> p(i) ->
// p(p(i)) whose two hops are both assigned). Correctness never depends on
// the early check; it only prunes.
//
// Work splits deterministically by prefix: partitioned_count assigns every
// surviving prefix of a fixed depth to an independent task and sums the
// task subtotals, so the result matches the serial count for any thread
// count, including 1.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sav/avoidance.hpp"
#include "sav/permutation.hpp"

namespace sav {

enum class SearchMode { avoiding, strongly_avoiding };

enum class SearchPredicate { none, ends_in_1, involution, cycle_lengths_1_3 };

enum class Provenance { enumerated, recurrence, closed_form };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::enumerated: return "enumerated";
        case Provenance::recurrence: return "recurrence";
        case Provenance::closed_form: return "closed_form";
    }
    return "?";
}

struct CountEntry {
    int n = 0;
    long long count = 0;
    Provenance provenance = Provenance::enumerated;
};

struct CountTable {
    Pattern pattern;
    std::vector<CountEntry> entries;
};

/// Raised when a count passes the configured limit; signals the desk-scale
/// boundary rather than silently saturating.
class CountLimitError : public std::runtime_error {
public:
    explicit CountLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchConfig {
    int n = 0;
    Pattern pattern;
    SearchMode mode = SearchMode::strongly_avoiding;
    SearchPredicate predicate = SearchPredicate::none;
    int prefix_depth = 0;
    long long count_limit = std::numeric_limits<long long>::max();
    bool early_square_check = false;
};

/// Standardization (rank-reduction to 1..len) of a growing prefix,
/// maintained by push/pop updates instead of recomputed from scratch.
/// push/pop are O(len).
class PrefixStandardizer {
public:
    void push(int value) {
        int rank = 1;
        for (int r : raw_)
            if (r < value) ++rank;
        for (int& s : std_)
            if (s >= rank) ++s;
        std_.push_back(rank);
        raw_.push_back(value);
    }

    void pop() {
        const int rank = std_.back();
        std_.pop_back();
        raw_.pop_back();
        for (int& s : std_)
            if (s > rank) --s;
    }

    int size() const { return static_cast<int>(std_.size()); }
    const std::vector<int>& standardized() const { return std_; }

    /// From-scratch rank reduction, the reference the incremental updates
    /// are property-tested against.
    static std::vector<int> standardize(const std::vector<int>& word) {
        std::vector<int> out(word.size());
        for (std::size_t i = 0; i < word.size(); ++i) {
            int rank = 1;
            for (std::size_t j = 0; j < word.size(); ++j)
                if (word[j] < word[i]) ++rank;
            out[i] = rank;
        }
        return out;
    }

private:
    std::vector<int> raw_;
    std::vector<int> std_;
};

namespace detail {

/// Tracks the entries of p^2 that are already determined by a partial
/// assignment: p^2(i) is known once both p(i) and p(p(i)) are placed.
/// Positions fill left to right, so placing p(pos) = v can close at most two
/// chains: the one through pos (if p(v) is known) and the one reaching pos
/// (if some placed position maps to pos).
class PartialSquare {
public:
    explicit PartialSquare(int n)
        : known_(static_cast<std::size_t>(n + 1), 0), inv_(static_cast<std::size_t>(n + 1), 0) {}

    // Returns how many square entries became known (0..2); callers pass the
    // same value back to revert().
    int place(const std::vector<int>& prefix, int pos, int value) {
        inv_[static_cast<std::size_t>(value)] = pos;
        int added = 0;
        if (value <= pos) {  // p(value) is already assigned
            known_[static_cast<std::size_t>(pos)] = prefix[static_cast<std::size_t>(value - 1)];
            undo_.push_back(pos);
            ++added;
        }
        const int i = inv_[static_cast<std::size_t>(pos)];
        if (i != 0 && i != pos) {  // p(i) = pos, so p^2(i) = value
            known_[static_cast<std::size_t>(i)] = value;
            undo_.push_back(i);
            ++added;
        }
        return added;
    }

    void revert(int value, int added) {
        for (int t = 0; t < added; ++t) {
            known_[static_cast<std::size_t>(undo_.back())] = 0;
            undo_.pop_back();
        }
        inv_[static_cast<std::size_t>(value)] = 0;
    }

    /// Known square entries in position order.
    void known_word(std::vector<int>& out) const {
        out.clear();
        for (std::size_t i = 1; i < known_.size(); ++i)
            if (known_[i] != 0) out.push_back(known_[i]);
    }

private:
    std::vector<int> known_;  // known_[i] = p^2(i), 0 if undetermined
    std::vector<int> inv_;    // inv_[v] = position holding value v, 0 if unplaced
    std::vector<int> undo_;
};

inline bool passes_predicate(const Permutation& p, SearchPredicate pred) {
    switch (pred) {
        case SearchPredicate::none: return true;
        case SearchPredicate::ends_in_1: return p.size() >= 1 && p(p.size()) == 1;
        case SearchPredicate::involution: return is_involution(p);
        case SearchPredicate::cycle_lengths_1_3: {
            for (const auto& c : cycle_decomposition(p).cycles)
                if (c.size() != 1 && c.size() != 3) return false;
            return true;
        }
    }
    return false;
}

/// Depth-first enumeration over value assignments. One instance holds the
/// whole mutable search state; run_from replays a fixed prefix and explores
/// only its subtree.
class Enumerator {
public:
    using Visitor = std::function<bool(const Permutation&)>;

    explicit Enumerator(const SearchConfig& cfg)
        : cfg_(cfg), qv_(cfg.pattern.one_line()), used_(static_cast<std::size_t>(cfg.n + 1), 0),
          square_(cfg.n) {
        if (cfg_.n < 0) throw std::invalid_argument("search: negative n");
        if (cfg_.n > 64) throw std::invalid_argument("search: n > 64 is beyond desk scale");
        if (cfg_.pattern.empty()) throw std::invalid_argument("search: empty pattern");
        prefix_.reserve(static_cast<std::size_t>(cfg_.n));
    }

    /// Explores the subtree under `seed` (the whole tree when empty). The
    /// visitor returns false to stop; returns false on early stop.
    bool run_from(const std::vector<int>& seed, const Visitor& visit) {
        int pushed = 0;
        bool alive = true;
        for (int v : seed) {
            if (!admissible(v) || used_[static_cast<std::size_t>(v)]) {
                alive = false;
                break;
            }
            push(v);
            ++pushed;
            if (dead_after_push()) {
                alive = false;
                break;
            }
        }
        bool keep_going = true;
        if (alive) keep_going = descend(visit);
        while (pushed-- > 0) pop();
        return keep_going;
    }

    /// All surviving prefixes of exactly `depth` values, lexicographically.
    std::vector<std::vector<int>> surviving_prefixes(int depth) {
        std::vector<std::vector<int>> out;
        collect(depth, out);
        return out;
    }

private:
    bool descend(const Visitor& visit) {
        const int pos = static_cast<int>(prefix_.size());
        if (pos == cfg_.n) return emit(visit);
        for (int v = 1; v <= cfg_.n; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (!admissible(v)) continue;
            push(v);
            const bool dead = dead_after_push();
            const bool keep_going = dead || descend(visit);
            pop();
            if (!keep_going) return false;
        }
        return true;
    }

    void collect(int depth, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(prefix_.size()) == depth) {
            out.push_back(prefix_);
            return;
        }
        for (int v = 1; v <= cfg_.n; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (!admissible(v)) continue;
            push(v);
            if (!dead_after_push()) collect(depth, out);
            pop();
        }
    }

    bool admissible(int v) const {
        if (cfg_.predicate == SearchPredicate::ends_in_1) {
            const int pos = static_cast<int>(prefix_.size());  // 0-based position being filled
            if (v == 1 && pos != cfg_.n - 1) return false;
            if (v != 1 && pos == cfg_.n - 1) return false;
        }
        return true;
    }

    void push(int v) {
        prefix_.push_back(v);
        used_[static_cast<std::size_t>(v)] = 1;
        std_.push(v);
        if (use_square_check())
            square_added_.push_back(square_.place(prefix_, static_cast<int>(prefix_.size()), v));
    }

    void pop() {
        const int v = prefix_.back();
        if (use_square_check()) {
            square_.revert(v, square_added_.back());
            square_added_.pop_back();
        }
        std_.pop();
        used_[static_cast<std::size_t>(v)] = 0;
        prefix_.pop_back();
    }

    bool use_square_check() const {
        return cfg_.early_square_check && cfg_.mode == SearchMode::strongly_avoiding;
    }

    bool dead_after_push() {
        // an occurrence in the extended prefix must end at the new entry
        if (word_contains_ending_at_last(std_.standardized(), qv_)) return true;
        if (use_square_check() && square_added_.back() > 0) {
            square_.known_word(scratch_);
            if (static_cast<int>(scratch_.size()) >= static_cast<int>(qv_.size()) &&
                word_contains(scratch_, qv_))
                return true;
        }
        return false;
    }

    bool emit(const Visitor& visit) {
        Permutation p = unchecked_permutation(prefix_);
        if (cfg_.mode == SearchMode::strongly_avoiding && contains(square(p), cfg_.pattern))
            return true;
        if (!passes_predicate(p, cfg_.predicate)) return true;
        return visit(p);
    }

    SearchConfig cfg_;
    std::vector<int> qv_;
    std::vector<int> prefix_;
    std::vector<char> used_;
    PrefixStandardizer std_;
    PartialSquare square_;
    std::vector<int> square_added_;
    std::vector<int> scratch_;
};

inline long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw CountLimitError("count overflows 64-bit arithmetic");
    return out;
}

}  // namespace detail

/// Visits every permutation matching cfg (mode + predicate) in lexicographic
/// one-line order. The visitor returns false to stop early.
inline void for_each_matching(const SearchConfig& cfg,
                              const std::function<bool(const Permutation&)>& visit) {
    if (cfg.n == 0) {
        // the empty permutation matches every avoidance condition
        if (cfg.predicate == SearchPredicate::none ||
            cfg.predicate == SearchPredicate::involution ||
            cfg.predicate == SearchPredicate::cycle_lengths_1_3)
            visit(Permutation());
        return;
    }
    detail::Enumerator e(cfg);
    e.run_from({}, visit);
}

/// Exact count of permutations matching cfg. Throws CountLimitError once the
/// count passes cfg.count_limit.
inline CountEntry count_matching(const SearchConfig& cfg) {
    long long count = 0;
    for_each_matching(cfg, [&](const Permutation&) {
        if (count >= cfg.count_limit)
            throw CountLimitError("count exceeds limit " + std::to_string(cfg.count_limit) +
                                  " at n = " + std::to_string(cfg.n));
        ++count;
        return true;
    });
    return CountEntry{cfg.n, count, Provenance::enumerated};
}

inline std::vector<Permutation> enumerate_matching(const SearchConfig& cfg) {
    std::vector<Permutation> out;
    for_each_matching(cfg, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

inline CountEntry count_strongly_avoiding(const Pattern& q, int n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.pattern = q;
    cfg.mode = SearchMode::strongly_avoiding;
    return count_matching(cfg);
}

inline long long count_avoiding(const Pattern& q, int n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.pattern = q;
    cfg.mode = SearchMode::avoiding;
    return count_matching(cfg).count;
}

/// Same result as count_matching, computed as a sum over independent
/// prefix-rooted subtrees; subtotals are reduced by checked addition, so the
/// outcome is identical for any thread count. prefix_depth = 0 delegates to
/// the serial path.
inline CountEntry partitioned_count(const SearchConfig& cfg, int threads = 1) {
    if (cfg.prefix_depth < 0 || cfg.prefix_depth > std::max(cfg.n, 0))
        throw std::invalid_argument("partitioned_count: prefix_depth out of range");
    if (cfg.prefix_depth == 0 || cfg.n == 0) return count_matching(cfg);

    std::vector<std::vector<int>> tasks;
    {
        detail::Enumerator collector(cfg);
        tasks = collector.surviving_prefixes(cfg.prefix_depth);
    }

    std::vector<long long> subtotal(tasks.size(), 0);
    auto run_task = [&](std::size_t t) {
        detail::Enumerator e(cfg);
        long long local = 0;
        e.run_from(tasks[t], [&](const Permutation&) {
            ++local;
            return true;
        });
        subtotal[t] = local;
    };

    if (threads <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), tasks.size());
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                    run_task(t);
            });
        for (auto& th : pool) th.join();
    }

    long long total = 0;
    for (long long s : subtotal) total = detail::checked_add(total, s);
    if (total > cfg.count_limit)
        throw CountLimitError("count exceeds limit " + std::to_string(cfg.count_limit) +
                              " at n = " + std::to_string(cfg.n));
    return CountEntry{cfg.n, total, Provenance::enumerated};
}

}  // namespace sav
