#pragma once

// Exact permutation algebra on {1..n} in one-line notation.
//
// Composition convention, used everywhere in this library:
//     compose(p, q)(i) = p(q(i))
// square(p) = compose(p, p) is the same under either convention.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sav {

/// A permutation of {1..n} stored in one-line notation: entry at position i
/// (1-based) is one_line()[i-1]. n = 0 is the empty permutation, a valid
/// value (it is the constant term of every generating function here).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        if (n < 0) throw std::invalid_argument("identity: negative length");
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), unchecked_tag{});
    }

    /// Validates that `values` is a bijection on {1..n}. The empty list is
    /// the empty permutation.
    static Permutation from_one_line(std::vector<int> values) {
        const int n = static_cast<int>(values.size());
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : values) {
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("duplicate permutation entry " + std::to_string(v));
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
        return Permutation(std::move(values), unchecked_tag{});
    }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Value at 1-based position i. Precondition: 1 <= i <= size().
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& one_line() const { return values_; }

    auto operator<=>(const Permutation&) const = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> v, unchecked_tag) : values_(std::move(v)) {}

    std::vector<int> values_;

    friend Permutation unchecked_permutation(std::vector<int> values);
};

/// Wraps an already-valid one-line vector without re-validating. For
/// internal hot paths; callers must guarantee validity.
inline Permutation unchecked_permutation(std::vector<int> values) {
    return Permutation(std::move(values), Permutation::unchecked_tag{});
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: length mismatch");
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
    return unchecked_permutation(std::move(out));
}

inline Permutation square(const Permutation& p) { return compose(p, p); }

inline Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(p(i) - 1)] = i;
    return unchecked_permutation(std::move(out));
}

/// 180-degree rotation of the permutation matrix: rc(p)(i) = n+1 - p(n+1-i).
/// An involution on permutations; commutes with squaring.
inline Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
    return unchecked_permutation(std::move(out));
}

/// p followed by r with r's entries shifted above p's values.
inline Permutation direct_sum(const Permutation& p, const Permutation& r) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size() + r.size()));
    out.insert(out.end(), p.one_line().begin(), p.one_line().end());
    for (int v : r.one_line()) out.push_back(v + p.size());
    return unchecked_permutation(std::move(out));
}

inline bool is_identity(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != i) return false;
    return true;
}

inline bool is_involution(const Permutation& p) { return is_identity(square(p)); }

/// Cycles of positions under i -> p(i). Canonical form: each cycle starts at
/// its smallest element, cycles sorted by smallest element, fixed points
/// included as singletons. order is the least m >= 1 with p^m = identity.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    long long order = 1;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    CycleDecomposition out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        int i = start;
        do {
            seen[static_cast<std::size_t>(i - 1)] = 1;
            cycle.push_back(i);
            i = p(i);
        } while (i != start);
        const long long len = static_cast<long long>(cycle.size());
        const long long g = std::gcd(out.order, len);
        long long lcm = 0;
        if (__builtin_mul_overflow(out.order / g, len, &lcm))
            throw std::overflow_error("cycle_decomposition: order overflows 64 bits");
        out.order = lcm;
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

/// Compact digits for n <= 9 ("75863142"), space-separated otherwise.
inline std::string to_string(const Permutation& p) {
    std::string s;
    if (p.size() <= 9) {
        for (int v : p.one_line()) s += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < p.size(); ++i) {
            if (i > 0) s += ' ';
            s += std::to_string(p.one_line()[static_cast<std::size_t>(i)]);
        }
    }
    return s;
}

/// Accepts compact digits ("312"), or entries separated by commas or
/// whitespace ("10,3,2,...", "24 21 26"). The empty string is the empty
/// permutation.
inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> values;
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos ||
        text.find('\t') != std::string::npos) {
        std::string piece;
        std::istringstream in(text);
        while (std::getline(in, piece, ',')) {
            std::istringstream ws(piece);
            int v = 0;
            while (ws >> v) values.push_back(v);
            if (!ws.eof())
                throw std::invalid_argument("cannot parse permutation entry in '" + piece + "'");
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("cannot parse permutation digit '") + c + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation::from_one_line(std::move(values));
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << to_string(p);
}

}  // namespace sav
