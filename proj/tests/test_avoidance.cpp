#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "sav/avoidance.hpp"
#include "sav/permutation.hpp"

using namespace sav;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool order_iso(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

// choose every index subset of size |q| and test order-isomorphism
bool brute_contains_from(const std::vector<int>& w, const std::vector<int>& q, std::size_t start,
                         std::vector<int>& picked) {
    if (picked.size() == q.size()) return order_iso(picked, q);
    for (std::size_t i = start; i + (q.size() - picked.size()) <= w.size(); ++i) {
        picked.push_back(w[i]);
        if (brute_contains_from(w, q, i + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

bool brute_contains(const Permutation& p, const Pattern& q) {
    std::vector<int> picked;
    return brute_contains_from(p.one_line(), q.one_line(), 0, picked);
}

bool brute_ends_at_last(const Permutation& p, const Pattern& q) {
    const auto& w = p.one_line();
    const auto& qv = q.one_line();
    if (w.size() < qv.size() || qv.empty()) return false;
    std::vector<int> head(qv.begin(), qv.end() - 1);
    std::vector<int> picked;
    // pick the first |q|-1 pattern letters before the last word position,
    // then verify the full tuple including the pinned last entry
    struct Rec {
        const std::vector<int>& w;
        const std::vector<int>& qv;
        bool run(std::size_t start, std::vector<int>& picked) const {
            if (picked.size() + 1 == qv.size()) {
                std::vector<int> full = picked;
                full.push_back(w.back());
                return order_iso(full, qv);
            }
            for (std::size_t i = start; i + 1 < w.size(); ++i) {
                picked.push_back(w[i]);
                if (run(i + 1, picked)) return true;
                picked.pop_back();
            }
            return false;
        }
    };
    // need enough room on the left
    if (w.size() - 1 < qv.size() - 1) return false;
    return Rec{w, qv}.run(0, picked);
}

const std::vector<Pattern>& small_patterns() {
    static const std::vector<Pattern> qs = {P("123"), P("132"), P("213"), P("231"),
                                            P("312"), P("321"), P("12"),  P("21"),
                                            P("1234"), P("2413"), P("3142")};
    return qs;
}

}  // namespace

TEST_CASE("containment basics", "[avoidance]") {
    REQUIRE(contains(P("4123"), P("312")));
    REQUIRE(contains(P("35142"), P("2413")));
    REQUIRE(avoids(P("4321"), P("123")));
    REQUIRE(avoids(P("12"), P("123")));  // pattern longer than the word
    REQUIRE(contains(P("312"), P("312")));
    REQUIRE(avoids(Permutation(), P("1")));
    REQUIRE_THROWS_AS(contains(P("312"), Permutation()), std::invalid_argument);
    REQUIRE_THROWS_AS(find_pattern(P("312"), Permutation()), std::invalid_argument);
}

TEST_CASE("fast paths agree with subset brute force", "[avoidance]") {
    for (int n = 0; n <= 6; ++n)
        for (const Permutation& p : all_perms(n))
            for (const Pattern& q : small_patterns())
                REQUIRE(contains(p, q) == brute_contains(p, q));
}

TEST_CASE("last-position containment matches brute force", "[avoidance]") {
    for (int n = 1; n <= 5; ++n)
        for (const Permutation& p : all_perms(n))
            for (const Pattern& q : small_patterns())
                REQUIRE(detail::word_contains_ending_at_last(p.one_line(), q.one_line()) ==
                        brute_ends_at_last(p, q));
}

TEST_CASE("find_pattern returns a valid occurrence", "[avoidance]") {
    for (const Permutation& p : all_perms(5)) {
        for (const Pattern& q : small_patterns()) {
            const auto witness = find_pattern(p, q);
            REQUIRE(witness.has_value() == contains(p, q));
            if (!witness) continue;
            const auto& pos = witness->positions;
            REQUIRE(static_cast<int>(pos.size()) == q.size());
            REQUIRE(std::is_sorted(pos.begin(), pos.end()));
            REQUIRE(pos.front() >= 1);
            REQUIRE(pos.back() <= p.size());
            std::vector<int> sub;
            for (int i : pos) sub.push_back(p(i));
            REQUIRE(order_iso(sub, q.one_line()));
        }
    }
}

TEST_CASE("longest increasing subsequence", "[avoidance]") {
    REQUIRE(lis_length(P("75863142")) == 2);
    REQUIRE(lis_length(Permutation::identity(6)) == 6);
    REQUIRE(lis_length(P("54321")) == 1);
    REQUIRE(lis_length(Permutation()) == 0);

    for (const Permutation& p : all_perms(6)) {
        const auto& w = p.one_line();  // O(n^2) reference
        std::vector<int> best(w.size(), 1);
        int ref = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
            ref = std::max(ref, best[i]);
        }
        REQUIRE(lis_length(p) == ref);
    }
}

TEST_CASE("strong avoidance needs the square too", "[avoidance]") {
    REQUIRE(strongly_avoids(P("75863142"), P("123")));
    // 2413 avoids 321 but its square 4321 does not
    REQUIRE(avoids(P("2413"), P("321")));
    REQUIRE(square(P("2413")) == P("4321"));
    REQUIRE(!strongly_avoids(P("2413"), P("321")));
    REQUIRE(strongly_avoids(Permutation(), P("21")));

    for (const Permutation& p : all_perms(5))
        REQUIRE(strongly_avoids(p, P("312")) ==
                (brute_contains(p, P("312")) == false && brute_contains(square(p), P("312")) == false));
}
