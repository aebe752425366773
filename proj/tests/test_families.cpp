#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sav/avoidance.hpp"
#include "sav/families.hpp"
#include "sav/permutation.hpp"
#include "sav/search.hpp"

using namespace sav;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            f(parts);
            return;
        }
        for (int len = 1; len <= rest; ++len) {
            parts.push_back(len);
            self(self, rest - len);
            parts.pop_back();
        }
    };
    rec(rec, n);
}

}  // namespace

TEST_CASE("unimodal family members", "[families]") {
    REQUIRE(unimodal_ending_in_1(8, 5) == P("67854321"));
    REQUIRE(unimodal_ending_in_1(3, 2) == P("321"));
    REQUIRE(unimodal_ending_in_1(4, 2) == P("3421"));
    REQUIRE(unimodal_ending_in_1(1, 1) == P("1"));
    REQUIRE(square(unimodal_ending_in_1(4, 2)) == P("2143"));
    REQUIRE(strongly_avoids(unimodal_ending_in_1(4, 2), P("312")));

    REQUIRE_THROWS_AS(unimodal_ending_in_1(8, 3), std::domain_error);  // 2k < n
    REQUIRE_THROWS_AS(unimodal_ending_in_1(4, 5), std::domain_error);  // k > n
    REQUIRE_THROWS_AS(unimodal_ending_in_1(0, 0), std::domain_error);

    for (int n = 1; n <= 12; ++n)
        for (int k = (n + 1) / 2; k <= n; ++k)
            REQUIRE(strongly_avoids(unimodal_ending_in_1(n, k), P("312")));
}

TEST_CASE("closed-form square of the unimodal family", "[families]") {
    REQUIRE(square_of_unimodal(2, 2) == P("12"));
    REQUIRE(square_of_unimodal(9, 5) == P("4 3 2 1 5 9 8 7 6"));
    for (int n = 1; n <= 30; ++n)
        for (int k = (n + 1) / 2; k <= n; ++k)
            REQUIRE(square_of_unimodal(n, k) == square(unimodal_ending_in_1(n, k)));
    REQUIRE_THROWS_AS(square_of_unimodal(8, 3), std::domain_error);
}

TEST_CASE("ending-in-1 enumeration", "[families]") {
    REQUIRE(enumerate_strong_312_ending_in_1(1) == std::vector<Permutation>{P("1")});
    REQUIRE(enumerate_strong_312_ending_in_1(4) ==
            std::vector<Permutation>{P("3421"), P("4321")});
    REQUIRE(enumerate_strong_312_ending_in_1(5).size() == 2);
    for (int n = 2; n <= 12; ++n) {
        const auto fam = enumerate_strong_312_ending_in_1(n);
        REQUIRE(static_cast<int>(fam.size()) == n / 2);
        REQUIRE(std::is_sorted(fam.begin(), fam.end()));
    }
    // the family is exactly what an exhaustive search finds
    for (int n = 2; n <= 8; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.pattern = P("312");
        cfg.mode = SearchMode::strongly_avoiding;
        cfg.predicate = SearchPredicate::ends_in_1;
        REQUIRE(enumerate_matching(cfg) == enumerate_strong_312_ending_in_1(n));
    }
    REQUIRE_THROWS_AS(enumerate_strong_312_ending_in_1(0), std::domain_error);
}

TEST_CASE("layered constructor and recognizer", "[families]") {
    REQUIRE(layered({4, 4}) == P("43218765"));
    REQUIRE(layered({1, 1, 1}) == P("123"));
    REQUIRE(layered({}) == Permutation());
    REQUIRE(is_layered(layered({9, 9, 9})) == std::vector<int>{9, 9, 9});
    REQUIRE(!is_layered(P("231")).has_value());
    REQUIRE(!is_layered(P("312")).has_value());
    REQUIRE(is_layered(Permutation()) == std::vector<int>{});
    REQUIRE_THROWS_AS(layered({3, 0, 2}), std::domain_error);

    for (int n = 1; n <= 8; ++n) {
        for_each_composition(n, [&](const std::vector<int>& parts) {
            const Permutation p = layered(parts);
            REQUIRE(is_involution(p));
            REQUIRE(is_layered(p) == parts);
        });
    }
}

TEST_CASE("monotone witnesses", "[families]") {
    REQUIRE(monotone_witness(3) == P("75863142"));
    REQUIRE(monotone_witness(4) ==
            Permutation::from_one_line({24, 21, 26, 19, 23, 27, 20, 25, 22, 15, 12, 17, 10, 14,
                                        18, 11, 16, 13, 6,  3,  8,  1,  5,  9,  2,  7,  4}));

    const Permutation w5 = monotone_witness(5);
    REQUIRE(w5.size() == 64);
    const auto& base5 = monotone_witness_base(5);
    for (int i = 1; i <= 16; ++i) REQUIRE(w5(i) == base5[static_cast<std::size_t>(i - 1)] + 48);
    REQUIRE(monotone_witness(6).size() == 125);

    for (int k = 3; k <= 6; ++k) {
        const Permutation w = monotone_witness(k);
        const Pattern rising = Permutation::identity(k);
        const int m = k - 1;
        REQUIRE(avoids(w, rising));
        REQUIRE(is_layered(square(w)) == std::vector<int>(static_cast<std::size_t>(m), m * m));
        REQUIRE(cycle_decomposition(w).order == 4);
        REQUIRE(avoids(compose(w, square(w)), rising));

        // the base word squares to the full reversal of its ground set
        const Permutation base = Permutation::from_one_line(monotone_witness_base(k));
        REQUIRE(square(base) == layered({m * m}));
    }

    REQUIRE_THROWS_AS(monotone_witness(2), std::domain_error);
    REQUIRE_THROWS_AS(monotone_witness(7), std::domain_error);
    REQUIRE_THROWS_AS(monotone_witness_base(7), std::domain_error);
}

TEST_CASE("block-cyclic construction", "[families]") {
    const BlockSpec spec{{Block{1, 0}, Block{3, 2}, Block{2, 1}, Block{3, 1}}};
    REQUIRE(block_cyclic_from_spec(spec) == P("142365897"));
    REQUIRE(block_cyclic_from_spec(BlockSpec{{Block{4, 3}, Block{1, 0}, Block{4, 2}}}) ==
            P("412358967"));
    REQUIRE(block_cyclic_from_spec(BlockSpec{}) == Permutation());

    REQUIRE_THROWS_AS(block_cyclic_from_spec(BlockSpec{{Block{3, 0}}}), std::domain_error);
    REQUIRE_THROWS_AS(block_cyclic_from_spec(BlockSpec{{Block{2, 2}}}), std::domain_error);
    REQUIRE_THROWS_AS(block_cyclic_from_spec(BlockSpec{{Block{0, 0}}}), std::domain_error);
}

TEST_CASE("block-cyclic recognition", "[families]") {
    const auto id5 = recognize_block_cyclic(Permutation::identity(5));
    REQUIRE(id5.has_value());
    REQUIRE(id5->blocks == std::vector<Block>(5, Block{1, 0}));

    REQUIRE(!recognize_block_cyclic(P("321")).has_value());
    REQUIRE(!recognize_block_cyclic(P("2413")).has_value());
    REQUIRE(recognize_block_cyclic(P("2143"))->blocks ==
            std::vector<Block>{Block{2, 1}, Block{2, 1}});
    REQUIRE(recognize_block_cyclic(P("3412"))->blocks == std::vector<Block>{Block{4, 2}});

    for (int n = 0; n <= 8; ++n) {
        for (const Permutation& p : enumerate_block_cyclic(n)) {
            const auto spec = recognize_block_cyclic(p);
            REQUIRE(spec.has_value());
            REQUIRE(block_cyclic_from_spec(*spec) == p);
        }
    }

    // membership agrees with brute-force recognition over all of S_n
    for (int n = 0; n <= 6; ++n) {
        const auto family = enumerate_block_cyclic(n);
        const std::set<Permutation> in_family(family.begin(), family.end());
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Permutation p = Permutation::from_one_line(v);
            REQUIRE(recognize_block_cyclic(p).has_value() == (in_family.count(p) > 0));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("block-cyclic enumeration", "[families]") {
    REQUIRE(enumerate_block_cyclic(0) == std::vector<Permutation>{Permutation()});
    REQUIRE(enumerate_block_cyclic(2) == std::vector<Permutation>{P("12"), P("21")});
    REQUIRE(enumerate_block_cyclic(3) ==
            std::vector<Permutation>{P("123"), P("132"), P("213"), P("231"), P("312")});

    const std::vector<std::size_t> h = {1, 1, 2, 5, 12, 28, 65, 151, 351, 816, 1897};
    for (int n = 0; n <= 10; ++n) {
        const auto family = enumerate_block_cyclic(n);
        REQUIRE(family.size() == h[static_cast<std::size_t>(n)]);
        REQUIRE(std::is_sorted(family.begin(), family.end()));
    }
    REQUIRE_THROWS_AS(enumerate_block_cyclic(-1), std::domain_error);
}

TEST_CASE("powers of block-cyclic permutations stay in the family", "[families]") {
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : enumerate_block_cyclic(n)) {
            Permutation power = p;
            const long long order = cycle_decomposition(p).order;
            for (long long j = 1; j <= order; ++j) {
                REQUIRE(recognize_block_cyclic(power).has_value());
                REQUIRE(avoids(power, P("321")));
                power = compose(power, p);
            }
        }
    }
}
