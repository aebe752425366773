#pragma once

// The acceptance suite: ten end-to-end checks that pin the library's
// headline results — sequences, characterizations, witnesses, growth
// rates, and identities — with their tolerances fixed in code. The CLI
// `verify` subcommand and the standalone acceptance binary both run these.

#include <chrono>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "sav/avoidance.hpp"
#include "sav/experiments.hpp"
#include "sav/families.hpp"
#include "sav/permutation.hpp"
#include "sav/search.hpp"
#include "sav/series.hpp"

namespace sav {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, empty on pass
    double seconds = 0.0;
};

namespace detail {

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

inline const std::vector<long long>& pinned_312_sequence() {  // n = 1..10
    static const std::vector<long long> seq = {1, 2, 4, 9, 19, 41, 87, 186, 396, 845};
    return seq;
}

inline const std::vector<long long>& pinned_132_sequence() {  // n = 1..12
    static const std::vector<long long> seq = {1,   2,   5,   12,  24,  50,
                                               101, 202, 398, 806, 1568, 3148};
    return seq;
}

inline Check criterion_sequence_312() {
    Check c;
    const auto a = gf_coefficients(strong_312_gf(), 11);
    for (int n = 1; n <= 10; ++n)
        c.require(a[static_cast<std::size_t>(n)] == pinned_312_sequence()[static_cast<std::size_t>(n - 1)],
                  "recurrence value differs at n = " + std::to_string(n));
    c.require(a[11] == 1801, "recurrence value differs at n = 11");
    return c;
}

inline Check criterion_count_vs_recurrence_312() {
    Check c;
    const auto a = gf_coefficients(strong_312_gf(), 11);
    const Pattern q = Permutation::from_one_line({3, 1, 2});
    for (int n = 1; n <= 11; ++n) {
        const long long got = count_strongly_avoiding(q, n).count;
        c.require(BigInt(got) == a[static_cast<std::size_t>(n)],
                  "enumerated count " + std::to_string(got) + " at n = " + std::to_string(n) +
                      " differs from the recurrence");
    }
    return c;
}

inline Check criterion_sequence_132() {
    Check c;
    const unsigned hw = std::thread::hardware_concurrency();
    const int threads = hw > 0 ? static_cast<int>(hw) : 1;
    for (int n = 1; n <= 12; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.pattern = Permutation::from_one_line({1, 3, 2});
        cfg.prefix_depth = std::min(2, n);
        const long long got = partitioned_count(cfg, threads).count;
        const long long want = pinned_132_sequence()[static_cast<std::size_t>(n - 1)];
        c.require(got == want, "count at n = " + std::to_string(n) + " is " + std::to_string(got) +
                                   ", expected " + std::to_string(want));
    }
    return c;
}

inline Check criterion_ending_in_1() {
    Check c;
    for (int n = 2; n <= 10; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.pattern = Permutation::from_one_line({3, 1, 2});
        cfg.predicate = SearchPredicate::ends_in_1;
        const auto brute = enumerate_matching(cfg);  // lexicographic
        const auto family = enumerate_strong_312_ending_in_1(n);
        c.require(brute == family, "brute-force set differs from the unimodal family at n = " +
                                       std::to_string(n));
        c.require(static_cast<int>(family.size()) == n / 2,
                  "family size at n = " + std::to_string(n) + " is not floor(n/2)");
    }
    return c;
}

inline Check criterion_monotone_threshold() {
    Check c;
    c.require(count_strongly_avoiding(Permutation::identity(3), 9).count == 0,
              "found a strongly 123-avoiding permutation of length 9");
    for (int k = 3; k <= 6; ++k) {
        c.require(check_monotone_threshold(k, false).verdict == Verdict::holds,
                  "witness post-conditions failed for k = " + std::to_string(k));
        c.require(strongly_avoids(monotone_witness(k), Permutation::identity(k)),
                  "witness for k = " + std::to_string(k) + " is not strongly avoiding");
    }
    return c;
}

inline Check criterion_growth_rates() {
    Check c;
    const double r312 = smallest_positive_root(strong_312_gf().denominator, 1e-10);
    const double rh = smallest_positive_root(block_cyclic_gf().denominator, 1e-10);
    c.require(std::fabs(r312 - 0.4689899435) <= 1e-6, "root for the 312 denominator is off");
    c.require(std::fabs(rh - 0.430159709) <= 1e-6, "root for the block-cyclic denominator is off");
    c.require(std::fabs(growth_rate(strong_312_gf(), 1e-10) - 2.132241882) <= 1e-5,
              "312 growth rate is off");
    c.require(std::fabs(growth_rate(block_cyclic_gf(), 1e-10) - 2.324717957) <= 1e-5,
              "block-cyclic growth rate is off");
    return c;
}

inline Check criterion_block_cyclic() {
    Check c;
    const Pattern q321 = Permutation::from_one_line({3, 2, 1});
    const auto h = gf_coefficients(block_cyclic_gf(), 12);
    for (int n = 0; n <= 12; ++n)
        c.require(BigInt(enumerate_block_cyclic(n).size()) == h[static_cast<std::size_t>(n)],
                  "enumerated h_n differs from the recurrence at n = " + std::to_string(n));
    for (int n = 0; n <= 10; ++n) {
        for (const Permutation& p : enumerate_block_cyclic(n)) {
            const long long order = cycle_decomposition(p).order;
            Permutation power = p;
            for (long long t = 1; t <= order; ++t) {
                c.require(avoids(power, q321),
                          "a power of " + to_string(p) + " contains 321");
                c.require(recognize_block_cyclic(power).has_value(),
                          "a power of " + to_string(p) + " is not block-cyclic");
                power = compose(power, p);
            }
        }
        if (n >= 1) {
            const long long hn = static_cast<long long>(enumerate_block_cyclic(n).size());
            c.require(hn <= count_strongly_avoiding(q321, n).count,
                      "h_n exceeds the strongly 321-avoiding count at n = " + std::to_string(n));
        }
    }
    return c;
}

inline Check criterion_symmetries() {
    Check c;
    c.require(check_inverse_symmetry(Permutation::from_one_line({3, 1, 2}), 9).verdict ==
                  Verdict::holds,
              "inverse symmetry 312 vs 231 failed");
    c.require(check_revcomp_symmetry(Permutation::from_one_line({1, 3, 2}), 9).verdict ==
                  Verdict::holds,
              "reverse-complement symmetry 132 vs 213 failed");
    c.require(check_revcomp_symmetry(Permutation::from_one_line({3, 1, 2}), 8).verdict ==
                  Verdict::holds,
              "reverse-complement symmetry 312 vs 231 failed");
    return c;
}

inline Check criterion_functional_equation() {
    Check c;
    c.require(verify_functional_equation(20), "(1 - B(z)) * Sav312(z) != 1 through order 20");
    const auto b = sav312_b_coefficients(12);
    for (int n = 1; n <= 12; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.pattern = Permutation::from_one_line({3, 1, 2});
        cfg.predicate = SearchPredicate::ends_in_1;
        c.require(BigInt(count_matching(cfg).count) == b[static_cast<std::size_t>(n)],
                  "ending-in-1 count differs from the B coefficient at n = " + std::to_string(n));
    }
    return c;
}

inline Check criterion_side_results() {
    Check c;
    for (int n = 0; n <= 12; ++n) {
        const auto [enumerated, binom] = count_132_involutions(n);
        c.require(enumerated == binom, "involution count differs from the central binomial at n = " +
                                           std::to_string(n));
    }
    const Pattern q132 = Permutation::from_one_line({1, 3, 2});
    for (int n = 1; n <= 12; ++n)
        c.require(count_strongly_avoiding(q132, n).count <= (1LL << n),
                  "the 2^n bound fails at n = " + std::to_string(n));
    c.require(check_fekete(Permutation::from_one_line({3, 1, 2}), 9).verdict == Verdict::holds,
              "supermultiplicativity for 312 failed");
    const std::vector<Pattern> closure_patterns = {Permutation::from_one_line({3, 1, 2}),
                                                   Permutation::from_one_line({3, 2, 1}),
                                                   Permutation::from_one_line({2, 4, 1, 3})};
    for (const Pattern& q : closure_patterns) {
        for (int a = 1; a <= 7; ++a) {
            const auto left = sav_set(q, a);
            for (int b = 1; a + b <= 8; ++b) {
                for (const Permutation& p1 : left)
                    for (const Permutation& p2 : sav_set(q, b))
                        c.require(strongly_avoids(direct_sum(p1, p2), q),
                                  "direct-sum closure fails for pattern " + to_string(q));
            }
        }
    }
    return c;
}

}  // namespace detail

/// Runs acceptance criteria (1-based indices; empty = all ten), timed.
inline std::vector<CriterionResult> run_acceptance(std::vector<int> indices = {}) {
    struct Entry {
        const char* name;
        detail::Check (*fn)();
    };
    static const Entry entries[] = {
        {"sequence-312-recurrence", detail::criterion_sequence_312},
        {"count-vs-recurrence-312", detail::criterion_count_vs_recurrence_312},
        {"sequence-132-enumeration", detail::criterion_sequence_132},
        {"ending-in-1-characterization", detail::criterion_ending_in_1},
        {"monotone-threshold", detail::criterion_monotone_threshold},
        {"growth-rates", detail::criterion_growth_rates},
        {"block-cyclic-family", detail::criterion_block_cyclic},
        {"symmetries", detail::criterion_symmetries},
        {"functional-equation", detail::criterion_functional_equation},
        {"side-results", detail::criterion_side_results},
    };
    if (indices.empty())
        for (int i = 1; i <= 10; ++i) indices.push_back(i);
    std::vector<CriterionResult> out;
    for (int i : indices) {
        if (i < 1 || i > 10) throw std::domain_error("acceptance criteria are numbered 1..10");
        const Entry& e = entries[i - 1];
        const auto t0 = std::chrono::steady_clock::now();
        detail::Check c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("unexpected error: ") + ex.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        out.push_back(CriterionResult{i, e.name, c.ok, c.detail,
                                      std::chrono::duration<double>(t1 - t0).count()});
    }
    return out;
}

/// Prints one line per criterion; returns true iff all passed.
inline bool print_acceptance(std::ostream& out, std::vector<int> indices = {}) {
    bool all = true;
    for (const CriterionResult& r : run_acceptance(std::move(indices))) {
        char line[160];
        std::snprintf(line, sizeof line, "%s  %2d  %-30s  (%.2fs)", r.passed ? "PASS" : "FAIL",
                      r.index, r.name.c_str(), r.seconds);
        out << line;
        if (!r.passed) out << "  " << r.detail;
        out << '\n';
        all = all && r.passed;
    }
    out << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all;
}

}  // namespace sav
