#pragma once

// Executable checks for the symmetry, supermultiplicativity, and side
// results the library is built around. Every verdict is recomputed from the
// search module at call time; reports carry their evidence as rows of
// preformatted cells so they can be diffed, exported, or golden-tested.
// Verdicts never depend on floating point — reals appear only in the
// informational trend column of the growth-bound report.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sav/avoidance.hpp"
#include "sav/families.hpp"
#include "sav/permutation.hpp"
#include "sav/search.hpp"

namespace sav {

enum class Verdict { holds, fails, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of one experiment: a verdict plus the per-n evidence behind it.
/// All cells are preformatted strings so CSV and JSON renderings are
/// byte-stable. A "fails" verdict always names a concrete counterexample.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string counterexample;
    std::string note;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["name"] = name;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : parameters) params[k] = v;
        j["parameters"] = params;
        j["verdict"] = sav::to_string(verdict);
        j["columns"] = columns;
        j["rows"] = rows;
        j["counterexample"] = counterexample;
        j["note"] = note;
        return j;
    }

    std::string to_csv() const {
        auto field = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += '"';
                q += c;
            }
            q += '"';
            return q;
        };
        std::string out;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            out += field(columns[i]);
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += field(row[i]);
            }
            out += '\n';
        }
        return out;
    }
};

namespace detail {

inline std::string fmt_ll(long long v) { return std::to_string(v); }

inline std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline long long sav_count(const Pattern& q, int n) { return count_strongly_avoiding(q, n).count; }

inline std::vector<Permutation> sav_set(const Pattern& q, int n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.pattern = q;
    cfg.mode = SearchMode::strongly_avoiding;
    return enumerate_matching(cfg);
}

inline void require_desk_scale(const char* where, int n, int hard_cap) {
    if (n > hard_cap)
        throw std::domain_error(std::string(where) + ": n = " + std::to_string(n) +
                                " exceeds the desk-scale cap " + std::to_string(hard_cap));
}

}  // namespace detail

/// Compares Sav_q(n) with Sav_{q^-1}(n) for n = 1..n_max.
inline ExperimentReport check_inverse_symmetry(const Pattern& q, int n_max) {
    if (n_max < 1) throw std::domain_error("check_inverse_symmetry: n_max must be >= 1");
    detail::require_desk_scale("check_inverse_symmetry", n_max, 12);
    const Pattern qi = inverse(q);
    ExperimentReport r;
    r.name = "inverse_symmetry";
    r.parameters = {{"pattern", to_string(q)},
                    {"inverse", to_string(qi)},
                    {"n_max", std::to_string(n_max)}};
    r.columns = {"n", "count_pattern", "count_inverse"};
    r.verdict = Verdict::holds;
    for (int n = 1; n <= n_max; ++n) {
        const long long a = detail::sav_count(q, n);
        const long long b = detail::sav_count(qi, n);
        r.rows.push_back({detail::fmt_ll(n), detail::fmt_ll(a), detail::fmt_ll(b)});
        if (a != b && r.verdict == Verdict::holds) {
            r.verdict = Verdict::fails;
            r.counterexample = "n=" + std::to_string(n) + ": " + std::to_string(a) +
                               " != " + std::to_string(b);
        }
    }
    if (q == qi) r.note = "pattern is self-inverse; equality is definitional";
    return r;
}

/// Compares Sav_q(n) with Sav_{rc(q)}(n) for n = 1..n_max, and for
/// n <= min(n_max, 8) additionally checks that rc maps one strongly
/// avoiding set onto the other (the bijection itself, not just its count).
inline ExperimentReport check_revcomp_symmetry(const Pattern& q, int n_max) {
    if (n_max < 1) throw std::domain_error("check_revcomp_symmetry: n_max must be >= 1");
    detail::require_desk_scale("check_revcomp_symmetry", n_max, 12);
    const Pattern qr = reverse_complement(q);
    ExperimentReport r;
    r.name = "revcomp_symmetry";
    r.parameters = {{"pattern", to_string(q)},
                    {"reverse_complement", to_string(qr)},
                    {"n_max", std::to_string(n_max)}};
    r.columns = {"n", "count_pattern", "count_revcomp", "sets_match"};
    r.verdict = Verdict::holds;
    auto flag = [&](int n, const std::string& why) {
        if (r.verdict == Verdict::holds) {
            r.verdict = Verdict::fails;
            r.counterexample = "n=" + std::to_string(n) + ": " + why;
        }
    };
    for (int n = 1; n <= n_max; ++n) {
        const long long a = detail::sav_count(q, n);
        const long long b = detail::sav_count(qr, n);
        std::string sets = "-";
        if (n <= 8) {
            std::vector<Permutation> image;
            for (const Permutation& p : detail::sav_set(q, n)) image.push_back(reverse_complement(p));
            std::sort(image.begin(), image.end());
            sets = (image == detail::sav_set(qr, n)) ? "yes" : "no";
            if (sets == "no") flag(n, "rc image differs from the strongly avoiding set");
        }
        r.rows.push_back({detail::fmt_ll(n), detail::fmt_ll(a), detail::fmt_ll(b), sets});
        if (a != b) flag(n, std::to_string(a) + " != " + std::to_string(b));
    }
    if (q == qr) r.note = "pattern is rc-invariant; equality is definitional";
    return r;
}

/// True iff no proper prefix of q uses exactly the values 1..i — i.e. q is
/// not a direct sum of two nonempty patterns.
inline bool is_indecomposable(const Pattern& q) {
    if (q.empty()) throw std::domain_error("is_indecomposable: empty pattern");
    const auto& w = q.one_line();
    int mx = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        mx = std::max(mx, w[i]);
        if (mx == static_cast<int>(i) + 1) return false;
    }
    return true;
}

/// For indecomposable q, checks Sav_n(q) * Sav_m(q) <= Sav_{n+m}(q) over
/// all splits with n + m <= n_max, and that the direct sum of two strongly
/// avoiding permutations is strongly avoiding (sizes summing to
/// min(n_max, 8)). Decomposable q yields an inconclusive report, since the
/// supermultiplicativity argument needs indecomposability.
inline ExperimentReport check_fekete(const Pattern& q, int n_max) {
    if (n_max < 2) throw std::domain_error("check_fekete: n_max must be >= 2");
    detail::require_desk_scale("check_fekete", n_max, 12);
    ExperimentReport r;
    r.name = "fekete_supermultiplicativity";
    r.parameters = {{"pattern", to_string(q)}, {"n_max", std::to_string(n_max)}};
    if (!is_indecomposable(q)) {
        r.verdict = Verdict::inconclusive;
        r.note = "pattern is decomposable; the direct-sum injection argument does not apply";
        return r;
    }
    r.columns = {"n", "m", "count_n", "count_m", "product", "count_sum"};
    r.verdict = Verdict::holds;
    std::vector<long long> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n) c[static_cast<std::size_t>(n)] = detail::sav_count(q, n);
    for (int n = 1; n <= n_max - 1; ++n) {
        for (int m = n; n + m <= n_max; ++m) {
            long long product = 0;
            if (__builtin_mul_overflow(c[static_cast<std::size_t>(n)],
                                       c[static_cast<std::size_t>(m)], &product))
                throw CountLimitError("check_fekete: product overflows 64-bit arithmetic");
            const long long sum = c[static_cast<std::size_t>(n + m)];
            r.rows.push_back({detail::fmt_ll(n), detail::fmt_ll(m),
                              detail::fmt_ll(c[static_cast<std::size_t>(n)]),
                              detail::fmt_ll(c[static_cast<std::size_t>(m)]),
                              detail::fmt_ll(product), detail::fmt_ll(sum)});
            if (product > sum && r.verdict == Verdict::holds) {
                r.verdict = Verdict::fails;
                r.counterexample = "n=" + std::to_string(n) + ", m=" + std::to_string(m) + ": " +
                                   std::to_string(product) + " > " + std::to_string(sum);
            }
        }
    }
    const int inj_cap = std::min(n_max, 8);
    for (int a = 1; a <= inj_cap - 1; ++a) {
        const auto left = detail::sav_set(q, a);
        for (int b = 1; a + b <= inj_cap; ++b) {
            for (const Permutation& p1 : left) {
                for (const Permutation& p2 : detail::sav_set(q, b)) {
                    if (!strongly_avoids(direct_sum(p1, p2), q) && r.verdict == Verdict::holds) {
                        r.verdict = Verdict::fails;
                        r.counterexample = "direct sum " + to_string(p1) + " + " + to_string(p2) +
                                           " is not strongly avoiding";
                    }
                }
            }
        }
    }
    r.note = "direct-sum closure checked exhaustively for sizes summing to " +
             std::to_string(inj_cap);
    return r;
}

/// (enumerated count of 132-avoiding involutions of length n, C(n, floor(n/2))).
inline std::pair<long long, long long> count_132_involutions(int n) {
    if (n < 0) throw std::domain_error("count_132_involutions: n must be >= 0");
    detail::require_desk_scale("count_132_involutions", n, 16);
    SearchConfig cfg;
    cfg.n = n;
    cfg.pattern = Permutation::from_one_line({1, 3, 2});
    cfg.mode = SearchMode::avoiding;  // an involution's square avoids everything
    cfg.predicate = SearchPredicate::involution;
    const long long enumerated = count_matching(cfg).count;
    long long binom = 1;
    const int k = n / 2;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;  // exact at each step
    return {enumerated, binom};
}

/// Number of 132-avoiding permutations of length n whose cycle lengths all
/// lie in {1, 3} (equivalently p^3 = identity). Each permutation counted is
/// cross-checked to be strongly 132-avoiding with p^2 = p^-1.
inline long long count_132_order3(int n) {
    if (n < 0) throw std::domain_error("count_132_order3: n must be >= 0");
    detail::require_desk_scale("count_132_order3", n, 16);
    const Pattern q = Permutation::from_one_line({1, 3, 2});
    SearchConfig cfg;
    cfg.n = n;
    cfg.pattern = q;
    cfg.mode = SearchMode::avoiding;
    cfg.predicate = SearchPredicate::cycle_lengths_1_3;
    long long count = 0;
    for_each_matching(cfg, [&](const Permutation& p) {
        if (square(p) != inverse(p) || !strongly_avoids(p, q))
            throw std::logic_error("count_132_order3: cross-check failed for " + to_string(p));
        ++count;
        return true;
    });
    return count;
}

/// Evaluates Sav_132(n) <= 2^n for n = 1..n_max and reports the n-th-root
/// trend. The trend is observational only: Sav_132 is not known to be
/// supermultiplicative (132 is decomposable), so no limit is claimed.
inline ExperimentReport check_sav132_bound(int n_max = 14) {
    if (n_max < 1) throw std::domain_error("check_sav132_bound: n_max must be >= 1");
    detail::require_desk_scale("check_sav132_bound", n_max, 16);
    const Pattern q = Permutation::from_one_line({1, 3, 2});
    ExperimentReport r;
    r.name = "sav132_power_bound";
    r.parameters = {{"n_max", std::to_string(n_max)}};
    r.columns = {"n", "count", "bound", "margin", "nth_root"};
    r.verdict = Verdict::holds;
    for (int n = 1; n <= n_max; ++n) {
        const long long count = detail::sav_count(q, n);
        const long long bound = 1LL << n;
        r.rows.push_back({detail::fmt_ll(n), detail::fmt_ll(count), detail::fmt_ll(bound),
                          detail::fmt_ll(bound - count),
                          detail::fmt_real(std::pow(static_cast<double>(count), 1.0 / n))});
        if (count > bound && r.verdict == Verdict::holds) {
            r.verdict = Verdict::fails;
            r.counterexample =
                "n=" + std::to_string(n) + ": " + std::to_string(count) + " > 2^n";
        }
    }
    r.note = "nth_root column is observational; no limit statement is made";
    return r;
}

/// The monotone-threshold evidence for pattern 12...k. Exhaustive mode
/// (k = 3 only) verifies that no strongly 123-avoiding permutation of
/// length 9 exists; witness mode verifies the length-(k-1)^3 witness:
/// avoids 12...k, square layered into k-1 layers of (k-1)^2, order 4, cube
/// avoiding. Exhaustive mode for k >= 4 is infeasible and reports
/// inconclusive rather than guessing.
inline ExperimentReport check_monotone_threshold(int k, bool exhaustive) {
    ExperimentReport r;
    r.name = "monotone_threshold";
    r.parameters = {{"k", std::to_string(k)}, {"mode", exhaustive ? "exhaustive" : "witness"}};
    if (exhaustive) {
        if (k != 3) {
            r.verdict = Verdict::inconclusive;
            r.note = "exhaustive search above k = 3 is infeasible at desk scale; use witness mode";
            return r;
        }
        const int n = 9;  // (k-1)^3 + 1
        const long long count = detail::sav_count(Permutation::identity(k), n);
        r.columns = {"n", "count"};
        r.rows.push_back({detail::fmt_ll(n), detail::fmt_ll(count)});
        r.verdict = (count == 0) ? Verdict::holds : Verdict::fails;
        if (count != 0) r.counterexample = "n=9: expected 0, found " + std::to_string(count);
        r.note = "no strongly 123-avoiding permutation of length 9 exists";
        return r;
    }
    if (k < 3 || k > 6) throw std::domain_error("check_monotone_threshold: witness needs k in 3..6");
    const Pattern incr = Permutation::identity(k);
    const Permutation w = monotone_witness(k);
    const Permutation sq = square(w);
    const bool avoid_ok = avoids(w, incr);
    const auto layers = is_layered(sq);
    const bool layer_ok =
        layers && *layers == std::vector<int>(static_cast<std::size_t>(k - 1), (k - 1) * (k - 1));
    const long long order = cycle_decomposition(w).order;
    const bool cube_ok = avoids(compose(w, sq), incr);
    r.columns = {"k", "n", "avoids", "square_layered", "order", "cube_avoids"};
    r.rows.push_back({detail::fmt_ll(k), detail::fmt_ll(w.size()), avoid_ok ? "yes" : "no",
                      layer_ok ? "yes" : "no", detail::fmt_ll(order), cube_ok ? "yes" : "no"});
    if (avoid_ok && layer_ok && order == 4 && cube_ok) {
        r.verdict = Verdict::holds;
        r.note = "witness certifies a strongly avoiding permutation at the threshold length";
    } else {
        r.verdict = Verdict::fails;
        r.counterexample = "witness for k=" + std::to_string(k) + " failed a post-condition";
    }
    return r;
}

/// OEIS b-file text: one "n a(n)" line per entry with n >= start_n.
inline std::string export_bfile(const CountTable& table, int start_n) {
    std::string out;
    for (const CountEntry& e : table.entries) {
        if (e.n < start_n) continue;
        out += std::to_string(e.n);
        out += ' ';
        out += std::to_string(e.count);
        out += '\n';
    }
    return out;
}

}  // namespace sav
