#pragma once

// Command-line front end. run_cli is a pure function of (args, streams) so
// tests drive it in-process; the binary's main() is a one-line wrapper.
//
// Exit codes: 0 success, 1 domain error (bad pattern, value out of range,
// infeasible size, count limit), 2 usage error (unknown flag/subcommand,
// bad config file). Output is deterministic for fixed flags: tables use
// plain "n value" lines, CSV quotes per RFC 4180, JSON prints one object
// per line with stable key order, and b-files are byte-stable "n a(n)"
// lines with \n endings.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "sav/acceptance.hpp"
#include "sav/avoidance.hpp"
#include "sav/experiments.hpp"
#include "sav/families.hpp"
#include "sav/permutation.hpp"
#include "sav/search.hpp"
#include "sav/series.hpp"

namespace sav {

namespace cli_detail {

using nlohmann::ordered_json;

struct UsageError {
    std::string message;
};

// -1 means "not set here"; flags override config, config overrides defaults.
struct ConfigDefaults {
    int threads = -1;
    int max_n = -1;
    int prefix_depth = -1;
};

constexpr int kDefaultMaxN = 14;   // search-backed commands refuse larger n unless raised
constexpr int kHardMaxN = 64;      // library bound
constexpr int kEnumerateLimit = 10000;

inline std::string trimmed(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline ConfigDefaults load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError{"cannot open config file '" + path + "'"};
    ConfigDefaults cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError{"config line " + std::to_string(lineno) + ": expected key = value"};
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        int parsed = 0;
        try {
            std::size_t used = 0;
            parsed = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError{"config line " + std::to_string(lineno) + ": bad integer '" + value +
                             "'"};
        }
        if (key == "threads") {
            if (parsed < 1 || parsed > 256)
                throw UsageError{"config: threads must be in 1..256"};
            cfg.threads = parsed;
        } else if (key == "max_n") {
            if (parsed < 1 || parsed > kHardMaxN)
                throw UsageError{"config: max_n must be in 1.." + std::to_string(kHardMaxN)};
            cfg.max_n = parsed;
        } else if (key == "prefix_depth") {
            if (parsed < 0 || parsed > 8) throw UsageError{"config: prefix_depth must be in 0..8"};
            cfg.prefix_depth = parsed;
        } else {
            throw UsageError{"config line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'"};
        }
    }
    return cfg;
}

inline void check_n_cap(int n, int max_n) {
    if (n > max_n)
        throw std::domain_error("n = " + std::to_string(n) + " exceeds the configured cap " +
                                std::to_string(max_n) +
                                "; raise max_n in a --config file if you mean it");
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

inline std::string spaced(const Permutation& p) {
    std::string s;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(p(i));
    }
    return s;
}

inline ordered_json one_line_json(const Permutation& p) {
    ordered_json a = ordered_json::array();
    for (int v : p.one_line()) a.push_back(v);
    return a;
}

inline std::string real10(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline SearchMode parse_mode(const std::string& s) {
    return s == "avoiding" ? SearchMode::avoiding : SearchMode::strongly_avoiding;
}

inline SearchPredicate parse_predicate(const std::string& s) {
    if (s == "ends-in-1") return SearchPredicate::ends_in_1;
    if (s == "involution") return SearchPredicate::involution;
    if (s == "order3") return SearchPredicate::cycle_lengths_1_3;
    return SearchPredicate::none;
}

inline void emit_counts(const CountTable& table, const std::string& format, std::ostream& out) {
    if (format == "json") {
        for (const CountEntry& e : table.entries) {
            ordered_json j;
            j["pattern"] = to_string(table.pattern);
            j["n"] = e.n;
            j["count"] = e.count;
            j["provenance"] = to_string(e.provenance);
            out << j.dump() << '\n';
        }
    } else if (format == "csv") {
        out << "n,count,provenance\n";
        for (const CountEntry& e : table.entries)
            out << e.n << ',' << e.count << ',' << to_string(e.provenance) << '\n';
    } else {
        if (table.entries.size() == 1) {
            out << table.entries.front().count << '\n';
        } else {
            for (const CountEntry& e : table.entries) out << e.n << ' ' << e.count << '\n';
        }
    }
}

}  // namespace cli_detail

/// Parses and runs one CLI invocation; args exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::ordered_json;

    CLI::App app{"strongly avoiding permutations: search, families, series, growth", "sav"};
    app.require_subcommand(1);
    app.fallthrough();  // let --config appear after the subcommand too
    std::string config_path;
    app.add_option("--config", config_path, "key = value file setting threads / max_n / prefix_depth defaults");

    const std::vector<std::string> formats = {"table", "csv", "json"};
    const std::vector<std::string> modes = {"strong", "avoiding"};
    const std::vector<std::string> predicates = {"none", "ends-in-1", "involution", "order3"};

    // count
    auto* count_cmd = app.add_subcommand(
        "count", "count permutations p with p (and, in strong mode, p*p) avoiding a pattern");
    std::string count_pattern, count_mode = "strong", count_predicate = "none",
                count_format = "table";
    int count_n = -1, count_n_min = 1, count_n_max = -1, count_threads = 1, count_depth = 0;
    long long count_limit = std::numeric_limits<long long>::max();
    auto* count_n_opt = count_cmd->add_option("--n", count_n, "single length n");
    auto* count_nmax_opt =
        count_cmd->add_option("--n-max", count_n_max, "count for every n from --n-min to here");
    count_cmd->add_option("--n-min", count_n_min, "first n for --n-max ranges")->check(CLI::PositiveNumber);
    count_cmd->add_option("--pattern", count_pattern, "pattern, digits (312) or comma form (10,3,2,...)")
        ->required();
    count_cmd->add_option("--mode", count_mode)->check(CLI::IsMember(modes));
    count_cmd->add_option("--predicate", count_predicate, "extra filter on the counted permutations")
        ->check(CLI::IsMember(predicates));
    count_cmd->add_option("--threads", count_threads, "worker threads for prefix-partitioned search")
        ->check(CLI::Range(1, 256));
    count_cmd->add_option("--prefix-depth", count_depth, "partition depth (0 = serial)")
        ->check(CLI::Range(0, 8));
    count_cmd->add_option("--limit", count_limit, "fail once the count exceeds this")
        ->check(CLI::PositiveNumber);
    count_cmd->add_option("--format", count_format)->check(CLI::IsMember(formats));
    count_n_opt->excludes(count_nmax_opt);

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list the matching permutations in one-line order");
    std::string enum_pattern, enum_mode = "strong", enum_predicate = "none", enum_format = "table";
    int enum_n = -1;
    long long enum_limit = cli_detail::kEnumerateLimit;
    enum_cmd->add_option("--n", enum_n, "length")->required()->check(CLI::NonNegativeNumber);
    enum_cmd->add_option("--pattern", enum_pattern)->required();
    enum_cmd->add_option("--mode", enum_mode)->check(CLI::IsMember(modes));
    enum_cmd->add_option("--predicate", enum_predicate)->check(CLI::IsMember(predicates));
    enum_cmd->add_option("--limit", enum_limit, "refuse to print more than this many")
        ->check(CLI::PositiveNumber);
    enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember(formats));

    // family
    auto* family_cmd = app.add_subcommand("family", "closed-form families and their squares");
    std::string family_name, family_layers, family_format = "table";
    int family_n = -1, family_k = -1;
    family_cmd
        ->add_option("--name", family_name,
                     "unimodal | ending-in-1 | block-cyclic | layered")
        ->required()
        ->check(CLI::IsMember({"unimodal", "ending-in-1", "block-cyclic", "layered"}));
    family_cmd->add_option("--n", family_n, "length (unimodal, ending-in-1, block-cyclic)");
    family_cmd->add_option("--k", family_k, "unimodal peak parameter, n/2 <= k <= n");
    family_cmd->add_option("--layers", family_layers, "comma-separated layer lengths (layered)");
    family_cmd->add_option("--format", family_format)->check(CLI::IsMember(formats));

    // witness
    auto* witness_cmd =
        app.add_subcommand("witness", "monotone witness of length (k-1)^3 and its square");
    int witness_k = 3;
    bool witness_base = false;
    std::string witness_format = "table";
    witness_cmd->add_option("--k", witness_k, "pattern length, 3..6")->required()->check(CLI::Range(3, 6));
    witness_cmd->add_flag("--base", witness_base, "also print the stored base word");
    witness_cmd->add_option("--format", witness_format)->check(CLI::IsMember(formats));

    // series
    auto* series_cmd = app.add_subcommand("series", "Taylor coefficients of a rational generating function");
    std::string series_family, series_num, series_den, series_format = "table";
    int series_terms = 10, series_from = 0;
    series_cmd->add_option("--family", series_family, "sav312 | ending-in-1 | block-cyclic")
        ->check(CLI::IsMember({"sav312", "ending-in-1", "block-cyclic"}));
    series_cmd->add_option("--num", series_num, "numerator coefficients, lowest degree first (e.g. -1,1,1,-1)");
    series_cmd->add_option("--den", series_den, "denominator coefficients, lowest degree first");
    series_cmd->add_option("--terms", series_terms, "last coefficient index to print")
        ->check(CLI::Range(0, 10000));
    series_cmd->add_option("--from", series_from, "first coefficient index to print (0 or 1)")
        ->check(CLI::Range(0, 1));
    series_cmd->add_option("--format", series_format)->check(CLI::IsMember(formats));

    // growth
    auto* growth_cmd =
        app.add_subcommand("growth", "denominator root in (0,1) and the growth rate it implies");
    std::string growth_family, growth_den;
    double growth_tol = 1e-9;
    std::string growth_format = "table";
    growth_cmd->add_option("--family", growth_family, "sav312 | block-cyclic")
        ->check(CLI::IsMember({"sav312", "block-cyclic"}));
    growth_cmd->add_option("--den", growth_den, "denominator coefficients, lowest degree first");
    growth_cmd->add_option("--tol", growth_tol, "root tolerance")->check(CLI::PositiveNumber);
    growth_cmd->add_option("--format", growth_format)->check(CLI::IsMember(formats));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    std::string verify_suite = "all";
    std::vector<int> verify_criteria;
    verify_cmd->add_option("--suite", verify_suite)->check(CLI::IsMember({"all"}));
    verify_cmd->add_option("--criterion", verify_criteria, "run only these criteria (1..10)")
        ->check(CLI::Range(1, 10));

    // bfile
    auto* bfile_cmd = app.add_subcommand("bfile", "OEIS b-file lines 'n a(n)' from enumerated counts");
    std::string bfile_pattern, bfile_mode = "strong";
    int bfile_n_max = -1, bfile_start = 1;
    bfile_cmd->add_option("--pattern", bfile_pattern)->required();
    bfile_cmd->add_option("--n-max", bfile_n_max, "last n")->required()->check(CLI::PositiveNumber);
    bfile_cmd->add_option("--start", bfile_start, "first n to emit")->check(CLI::PositiveNumber);
    bfile_cmd->add_option("--mode", bfile_mode)->check(CLI::IsMember(modes));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sav");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::Success& e) {
            return app.exit(e, out, err);  // --help and friends
        } catch (const CLI::ParseError& e) {
            app.exit(e, out, err);
            return 2;
        }

        cli_detail::ConfigDefaults config;
        if (!config_path.empty()) config = cli_detail::load_config(config_path);
        const int max_n = config.max_n > 0 ? config.max_n : cli_detail::kDefaultMaxN;

        if (count_cmd->parsed()) {
            if (count_n < 0 && count_n_max < 0)
                throw cli_detail::UsageError{"count: one of --n and --n-max is required"};
            const int threads = count_cmd->count("--threads") ? count_threads
                                : config.threads > 0        ? config.threads
                                                            : 1;
            const int depth_opt = count_cmd->count("--prefix-depth") ? count_depth
                                  : config.prefix_depth >= 0        ? config.prefix_depth
                                                                    : 0;
            const int lo = count_n >= 0 ? count_n : count_n_min;
            const int hi = count_n >= 0 ? count_n : count_n_max;
            if (lo > hi) throw cli_detail::UsageError{"count: --n-min exceeds --n-max"};
            cli_detail::check_n_cap(hi, max_n);
            CountTable table;
            table.pattern = parse_permutation(count_pattern);
            for (int n = lo; n <= hi; ++n) {
                SearchConfig cfg;
                cfg.n = n;
                cfg.pattern = table.pattern;
                cfg.mode = cli_detail::parse_mode(count_mode);
                cfg.predicate = cli_detail::parse_predicate(count_predicate);
                cfg.count_limit = count_limit;
                if (threads > 1 || depth_opt > 0) {
                    cfg.prefix_depth = std::min(n, depth_opt > 0 ? depth_opt : 2);
                    table.entries.push_back(partitioned_count(cfg, threads));
                } else {
                    table.entries.push_back(count_matching(cfg));
                }
            }
            cli_detail::emit_counts(table, count_format, out);
            return 0;
        }

        if (enum_cmd->parsed()) {
            cli_detail::check_n_cap(enum_n, max_n);
            SearchConfig cfg;
            cfg.n = enum_n;
            cfg.pattern = parse_permutation(enum_pattern);
            cfg.mode = cli_detail::parse_mode(enum_mode);
            cfg.predicate = cli_detail::parse_predicate(enum_predicate);
            std::vector<Permutation> rows;
            for_each_matching(cfg, [&](const Permutation& p) {
                if (static_cast<long long>(rows.size()) >= enum_limit)
                    throw CountLimitError("enumerate: more than " + std::to_string(enum_limit) +
                                          " results; raise --limit to print them");
                rows.push_back(p);
                return true;
            });
            if (enum_format == "json") {
                for (const Permutation& p : rows) {
                    ordered_json j;
                    j["n"] = p.size();
                    j["one_line"] = cli_detail::one_line_json(p);
                    out << j.dump() << '\n';
                }
            } else if (enum_format == "csv") {
                out << "n,one_line\n";
                for (const Permutation& p : rows)
                    out << p.size() << ',' << cli_detail::csv_field(cli_detail::spaced(p)) << '\n';
            } else {
                for (const Permutation& p : rows) out << to_string(p) << '\n';
            }
            return 0;
        }

        if (family_cmd->parsed()) {
            const std::string& format = family_format;
            if (family_name == "unimodal") {
                if (family_n < 1 || family_k < 0)
                    throw cli_detail::UsageError{"family unimodal: --n and --k are required"};
                const Permutation p = unimodal_ending_in_1(family_n, family_k);
                const Permutation sq = square_of_unimodal(family_n, family_k);
                if (format == "json") {
                    ordered_json j;
                    j["family"] = "unimodal";
                    j["n"] = family_n;
                    j["k"] = family_k;
                    j["permutation"] = cli_detail::one_line_json(p);
                    j["square"] = cli_detail::one_line_json(sq);
                    out << j.dump() << '\n';
                } else if (format == "csv") {
                    out << "n,k,permutation,square\n"
                        << family_n << ',' << family_k << ','
                        << cli_detail::csv_field(cli_detail::spaced(p)) << ','
                        << cli_detail::csv_field(cli_detail::spaced(sq)) << '\n';
                } else {
                    out << to_string(p) << '\n' << to_string(sq) << '\n';
                }
                return 0;
            }
            if (family_name == "layered") {
                if (family_layers.empty())
                    throw cli_detail::UsageError{"family layered: --layers is required"};
                std::vector<int> lengths;
                std::string token;
                auto flush = [&] {
                    token = cli_detail::trimmed(token);
                    try {
                        std::size_t used = 0;
                        lengths.push_back(std::stoi(token, &used));
                        if (used != token.size()) throw std::invalid_argument(token);
                    } catch (const std::exception&) {
                        throw cli_detail::UsageError{"family layered: bad layer length '" + token +
                                                     "'"};
                    }
                    token.clear();
                };
                for (char c : family_layers) {
                    if (c == ',')
                        flush();
                    else
                        token += c;
                }
                flush();
                const Permutation p = layered(lengths);
                if (format == "json") {
                    ordered_json j;
                    j["family"] = "layered";
                    j["layers"] = lengths;
                    j["permutation"] = cli_detail::one_line_json(p);
                    out << j.dump() << '\n';
                } else if (format == "csv") {
                    std::string ls;
                    for (std::size_t i = 0; i < lengths.size(); ++i)
                        ls += (i ? " " : "") + std::to_string(lengths[i]);
                    out << "layers,permutation\n"
                        << cli_detail::csv_field(ls) << ','
                        << cli_detail::csv_field(cli_detail::spaced(p)) << '\n';
                } else {
                    out << to_string(p) << '\n';
                }
                return 0;
            }
            // ending-in-1 and block-cyclic: lists over n
            if (family_n < 0)
                throw cli_detail::UsageError{"family " + family_name + ": --n is required"};
            std::vector<Permutation> rows;
            if (family_name == "ending-in-1") {
                rows = enumerate_strong_312_ending_in_1(family_n);
            } else {
                cli_detail::check_n_cap(family_n, max_n);
                rows = enumerate_block_cyclic(family_n);
            }
            if (format == "json") {
                for (const Permutation& p : rows) {
                    ordered_json j;
                    j["family"] = family_name;
                    j["n"] = family_n;
                    j["one_line"] = cli_detail::one_line_json(p);
                    out << j.dump() << '\n';
                }
            } else if (format == "csv") {
                out << "n,one_line\n";
                for (const Permutation& p : rows)
                    out << family_n << ',' << cli_detail::csv_field(cli_detail::spaced(p)) << '\n';
            } else {
                for (const Permutation& p : rows) out << to_string(p) << '\n';
            }
            return 0;
        }

        if (witness_cmd->parsed()) {
            const Permutation w = monotone_witness(witness_k);
            const Permutation sq = square(w);
            if (witness_format == "json") {
                ordered_json j;
                j["k"] = witness_k;
                j["n"] = w.size();
                j["witness"] = cli_detail::one_line_json(w);
                j["square"] = cli_detail::one_line_json(sq);
                if (witness_base) j["base"] = monotone_witness_base(witness_k);
                out << j.dump() << '\n';
            } else if (witness_format == "csv") {
                out << "k,n,witness,square" << (witness_base ? ",base" : "") << '\n';
                out << witness_k << ',' << w.size() << ','
                    << cli_detail::csv_field(cli_detail::spaced(w)) << ','
                    << cli_detail::csv_field(cli_detail::spaced(sq));
                if (witness_base) {
                    std::string bs;
                    for (std::size_t i = 0; i < monotone_witness_base(witness_k).size(); ++i)
                        bs += (i ? " " : "") + std::to_string(monotone_witness_base(witness_k)[i]);
                    out << ',' << cli_detail::csv_field(bs);
                }
                out << '\n';
            } else {
                out << to_string(w) << '\n' << to_string(sq) << '\n';
                if (witness_base) {
                    const auto& base = monotone_witness_base(witness_k);
                    std::string bs;
                    for (std::size_t i = 0; i < base.size(); ++i)
                        bs += (i ? " " : "") + std::to_string(base[i]);
                    out << bs << '\n';
                }
            }
            return 0;
        }

        if (series_cmd->parsed()) {
            const bool named = !series_family.empty();
            const bool custom = !series_num.empty() || !series_den.empty();
            if (named == custom)
                throw cli_detail::UsageError{
                    "series: give exactly one of --family or --num/--den"};
            RationalGF gf;
            std::string label;
            if (named) {
                label = series_family;
                gf = series_family == "sav312"      ? strong_312_gf()
                     : series_family == "ending-in-1" ? ending_in_1_gf()
                                                      : block_cyclic_gf();
            } else {
                if (series_num.empty() || series_den.empty())
                    throw cli_detail::UsageError{"series: --num and --den go together"};
                label = "custom";
                gf = RationalGF{parse_polynomial(series_num), parse_polynomial(series_den)};
            }
            const auto coeffs = gf_coefficients(gf, series_terms);
            if (series_format == "json") {
                for (int n = series_from; n <= series_terms; ++n) {
                    ordered_json j;
                    j["family"] = label;
                    j["n"] = n;
                    j["coefficient"] = coeffs[static_cast<std::size_t>(n)].str();
                    out << j.dump() << '\n';
                }
            } else if (series_format == "csv") {
                out << "n,coefficient\n";
                for (int n = series_from; n <= series_terms; ++n)
                    out << n << ',' << coeffs[static_cast<std::size_t>(n)].str() << '\n';
            } else {
                for (int n = series_from; n <= series_terms; ++n)
                    out << n << ' ' << coeffs[static_cast<std::size_t>(n)].str() << '\n';
            }
            return 0;
        }

        if (growth_cmd->parsed()) {
            const bool named = !growth_family.empty();
            if (named == !growth_den.empty())
                throw cli_detail::UsageError{"growth: give exactly one of --family or --den"};
            IntPolynomial den;
            if (named) {
                den = growth_family == "sav312" ? strong_312_gf().denominator
                                                : block_cyclic_gf().denominator;
            } else {
                den = parse_polynomial(growth_den);
            }
            const double root = smallest_positive_root(den, growth_tol);
            const double rate = 1.0 / root;
            if (growth_format == "json") {
                ordered_json j;
                j["root"] = cli_detail::real10(root);
                j["rate"] = cli_detail::real10(rate);
                out << j.dump() << '\n';
            } else if (growth_format == "csv") {
                out << "root,rate\n"
                    << cli_detail::real10(root) << ',' << cli_detail::real10(rate) << '\n';
            } else {
                out << "root " << cli_detail::real10(root) << '\n'
                    << "rate " << cli_detail::real10(rate) << '\n';
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            return print_acceptance(out, verify_criteria) ? 0 : 1;
        }

        if (bfile_cmd->parsed()) {
            cli_detail::check_n_cap(bfile_n_max, max_n);
            CountTable table;
            table.pattern = parse_permutation(bfile_pattern);
            for (int n = 1; n <= bfile_n_max; ++n) {
                SearchConfig cfg;
                cfg.n = n;
                cfg.pattern = table.pattern;
                cfg.mode = cli_detail::parse_mode(bfile_mode);
                table.entries.push_back(count_matching(cfg));
            }
            out << export_bfile(table, bfile_start);
            return 0;
        }

        throw cli_detail::UsageError{"no subcommand selected"};
    } catch (const cli_detail::UsageError& e) {
        err << "usage error: " << e.message << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace sav
