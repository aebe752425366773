#pragma once

// Exact rational generating functions.
//
// Coefficients are extracted by the linear recurrence the denominator
// induces, in arbitrary-precision integer arithmetic; extraction fails
// loudly if the series is not integral. Floating point enters only in the
// root finder, which locates the smallest positive real denominator root
// (grid scan for a sign change, bisection, two Newton polish steps) to turn
// it into a growth rate.
//
// Polynomials read and print as comma-separated coefficient lists, lowest
// degree first: "-1,1,1,-1" is -1 + z + z^2 - z^3.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace sav {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial; coefficients[i] is the degree-i coefficient.
/// Normalized: no trailing zeros, so the zero polynomial is the empty list.
struct IntPolynomial {
    std::vector<BigInt> coefficients;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> cs) {
        for (long long c : cs) coefficients.emplace_back(c);
        normalize();
    }
    explicit IntPolynomial(std::vector<BigInt> cs) : coefficients(std::move(cs)) { normalize(); }

    void normalize() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }  // -1 for zero

    const BigInt& coeff(int d) const {
        static const BigInt zero = 0;
        if (d < 0 || d > degree()) return zero;
        return coefficients[static_cast<std::size_t>(d)];
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.coefficients.size(), b.coefficients.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.coefficients.size(), b.coefficients.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> out(a.coefficients.size() + b.coefficients.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coefficients.size(); ++i)
            for (std::size_t j = 0; j < b.coefficients.size(); ++j)
                out[i + j] += a.coefficients[i] * b.coefficients[j];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> out;
        for (std::size_t i = 1; i < coefficients.size(); ++i)
            out.push_back(coefficients[i] * static_cast<long long>(i));
        return IntPolynomial(std::move(out));
    }

    double eval(double x) const {
        double acc = 0.0;
        for (std::size_t i = coefficients.size(); i-- > 0;)
            acc = acc * x + coefficients[i].convert_to<double>();
        return acc;
    }
};

inline std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        if (i) out += ',';
        out += p.coefficients[i].str();
    }
    return out;
}

/// Parses a comma-separated coefficient list, lowest degree first.
inline IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::string token;
    auto flush = [&] {
        std::size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("polynomial: empty coefficient");
        std::size_t b = token.find_last_not_of(" \t");
        try {
            coeffs.emplace_back(token.substr(a, b - a + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("polynomial: bad coefficient '" + token + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            token += c;
    }
    flush();
    return IntPolynomial(std::move(coeffs));
}

/// numerator(z) / denominator(z); expandable at 0 when the denominator has
/// nonzero constant term.
struct RationalGF {
    IntPolynomial numerator;
    IntPolynomial denominator;

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
        return RationalGF{a.numerator * b.denominator + b.numerator * a.denominator,
                          a.denominator * b.denominator};
    }
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
        return RationalGF{a.numerator * b.denominator - b.numerator * a.denominator,
                          a.denominator * b.denominator};
    }
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
        return RationalGF{a.numerator * b.numerator, a.denominator * b.denominator};
    }
};

inline RationalGF gf_from_polynomial(const IntPolynomial& p) {
    return RationalGF{p, IntPolynomial{1}};
}

/// Taylor coefficients a_0..a_N of gf at 0, exact. Each a_n solves the
/// cross-multiplied recurrence sum_j den_j * a_{n-j} = num_n; a non-exact
/// division means the series is not integer-valued and raises an error.
inline std::vector<BigInt> gf_coefficients(const RationalGF& gf, int N) {
    if (N < 0) throw std::invalid_argument("gf_coefficients: N must be >= 0");
    const BigInt& d0 = gf.denominator.coeff(0);
    if (d0 == 0)
        throw std::domain_error("gf_coefficients: denominator constant term is zero");
    std::vector<BigInt> a(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        BigInt rhs = gf.numerator.coeff(n);
        for (int j = 1; j <= std::min(n, gf.denominator.degree()); ++j)
            rhs -= gf.denominator.coeff(j) * a[static_cast<std::size_t>(n - j)];
        if (rhs % d0 != 0)
            throw std::domain_error("gf_coefficients: series is not integral at order " +
                                    std::to_string(n));
        a[static_cast<std::size_t>(n)] = rhs / d0;
    }
    return a;
}

/// Sav_312(z) = (-z^3 + z^2 + z - 1) / (z^4 - 2z^3 + z^2 + 2z - 1).
/// Coefficients 1, 1, 2, 4, 9, 19, 41, 87, 186, 396, 845, ... from n = 0.
inline RationalGF strong_312_gf() {
    return RationalGF{IntPolynomial{-1, 1, 1, -1}, IntPolynomial{-1, 2, 1, -2, 1}};
}

/// B(z) = z + (z+1)z^2/(1-z^2)^2, in lowest terms: coefficient b_n counts
/// the strongly 312-avoiding permutations of length n ending in 1, so
/// b_0 = 0, b_1 = 1, b_n = floor(n/2).
inline RationalGF ending_in_1_gf() {
    return RationalGF{IntPolynomial{0, 1, 0, -1, 1}, IntPolynomial{1, -1, -1, 1}};
}

/// H(z) = (1-z)^2 / (1 - 3z + 2z^2 - z^3), counting block-cyclic
/// permutations: 1, 1, 2, 5, 12, 28, 65, ...
inline RationalGF block_cyclic_gf() {
    return RationalGF{IntPolynomial{1, -2, 1}, IntPolynomial{1, -3, 2, -1}};
}

/// b_0..b_N by the closed count: 0, 1, then floor(n/2).
inline std::vector<BigInt> sav312_b_coefficients(int N) {
    if (N < 0) throw std::invalid_argument("sav312_b_coefficients: N must be >= 0");
    std::vector<BigInt> b(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) b[static_cast<std::size_t>(n)] = (n == 1) ? 1 : n / 2;
    return b;
}

/// Checks (1 - B(z)) * Sav_312(z) == 1 through order N, exactly.
inline bool verify_functional_equation(int N) {
    const RationalGF one = gf_from_polynomial(IntPolynomial{1});
    const RationalGF product = (one - ending_in_1_gf()) * strong_312_gf();
    const std::vector<BigInt> c = gf_coefficients(product, N);
    for (int n = 0; n <= N; ++n)
        if (c[static_cast<std::size_t>(n)] != ((n == 0) ? 1 : 0)) return false;
    return true;
}

/// Smallest root of p in (0, 1), to within tol: grid scan locates a sign
/// change, bisection narrows it below min(tol, 1e-12), then two Newton
/// steps polish. Deterministic. Errors if no sign change is found.
inline double smallest_positive_root(const IntPolynomial& p, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("smallest_positive_root: tol must be > 0");
    if (p.is_zero()) throw std::domain_error("smallest_positive_root: zero polynomial");

    constexpr int grid = 4096;
    double lo = 0, hi = 0;
    bool found = false;
    double prev_x = 0.0, prev_f = p.eval(0.0);
    for (int k = 1; k < grid && !found; ++k) {
        const double x = static_cast<double>(k) / grid;
        const double f = p.eval(x);
        if (f == 0.0) {
            lo = hi = x;
            found = true;
        } else if (prev_f != 0.0 && ((prev_f < 0) != (f < 0)) && prev_x > 0.0) {
            lo = prev_x;
            hi = x;
            found = true;
        } else {
            prev_x = x;
            prev_f = f;
        }
    }
    if (!found)
        throw std::domain_error("smallest_positive_root: no sign change on (0, 1)");

    const double width = std::min(tol, 1e-12);
    double flo = p.eval(lo);
    while (hi - lo > width) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // double resolution reached
        const double fmid = p.eval(mid);
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((flo < 0) != (fmid < 0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }

    double root = lo + (hi - lo) / 2;
    const IntPolynomial dp = p.derivative();
    for (int step = 0; step < 2; ++step) {
        const double d = dp.eval(root);
        if (d == 0.0) break;
        const double next = root - p.eval(root) / d;
        if (!(next > 0.0 && next < 1.0)) break;
        root = next;
    }
    return root;
}

/// Reciprocal of the denominator's smallest root in (0, 1) — the
/// exponential growth rate of the coefficient sequence.
inline double growth_rate(const RationalGF& gf, double tol) {
    return 1.0 / smallest_positive_root(gf.denominator, tol);
}

}  // namespace sav
