#pragma once

// Exact formal power series over the rationals, truncated at a fixed order.
// No floating point anywhere: the tangent-type generating function is built
// from the boustrophedon integer triangle and double-checked by formal
// division and integration.

#include <algorithm>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "principal.hpp"

namespace gammacone {

struct RationalSeries {
    std::vector<Rational> c;  // c[i] multiplies x^i

    RationalSeries() = default;
    explicit RationalSeries(int order) : c(order + 1, Rational{0}) {
        if (order < 0) throw input_error("series order must be nonnegative");
    }
    int order() const { return static_cast<int>(c.size()) - 1; }

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

inline RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
    int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

inline RationalSeries mul(const RationalSeries& a, const RationalSeries& b) {
    int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) out.c[i] += a.c[j] * b.c[i - j];
    return out;
}

inline RationalSeries scale(const RationalSeries& a, const Rational& s) {
    RationalSeries out = a;
    for (auto& x : out.c) x *= s;
    return out;
}

// Multiplicative inverse; needs a unit constant term.
inline RationalSeries inverse(const RationalSeries& f) {
    if (f.c[0] == 0) throw input_error("series inverse needs nonzero constant term");
    RationalSeries g(f.order());
    g.c[0] = Rational{1} / f.c[0];
    for (int n = 1; n <= f.order(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += f.c[k] * g.c[n - k];
        g.c[n] = -acc / f.c[0];
    }
    return g;
}

// Definite integral from 0; the top coefficient is truncated away.
inline RationalSeries integrate(const RationalSeries& f) {
    RationalSeries out(f.order());
    for (int n = 1; n <= f.order(); ++n) out.c[n] = f.c[n - 1] / n;
    return out;
}

inline RationalSeries sin_series(int order) {
    RationalSeries s(order);
    Rational term = 1;
    for (int n = 1; n <= order; ++n) {
        term /= n;
        if (n % 2 == 1) s.c[n] = ((n / 2) % 2 == 0) ? term : -term;
    }
    return s;
}

// Zigzag numbers 1,1,1,2,5,16,61,272,... via the boustrophedon triangle.
// Each new terminal entry must equal the previous row's sum; that redundancy
// is asserted as a self-check.
inline std::vector<BigCount> zigzag_numbers(int n_max) {
    if (n_max < 0) throw input_error("zigzag index must be nonnegative");
    std::vector<BigCount> a{1};
    std::vector<BigCount> row{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigCount> next(n + 1);
        next[0] = 0;
        for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
        BigCount rowsum = 0;
        for (const auto& x : row) rowsum += x;
        if (next[n] != rowsum)
            throw std::logic_error("boustrophedon self-check failed");
        a.push_back(next[n]);
        row = std::move(next);
    }
    return a;
}

// The exponential generating function with zigzag coefficients. Built from
// the integer triangle, then re-derived as 1 plus the integral of the
// inverse of (1 - sin); the two constructions must agree coefficientwise.
inline RationalSeries zigzag_series(int order) {
    auto a = zigzag_numbers(order);
    RationalSeries t(order);
    Rational fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        t.c[n] = Rational(a[n]) / fact;
    }
    RationalSeries one_minus_sin(order);
    one_minus_sin.c[0] = 1;
    {
        auto s = sin_series(order);
        for (int n = 1; n <= order; ++n) one_minus_sin.c[n] = -s.c[n];
    }
    RationalSeries alt = integrate(inverse(one_minus_sin));
    alt.c[0] = 1;
    if (!(alt == t))
        throw std::logic_error("zigzag series cross-derivation disagrees");
    return t;
}

struct SeriesRow {
    int n = 0;
    BigCount direct;   // extension count of the family member
    Rational series;   // n! times the n-th series coefficient
    bool match = false;
};

// Path family versus the zigzag series; this one is an identity and the
// match flags are expected to be all true.
inline std::vector<SeriesRow> check_a_series(int n_max) {
    if (n_max > 9) throw guard_error("path series check is capped at n = 9");
    auto t = zigzag_series(std::max(1, n_max));
    std::vector<SeriesRow> rows;
    BigCount fact = 1;
    for (int n = 1; n <= n_max; ++n) {
        fact *= n;
        Graph g = named_family("path", n);
        auto dec = principal_decomposition(g);
        SeriesRow row;
        row.n = n;
        row.direct = principal_number_formula(g, dec.pi1);
        row.series = t.c[n] * Rational(fact);
        row.match = (Rational(row.direct) == row.series);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Comparison against the published candidate series for one branched family.
// Diagnostic only: rows report both sides verbatim and nothing here asserts
// equality (the first family is known to disagree with this encoding at
// n = 4: direct 6, series 11).
inline std::vector<SeriesRow> evaluate_sano_series(const std::string& family, int n_max) {
    if (family != "d" && family != "e")
        throw input_error("series comparison covers families d and e only");
    if (n_max > 9) throw guard_error("series comparison is capped at n = 9");
    std::vector<SeriesRow> rows;
    if (n_max < 4) return rows;
    auto t = zigzag_series(n_max);
    RationalSeries s(n_max);
    if (family == "d") {
        // (2x - 1) t + 2 - 2x^2
        for (int n = 0; n <= n_max; ++n)
            s.c[n] = (n >= 1 ? 2 * t.c[n - 1] : Rational{0}) - t.c[n];
        s.c[0] += 2;
        s.c[2] -= 2;
    } else {
        // (x^2/2 - 2x + 3) t - 3x^2 - x - 3
        for (int n = 0; n <= n_max; ++n) {
            s.c[n] = 3 * t.c[n];
            if (n >= 1) s.c[n] -= 2 * t.c[n - 1];
            if (n >= 2) s.c[n] += t.c[n - 2] / 2;
        }
        s.c[0] -= 3;
        s.c[1] -= 1;
        s.c[2] -= 3;
    }
    BigCount fact = 6;  // 3!
    for (int n = 4; n <= n_max; ++n) {
        fact *= n;
        Graph g = named_family(family, n);
        auto dec = principal_decomposition(g);
        SeriesRow row;
        row.n = n;
        row.direct = principal_number_formula(g, dec.pi1);
        row.series = s.c[n] * Rational(fact);
        row.match = (Rational(row.direct) == row.series);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gammacone
