#pragma once

// Exact arithmetic used by every counting path. Counts are arbitrary
// precision from the start; fixed-width accumulators appear only inside
// engines whose bounds are proven (see count.hpp).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammacone {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigCount big_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// n <= 20 keeps every intermediate below 2^63; callers guard.
inline std::uint64_t factorial_u64(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

inline BigCount big_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// Pascal table for the u64 fast paths. Valid for n <= 20 unconditionally
// (C(20,10) = 184756, far below overflow even after products with 20!-bounded
// partial counts are avoided by construction).
struct BinomialTableU64 {
    int n_max;
    std::vector<std::uint64_t> c;  // (n_max+1) x (n_max+1), row-major

    explicit BinomialTableU64(int n) : n_max(n), c((n + 1) * (n + 1), 0) {
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= i; ++j)
                at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0);
        }
    }
    std::uint64_t& at(int n, int k) { return c[n * (n_max + 1) + k]; }
    std::uint64_t at(int n, int k) const {
        if (k < 0 || k > n) return 0;
        return c[n * (n_max + 1) + k];
    }
};

inline std::string decimal(const BigCount& v) { return v.str(); }

// Exact numer/denom split with an integrality assertion; the counting
// identities used here always produce integers, so a remainder is a bug.
inline BigCount as_integer(const Rational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error(std::string(what) + ": expected integral value, got " +
                               q.str());
    return boost::multiprecision::numerator(q);
}

}  // namespace gammacone
