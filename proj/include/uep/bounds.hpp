#pragma once

#include <cstdint>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "uep/codespec.hpp"

namespace uep {

using BigInt = boost::multiprecision::cpp_int;

// Closed-form length bound: sum of ceil(s_i / 2^{k-i}). Equals the reversed
// reindexing sum of ceil(s_{k-i+1} / 2^{i-1}).
inline std::int64_t lower_bound(const SeparationVector& s) {
    const int k = s.k();
    std::int64_t acc = 0;
    for (int i = 1; i <= k; ++i) {
        const int shift = k - i;
        if (shift >= 63) {
            acc += 1;  // s_i >= 1, and s entries are far below 2^63
            continue;
        }
        const std::int64_t d = std::int64_t(1) << shift;
        acc += (s.at(i - 1) + d - 1) / d;
    }
    return acc;
}

// Un-ceiled form sum s_i / 2^{k-i} as numerator / 2^{k-1}.
inline double lp_form_bound(const SeparationVector& s) {
    const int k = s.k();
    double acc = 0.0;
    for (int i = 1; i <= k; ++i)
        acc += static_cast<double>(s.at(i - 1)) / std::ldexp(1.0, k - i);
    return acc;
}

inline BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt num = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        num *= (a - b + i);
        num /= i;  // exact at every step
    }
    return num;
}

struct MwUpperBound {
    std::int64_t upper;   // k + r_u
    std::int64_t r_u;     // check bits
    BigInt gamma;         // evaluated at n = k + r_u
};

// Check-bit counting upper bound: the smallest r with 2^r > gamma(n = k+r),
// where gamma counts syndrome patterns that must stay distinct. T_i is the
// number of message bits protected against i or more errors.
inline MwUpperBound mw_upper_bound(const ProtectionProfile& t) {
    const int k = t.k();
    if (t.at(k - 1) < 1)
        throw SpecError("upper bound needs at least one protected bit (t_k >= 1)");
    auto T = [&](int i) {
        int cnt = 0;
        for (int j = 0; j < k; ++j)
            if (t.at(j) >= i) ++cnt;
        return cnt;
    };
    for (std::int64_t r = 0;; ++r) {
        const std::int64_t n = k + r;
        BigInt gamma = 0;
        for (std::int64_t i = 0; i <= 2 * t.at(k - 1) - 1; ++i)
            gamma += binomial(n - 1, i);
        for (int i = 2; i <= k; ++i) {
            gamma -= binomial(n - 1 - T(i), 2 * t.at(i - 1) - 2);
            gamma -= binomial(n - 1 - T(i), 2 * t.at(i - 1) - 1);
        }
        if ((BigInt(1) << static_cast<unsigned>(r)) > gamma)
            return {n, r, gamma};
    }
}

// Length bound for the regime s = (3, 5, ..., 2k+1): sum over j of
// ceil((2(k-j)+1) / 2^j). Terms with 2^j beyond the numerator are all 1 and
// counted in closed form.
inline std::int64_t asymptotic_length(std::int64_t k) {
    if (k < 1) throw SpecError("k must be positive");
    std::int64_t acc = 0;
    std::int64_t j = 0;
    for (; j < k; ++j) {
        if (j >= 62) break;
        const std::int64_t num = 2 * (k - j) + 1;
        const std::int64_t den = std::int64_t(1) << j;
        if (den > num) break;
        acc += (num + den - 1) / den;
    }
    acc += k - j;  // remaining terms are exactly 1 each
    return acc;
}

inline double asymptotic_rate(std::int64_t k) {
    return static_cast<double>(k) / static_cast<double>(asymptotic_length(k));
}

struct BoundsReport {
    int k;
    SeparationVector s;
    std::int64_t lower;
    std::int64_t upper;
    double lp_bound;
    std::int64_t r_u;
    BigInt gamma_at_r_u;
};

inline BoundsReport bounds_report(const SeparationVector& s, const ProtectionProfile& t) {
    auto mw = mw_upper_bound(t);
    return {s.k(), s, lower_bound(s), mw.upper, lp_form_bound(s), mw.r_u, mw.gamma};
}

} // namespace uep
