#pragma once

/**
 * @file bounds.hpp
 * @brief Peng-Fan and Lempel-Greenberger lower bounds, optimality verdicts.
 *
 * All bounds are evaluated with exact 128-bit integer ceiling division. A
 * non-positive numerator clamps the bound to 0.
 */

#include <string>

#include "fhs/correlation.hpp"
#include "fhs/error.hpp"
#include "fhs/numtheory.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

namespace detail {

/// ceil((a - b) * c / (d * e)) with a, b, c, d, e >= 0, clamped to 0 when a <= b.
inline u64 clamped_ceil(u128 a, u128 b, u128 c, u128 d, u128 e) {
    if (a <= b)
        return 0;
    const u128 num = (a - b) * c;
    const u128 den = d * e;
    if (den == 0)
        throw invalid_input("bound: zero denominator");
    return static_cast<u64>(ceil_div(num, den));
}

} // namespace detail

/// ceil((MN - v) N / ((MN - 1) v)). MN must fit in 64 bits, which keeps
/// every intermediate product exact in 128 bits.
inline u64 peng_fan_bound(u64 length, u64 alphabet, u64 set_size) {
    if (length == 0 || alphabet == 0 || set_size == 0)
        throw invalid_input("peng_fan_bound: N, v, M must be positive");
    const u128 mn = checked_mul(set_size, length);
    return detail::clamped_ceil(mn, alphabet, length, mn - 1, alphabet);
}

/// ceil((N - e)(N + e - v) / (v (N - 1))), e = N mod v.
inline u64 lempel_greenberger_bound(u64 length, u64 alphabet) {
    if (length < 2)
        throw invalid_input("lempel_greenberger_bound: N must be >= 2");
    if (alphabet == 0)
        throw invalid_input("lempel_greenberger_bound: v must be positive");
    const u64 eps = length % alphabet;
    const u128 a = length - eps;
    const u128 b = static_cast<u128>(length) + eps;
    if (a == 0 || b <= alphabet)
        return 0;
    return static_cast<u64>(ceil_div(a * (b - alphabet), static_cast<u128>(alphabet) * (length - 1)));
}

inline constexpr const char* peng_fan_name = "Peng-Fan";
inline constexpr const char* lempel_greenberger_name = "Lempel-Greenberger";

struct OptimalityReport {
    u64 achieved = 0;
    u64 bound = 0;
    bool optimal = false;
    std::string bound_name;
    u64 length = 0;
    u64 alphabet = 0;
    u64 set_size = 0;
};

inline OptimalityReport is_optimal_set(const FhsSet& s, const CorrelationProfile& prof) {
    OptimalityReport r;
    r.length = s.length();
    r.alphabet = s.alphabet().size;
    r.set_size = s.size();
    r.achieved = prof.max_overall;
    r.bound = peng_fan_bound(r.length, r.alphabet, r.set_size);
    r.optimal = r.achieved == r.bound;
    r.bound_name = peng_fan_name;
    return r;
}

inline OptimalityReport is_optimal_set(const FhsSet& s) { return is_optimal_set(s, correlation_profile(s)); }

/// Single-sequence verdict against the Lempel-Greenberger bound (uses H_a of sequence 0).
inline OptimalityReport is_optimal_sequence(const FhsSet& s, const CorrelationProfile& prof) {
    if (s.size() != 1)
        throw invalid_input("is_optimal_sequence: expected a single sequence");
    OptimalityReport r;
    r.length = s.length();
    r.alphabet = s.alphabet().size;
    r.set_size = 1;
    r.achieved = prof.max_auto;
    r.bound = lempel_greenberger_bound(r.length, r.alphabet);
    r.optimal = r.achieved == r.bound;
    r.bound_name = lempel_greenberger_name;
    return r;
}

/// ceil((q1 NM - v) N / ((q1 NM - 1) v)) == base Peng-Fan value.
inline bool theorem1_condition(u64 length, u64 alphabet, u64 set_size, u64 q1) {
    const u64 base = peng_fan_bound(length, alphabet, set_size);
    const u128 scaled = checked_mul(checked_mul(q1, set_size), length);
    return detail::clamped_ceil(scaled, alphabet, length, scaled - 1, alphabet) == base;
}

/// ceil((dNM - v) dN / ((qNM - 1) q v)) == base Peng-Fan value, any extension factor d.
inline bool theorem2_form(u64 length, u64 alphabet, u64 set_size, u64 d, u64 q) {
    const u64 base = peng_fan_bound(length, alphabet, set_size);
    const u128 nm = checked_mul(set_size, length);
    checked_mul(checked_mul(d, set_size), length);
    checked_mul(checked_mul(q, set_size), length);
    const u128 rhs = detail::clamped_ceil(d * nm, alphabet, static_cast<u128>(d) * length, q * nm - 1,
                                          static_cast<u128>(q) * alphabet);
    return rhs == base;
}

/// The displayed condition with d = (p-1) p^(a-1), q = p^a.
inline bool theorem2_condition(u64 length, u64 alphabet, u64 set_size, u64 p, unsigned a) {
    const auto pp = PrimePower::make(p, a);
    return theorem2_form(length, alphabet, set_size, pp.totient(), pp.q);
}

} // namespace fhs
