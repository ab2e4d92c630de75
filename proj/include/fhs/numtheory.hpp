#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact 64-bit integer and modular arithmetic.
 *
 * Everything here is overflow-checked: a result that does not fit in
 * std::uint64_t raises fhs::invalid_input instead of wrapping.
 */

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fhs/error.hpp"

namespace fhs {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// =============================================================================
// Checked arithmetic
// =============================================================================

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw invalid_input("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw invalid_input("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    if ((a | b) >> 32 == 0)
        return (a * b) % m;
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1)
        return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Ceiling of num/den for den > 0.
constexpr u128 ceil_div(u128 num, u128 den) { return num / den + (num % den != 0); }

// =============================================================================
// Primality
// =============================================================================

/// Deterministic Miller-Rabin; the witness set below is exact for all 64-bit n.
inline bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// =============================================================================
// Prime powers and factorization
// =============================================================================

/// q = p^a with p prime and a >= 1.
struct PrimePower {
    u64 p = 0;
    unsigned a = 0;
    u64 q = 0;

    static PrimePower make(u64 p, unsigned a) {
        if (!is_prime(p))
            throw invalid_input(std::to_string(p) + " is not prime");
        if (a < 1)
            throw invalid_input("prime power exponent must be >= 1");
        return PrimePower{p, a, checked_pow(p, a)};
    }

    /// Interprets an integer as a prime power, rejecting anything else.
    static PrimePower from_value(u64 q);

    /// Euler phi of q.
    u64 totient() const { return (p - 1) * (q / p); }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 2, ascending by prime.
inline std::vector<PrimePower> factor_prime_powers(u64 n) {
    if (n < 2)
        throw invalid_input("factor_prime_powers: n must be >= 2, got " + std::to_string(n));
    std::vector<PrimePower> out;
    auto take = [&](u64 p) {
        unsigned a = 0;
        u64 q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
            ++a;
        }
        out.push_back({p, a, q});
    };
    if (n % 2 == 0)
        take(2);
    bool rest_prime = n > 1 && is_prime(n);
    for (u64 p = 3; !rest_prime && p <= n / p; p += 2) {
        if (n % p == 0) {
            take(p);
            rest_prime = n > 1 && is_prime(n);
        }
    }
    if (n > 1)
        take(n);
    return out;
}

inline u64 least_prime_factor(u64 n) {
    if (n < 2)
        throw invalid_input("least_prime_factor: n must be >= 2, got " + std::to_string(n));
    return factor_prime_powers(n).front().p;
}

inline PrimePower PrimePower::from_value(u64 q) {
    if (q < 2)
        throw invalid_input(std::to_string(q) + " is not a prime power");
    auto f = factor_prime_powers(q);
    if (f.size() != 1)
        throw invalid_input(std::to_string(q) + " is not a prime power");
    return f.front();
}

inline u64 euler_phi(u64 n) {
    if (n == 1)
        return 1;
    u64 phi = 1;
    for (const auto& pp : factor_prime_powers(n))
        phi *= pp.totient();
    return phi;
}

// =============================================================================
// Multiplicative structure
// =============================================================================

/// Least d > 0 with g^d = 1 (mod m).
inline u64 multiplicative_order(u64 g, u64 m) {
    if (m < 2)
        throw invalid_input("multiplicative_order: modulus must be >= 2");
    if (std::gcd(g % m, m) != 1)
        throw invalid_input("multiplicative_order: gcd(" + std::to_string(g) + ", " +
                            std::to_string(m) + ") != 1");
    u64 order = euler_phi(m);
    if (order == 1)
        return 1;
    for (const auto& r : factor_prime_powers(order)) {
        for (unsigned i = 0; i < r.a && pow_mod(g, order / r.p, m) == 1; ++i)
            order /= r.p;
    }
    return order;
}

/// Smallest primitive root modulo a prime p.
inline u64 primitive_root_mod_prime(u64 p) {
    if (!is_prime(p))
        throw invalid_input(std::to_string(p) + " is not prime");
    if (p == 2)
        return 1;
    for (u64 g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1)
            return g;
    }
    throw invalid_input("no primitive root found modulo " + std::to_string(p));
}

/**
 * Generator of the unit group modulo p^a for odd p.
 *
 * Takes the smallest primitive root g' mod p and lifts it: g' itself when it
 * already has order (p-1)p^(a-1) mod p^a, else g'+p. The order of the result
 * is checked rather than assumed.
 */
inline u64 primitive_root_mod_prime_power(const PrimePower& pp) {
    if (pp.p == 2) {
        if (pp.a >= 2)
            throw unsupported_modulus("unit group modulo 2^" + std::to_string(pp.a) +
                                      " is not handled (p = 2 requires a = 1)");
        return 1;
    }
    const u64 base = primitive_root_mod_prime(pp.p);
    if (pp.a == 1)
        return base;
    const u64 want = pp.totient();
    for (u64 g : {base, base + pp.p}) {
        if (multiplicative_order(g, pp.q) == want)
            return g;
    }
    throw unsupported_modulus("neither g' nor g'+p generates the units modulo " +
                              std::to_string(pp.q));
}

} // namespace fhs
