#include <gtest/gtest.h>

#include <random>

#include "fhs/numtheory.hpp"
#include "oracles.hpp"

using namespace fhs;

TEST(CheckedArithmetic, DetectsOverflow) {
    EXPECT_EQ(checked_mul(1u << 31, 1u << 31), u64{1} << 62);
    EXPECT_THROW(checked_mul(u64{1} << 32, u64{1} << 32), invalid_input);
    EXPECT_THROW(checked_add(~u64{0}, 1), invalid_input);
    EXPECT_EQ(checked_pow(11, 2), 121u);
    EXPECT_EQ(checked_pow(7, 0), 1u);
    EXPECT_THROW(checked_pow(2, 64), invalid_input);
}

TEST(ModularArithmetic, MulModAndPowModMatchWideArithmetic) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 2000; ++k) {
        const u64 m = rng() | 1, a = rng(), b = rng();
        EXPECT_EQ(mul_mod(a, b, m), static_cast<u64>(static_cast<u128>(a) * b % m));
    }
    EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
    EXPECT_EQ(pow_mod(5, 0, 7), 1u);
    EXPECT_EQ(pow_mod(5, 3, 1), 0u);
    EXPECT_EQ(ceil_div(7, 2), 4u);
    EXPECT_EQ(ceil_div(8, 2), 4u);
    EXPECT_EQ(ceil_div(0, 3), 0u);
}

TEST(Primality, AgreesWithTrialDivisionBelow20000) {
    for (u64 n = 0; n < 20000; ++n)
        ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
}

TEST(Primality, LargeAndAdversarialInputs) {
    EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
    EXPECT_TRUE(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    EXPECT_FALSE(is_prime(561));                    // Carmichael
    EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases 2..23
    EXPECT_FALSE(is_prime(4294967297ULL));          // 641 * 6700417
}

TEST(Factorization, AgreesWithTrialDivision) {
    for (u64 n = 2; n < 5000; ++n) {
        const auto got = factor_prime_powers(n);
        const auto want = oracle::factor(n);
        ASSERT_EQ(got.size(), want.size()) << n;
        auto it = want.begin();
        for (const auto& pp : got) {
            EXPECT_EQ(pp.p, it->first);
            EXPECT_EQ(pp.a, it->second);
            EXPECT_EQ(pp.q, checked_pow(it->first, it->second));
            ++it;
        }
    }
}

TEST(Factorization, LargeValuesAndErrors) {
    const auto f = factor_prime_powers(600851475143ULL);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f.back().p, 6857u);
    const auto big = factor_prime_powers(18446744073709551557ULL);
    ASSERT_EQ(big.size(), 1u);
    EXPECT_EQ(big[0].a, 1u);
    EXPECT_THROW(factor_prime_powers(0), invalid_input);
    EXPECT_THROW(factor_prime_powers(1), invalid_input);
    EXPECT_EQ(least_prime_factor(91), 7u);
    EXPECT_THROW(least_prime_factor(1), invalid_input);
}

TEST(PrimePowerValue, ConstructionAndRecognition) {
    const auto pp = PrimePower::from_value(121);
    EXPECT_EQ(pp, PrimePower::make(11, 2));
    EXPECT_EQ(pp.totient(), 110u);
    EXPECT_EQ(PrimePower::from_value(2).totient(), 1u);
    EXPECT_THROW(PrimePower::from_value(12), invalid_input);
    EXPECT_THROW(PrimePower::from_value(1), invalid_input);
    EXPECT_THROW(PrimePower::from_value(0), invalid_input);
    EXPECT_THROW(PrimePower::make(4, 1), invalid_input);
    EXPECT_THROW(PrimePower::make(3, 0), invalid_input);
    EXPECT_THROW(PrimePower::make(3, 41), invalid_input);
}

TEST(Totient, AgreesWithCoprimeCount) {
    for (u64 n = 1; n <= 2000; ++n)
        ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
}

TEST(MultiplicativeOrder, AgreesWithRepeatedMultiplication) {
    for (u64 m = 2; m <= 300; ++m)
        for (u64 g = 1; g < m; ++g) {
            if (oracle::gcd(g, m) != 1) {
                EXPECT_THROW(multiplicative_order(g, m), invalid_input);
                continue;
            }
            ASSERT_EQ(multiplicative_order(g, m), oracle::order(g, m)) << g << " mod " << m;
        }
    EXPECT_THROW(multiplicative_order(3, 1), invalid_input);
}

TEST(PrimitiveRoot, SmallestRootModPrime) {
    EXPECT_EQ(primitive_root_mod_prime(2), 1u);
    EXPECT_EQ(primitive_root_mod_prime(7), 3u);
    EXPECT_EQ(primitive_root_mod_prime(11), 2u);
    EXPECT_EQ(primitive_root_mod_prime(13), 2u);
    EXPECT_EQ(primitive_root_mod_prime(41), 6u);
    EXPECT_THROW(primitive_root_mod_prime(9), invalid_input);
    for (u64 p = 3; p < 800; p += 2) {
        if (!oracle::is_prime(p))
            continue;
        const u64 g = primitive_root_mod_prime(p);
        ASSERT_EQ(oracle::order(g, p), p - 1) << p;
        for (u64 h = 2; h < g; ++h)
            ASSERT_LT(oracle::order(h, p), p - 1) << "smaller root " << h << " mod " << p;
    }
}

TEST(PrimitiveRoot, GeneratorModOddPrimePowers) {
    EXPECT_EQ(primitive_root_mod_prime_power(PrimePower::make(11, 2)), 2u);
    for (u64 q = 3; q <= 6000; q += 2) {
        const auto f = oracle::factor(q);
        if (f.size() != 1)
            continue;
        const auto pp = PrimePower::make(f.begin()->first, f.begin()->second);
        const u64 g = primitive_root_mod_prime_power(pp);
        ASSERT_EQ(oracle::order(g, q), oracle::phi(q)) << q;
    }
}

TEST(PrimitiveRoot, LiftWhenRootModPDoesNotGenerateModPSquared) {
    // 5 is the least primitive root mod 40487 but 5^40486 == 1 mod 40487^2.
    const u64 p = 40487;
    ASSERT_EQ(primitive_root_mod_prime(p), 5u);
    EXPECT_EQ(pow_mod(5, p - 1, p * p), 1u);
    const u64 g = primitive_root_mod_prime_power(PrimePower::make(p, 2));
    EXPECT_EQ(g, 5 + p);
    EXPECT_EQ(multiplicative_order(g, p * p), p * (p - 1));
}

TEST(PrimitiveRoot, PowersOfTwo) {
    EXPECT_EQ(primitive_root_mod_prime_power(PrimePower::make(2, 1)), 1u);
    EXPECT_THROW(primitive_root_mod_prime_power(PrimePower::make(2, 2)), unsupported_modulus);
    EXPECT_THROW(primitive_root_mod_prime_power(PrimePower::make(2, 5)), unsupported_modulus);
}
