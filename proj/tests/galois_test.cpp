#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fhs/galois.hpp"
#include "oracles.hpp"

using namespace fhs;

namespace {

std::vector<u64> digits(u64 x, const PrimePower& pp) {
    std::vector<u64> d(pp.a);
    for (auto& c : d) {
        c = x % pp.p;
        x /= pp.p;
    }
    return d;
}

u64 undigits(const std::vector<u64>& d, u64 p) {
    u64 x = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        x = x * p + d[i];
    return x;
}

/// Every monic of degree a that factors, found by multiplying lower-degree monics.
std::set<u64> reducible_codes(const PrimePower& pp) {
    std::set<u64> out;
    for (unsigned d = 1; d <= pp.a / 2; ++d) {
        const u64 n1 = checked_pow(pp.p, d), n2 = checked_pow(pp.p, pp.a - d);
        for (u64 c1 = 0; c1 < n1; ++c1)
            for (u64 c2 = 0; c2 < n2; ++c2) {
                std::vector<u64> f = digits(c1, PrimePower{pp.p, d, n1}), g = digits(c2, PrimePower{pp.p, pp.a - d, n2});
                f.push_back(1);
                g.push_back(1);
                std::vector<u64> prod(f.size() + g.size() - 1, 0);
                for (std::size_t i = 0; i < f.size(); ++i)
                    for (std::size_t j = 0; j < g.size(); ++j)
                        prod[i + j] = (prod[i + j] + f[i] * g[j]) % pp.p;
                prod.pop_back(); // leading 1
                out.insert(undigits(prod, pp.p));
            }
    }
    return out;
}

/// Schoolbook product reduced by the given monic modulus.
u64 slow_mul(u64 x, u64 y, const PrimePower& pp, const std::vector<u64>& modulus) {
    const auto a = digits(x, pp), b = digits(y, pp);
    std::vector<u64> prod(2 * pp.a, 0);
    for (unsigned i = 0; i < pp.a; ++i)
        for (unsigned j = 0; j < pp.a; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % pp.p;
    for (std::size_t k = prod.size(); k-- > pp.a;) {
        const u64 lead = prod[k];
        for (unsigned i = 0; i <= pp.a; ++i)
            prod[k - pp.a + i] = (prod[k - pp.a + i] + pp.p * pp.p - lead * modulus[i] % pp.p) % pp.p;
    }
    prod.resize(pp.a);
    return undigits(prod, pp.p);
}

std::vector<PrimePower> prime_powers_up_to(u64 limit) {
    std::vector<PrimePower> out;
    for (u64 q = 2; q <= limit; ++q) {
        const auto f = oracle::factor(q);
        if (f.size() == 1)
            out.push_back(PrimePower::make(f.begin()->first, f.begin()->second));
    }
    return out;
}

} // namespace

TEST(GaloisField, FourElements) {
    const auto f = gf_construct(PrimePower::make(2, 2));
    EXPECT_EQ(f.modulus(), (std::vector<u64>{1, 1, 1}));
    EXPECT_EQ(f.primitive_element(), 2u);
    EXPECT_EQ(f.antilog(), (std::vector<u64>{1, 2, 3}));
    // x * (x + 1) = x^2 + x = 1
    EXPECT_EQ(f.mul(2, 3), 1u);
    EXPECT_EQ(f.add(2, 3), 1u);
    EXPECT_EQ(f.neg(3), 3u);
}

TEST(GaloisField, NineElements) {
    const auto f = gf_construct(PrimePower::make(3, 2));
    EXPECT_EQ(f.modulus(), (std::vector<u64>{1, 0, 1}));
    // x has order 4 under x^2 = -1; 1 + x is the first element of order 8.
    EXPECT_EQ(f.primitive_element(), 4u);
    EXPECT_EQ(f.mul(3, 3), 2u);
    EXPECT_EQ(f.add(5, 4), 6u); // (2 + x) + (1 + x) = 2x
    EXPECT_EQ(f.sub(0, 4), 8u); // -(1 + x) = 2 + 2x
    for (u64 x = 0; x < 9; ++x)
        for (u64 y = 0; y < 9; ++y)
            for (u64 z = 0; z < 9; ++z) {
                ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            }
}

TEST(GaloisField, PrimeFieldsAreResidues) {
    const auto f = gf_construct(PrimePower::make(7, 1));
    EXPECT_EQ(f.modulus(), (std::vector<u64>{0, 1}));
    EXPECT_EQ(f.primitive_element(), 3u);
    for (u64 x = 0; x < 7; ++x)
        for (u64 y = 0; y < 7; ++y) {
            EXPECT_EQ(f.add(x, y), (x + y) % 7);
            EXPECT_EQ(f.mul(x, y), x * y % 7);
        }
}

TEST(GaloisField, ModulusIsSmallestIrreducibleUpTo1024) {
    for (const auto& pp : prime_powers_up_to(1024)) {
        if (pp.a == 1)
            continue;
        const auto reducible = reducible_codes(pp);
        u64 want = 0;
        while (reducible.count(want))
            ++want;
        const auto f = gf_construct(pp);
        std::vector<u64> m = f.modulus();
        ASSERT_EQ(m.size(), pp.a + 1u);
        ASSERT_EQ(m.back(), 1u);
        m.pop_back();
        EXPECT_EQ(undigits(m, pp.p), want) << "GF(" << pp.q << ")";
    }
}

TEST(GaloisField, TablesAgreeWithPolynomialArithmeticUpTo1024) {
    for (const auto& pp : prime_powers_up_to(1024)) {
        const auto f = gf_construct(pp);
        const u64 q = pp.q;
        std::vector<bool> seen(q, false);
        for (u64 i = 0; i + 1 < q; ++i) {
            const u64 x = f.antilog()[i];
            ASSERT_TRUE(x > 0 && x < q && !seen[x]) << "GF(" << q << ") antilog repeats";
            seen[x] = true;
            ASSERT_EQ(f.log(x), i);
            ASSERT_EQ(f.pow_primitive(i + q - 1), x);
        }
        const u64 step = q <= 128 ? 1 : q / 61 + 1;
        for (u64 x = 0; x < q; x += step)
            for (u64 y = 0; y < q; ++y) {
                ASSERT_EQ(f.mul(x, y), slow_mul(x, y, pp, f.modulus())) << "GF(" << q << ") " << x << "*" << y;
                const auto dx = digits(x, pp), dy = digits(y, pp);
                std::vector<u64> sum(pp.a);
                for (unsigned k = 0; k < pp.a; ++k)
                    sum[k] = (dx[k] + dy[k]) % pp.p;
                ASSERT_EQ(f.add(x, y), undigits(sum, pp.p));
                ASSERT_EQ(f.add(f.sub(x, y), y), x);
            }
    }
}

TEST(GaloisField, PrimitiveElementIsSmallestOfFullOrder) {
    for (const auto& pp : prime_powers_up_to(256)) {
        const auto f = gf_construct(pp);
        auto order = [&](u64 g) {
            u64 x = g, k = 1;
            while (x != 1) {
                x = slow_mul(x, g, pp, f.modulus());
                ++k;
            }
            return k;
        };
        const u64 g = f.primitive_element();
        ASSERT_EQ(order(g), pp.q - 1) << "GF(" << pp.q << ")";
        for (u64 h = 1; h < g; ++h)
            ASSERT_LT(order(h), pp.q - 1) << "GF(" << pp.q << ") smaller generator " << h;
    }
}

TEST(GaloisField, Errors) {
    const auto f = gf_construct(PrimePower::make(5, 1));
    EXPECT_THROW(f.log(0), invalid_input);
    EXPECT_THROW(f.log(5), invalid_input);
    EXPECT_THROW(gf_construct(PrimePower::make(2, 25)), invalid_input);
}
