#pragma once

/**
 * @file galois.hpp
 * @brief Table-driven GF(p^a).
 *
 * Elements are numbered by their coefficient vectors read as base-p digits:
 * c_0 + c_1 x + ... + c_{a-1} x^{a-1}  <->  c_0 + c_1 p + ... + c_{a-1} p^{a-1}.
 * For a = 1 this is the residue itself.
 *
 * The modulus is the smallest monic irreducible of degree a in that same
 * digit order over its non-leading coefficients, and the primitive element
 * is the smallest full-order element. Both choices are deterministic.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "fhs/error.hpp"
#include "fhs/numtheory.hpp"

namespace fhs {

namespace detail {

using Poly = std::vector<u64>; // coefficients, low degree first

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

/// Remainder of f modulo a monic g over Z_p.
inline Poly poly_rem(Poly f, const Poly& g, u64 p) {
    poly_trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const u64 lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = (f[shift + i] + (p - mul_mod(lead, g[i], p))) % p;
        poly_trim(f);
    }
    return f;
}

/// Monic polynomial of degree `deg` whose non-leading digits encode `code`.
inline Poly monic_from_code(u64 code, unsigned deg, u64 p) {
    Poly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = code % p;
        code /= p;
    }
    f[deg] = 1;
    return f;
}

/// Irreducibility by trial division against every monic of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, u64 p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        const u64 count = checked_pow(p, d);
        for (u64 code = 0; code < count; ++code) {
            if (poly_rem(f, monic_from_code(code, d, p), p).empty())
                return false;
        }
    }
    return true;
}

} // namespace detail

class FieldElementTable {
public:
    static constexpr u64 max_order = u64{1} << 24;

    explicit FieldElementTable(const PrimePower& pp) : pp_(pp) {
        if (pp.q > max_order)
            throw invalid_input("GF(" + std::to_string(pp.q) + ") exceeds the table limit");
        const u64 candidates = checked_pow(pp.p, pp.a);
        for (u64 code = 0; code < candidates; ++code) {
            auto f = detail::monic_from_code(code, pp.a, pp.p);
            if (detail::is_irreducible(f, pp.p)) {
                modulus_ = std::move(f);
                break;
            }
        }
        if (modulus_.empty())
            throw invalid_input("no irreducible polynomial found for GF(" + std::to_string(pp.q) + ")");

        const u64 q = pp.q;
        antilog_.assign(q - 1, 0);
        log_.assign(q, q); // q marks "no logarithm" (element 0)
        for (u64 g = 1; g < q; ++g) {
            if (fill_powers(g)) {
                primitive_ = g;
                break;
            }
        }
        if (primitive_ == 0)
            throw invalid_input("no primitive element found for GF(" + std::to_string(q) + ")");
    }

    const PrimePower& prime_power() const noexcept { return pp_; }
    u64 order() const noexcept { return pp_.q; }
    u64 characteristic() const noexcept { return pp_.p; }
    /// Coefficients low degree first; monic of degree a.
    const std::vector<u64>& modulus() const noexcept { return modulus_; }
    u64 primitive_element() const noexcept { return primitive_; }
    /// antilog()[i] = g^i for i in 0..q-2.
    const std::vector<u64>& antilog() const noexcept { return antilog_; }

    u64 pow_primitive(u64 i) const { return antilog_[i % (pp_.q - 1)]; }

    u64 log(u64 x) const {
        if (x == 0 || x >= pp_.q)
            throw invalid_input("log undefined for element " + std::to_string(x));
        return log_[x];
    }

    u64 add(u64 x, u64 y) const {
        if (pp_.a == 1)
            return (x + y) % pp_.p;
        u64 out = 0, scale = 1;
        for (unsigned i = 0; i < pp_.a; ++i) {
            out += ((x % pp_.p + y % pp_.p) % pp_.p) * scale;
            x /= pp_.p;
            y /= pp_.p;
            scale *= pp_.p;
        }
        return out;
    }

    u64 neg(u64 x) const {
        u64 out = 0, scale = 1;
        for (unsigned i = 0; i < pp_.a; ++i) {
            out += ((pp_.p - x % pp_.p) % pp_.p) * scale;
            x /= pp_.p;
            scale *= pp_.p;
        }
        return out;
    }

    u64 sub(u64 x, u64 y) const { return add(x, neg(y)); }

    u64 mul(u64 x, u64 y) const {
        if (x == 0 || y == 0)
            return 0;
        return antilog_[(log_[x] + log_[y]) % (pp_.q - 1)];
    }

private:
    /// Polynomial product of two encoded elements, reduced by the modulus.
    u64 raw_mul(u64 x, u64 y) const {
        const u64 p = pp_.p;
        const unsigned a = pp_.a;
        detail::Poly fx(a), fy(a), prod(2 * a, 0);
        for (unsigned i = 0; i < a; ++i) {
            fx[i] = x % p;
            x /= p;
            fy[i] = y % p;
            y /= p;
        }
        for (unsigned i = 0; i < a; ++i)
            for (unsigned j = 0; j < a; ++j)
                prod[i + j] = (prod[i + j] + mul_mod(fx[i], fy[j], p)) % p;
        auto r = detail::poly_rem(std::move(prod), modulus_, p);
        u64 out = 0;
        for (std::size_t i = r.size(); i-- > 0;)
            out = out * p + r[i];
        return out;
    }

    /// Fills the log tables from g; false (tables untouched) when g lacks full order.
    bool fill_powers(u64 g) {
        const u64 q = pp_.q;
        std::vector<u64> seq(q - 1);
        std::vector<bool> seen(q, false);
        u64 x = 1;
        for (u64 i = 0; i < q - 1; ++i) {
            if (seen[x])
                return false;
            seen[x] = true;
            seq[i] = x;
            x = raw_mul(x, g);
        }
        if (x != 1)
            return false;
        antilog_ = std::move(seq);
        for (u64 i = 0; i < q - 1; ++i)
            log_[antilog_[i]] = i;
        return true;
    }

    PrimePower pp_;
    std::vector<u64> modulus_;
    u64 primitive_ = 0;
    std::vector<u64> antilog_;
    std::vector<u64> log_;
};

inline FieldElementTable gf_construct(const PrimePower& pp) { return FieldElementTable(pp); }

} // namespace fhs
