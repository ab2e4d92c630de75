#pragma once

/**
 * @file one_coincidence.hpp
 * @brief Auxiliary sequence families with H_a = 0 and H_c <= 1.
 *
 *  - dilation:  e_j(i) = i g^j  mod q,       0 <= j <= p-2, 0 <= i < q
 *  - translate: e_j(i) = g^i + j mod q,      0 <= j <= p-1, 0 <= i < (p-1)p^(a-1)
 *  - field:     e_j(i) = g^i + j in GF(q),   0 <= j <  q,   0 <= i < q-1
 *
 * g is the deterministic generator from numtheory / galois.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhs/correlation.hpp"
#include "fhs/error.hpp"
#include "fhs/galois.hpp"
#include "fhs/numtheory.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

struct CoincidenceMaxima {
    u64 max_auto = 0;
    u64 max_cross = 0;

    bool one_coincidence() const { return max_auto == 0 && max_cross <= 1; }
    friend bool operator==(const CoincidenceMaxima&, const CoincidenceMaxima&) = default;
};

namespace detail {

/**
 * True when one injective partial symbol map s carries every e_j onto
 * e_{j+1} pointwise. Then H_{e_{j1+1}, e_{j2+1}} = H_{e_{j1}, e_{j2}} for all
 * shifts, so every pair reduces to (e_0, e_{j2-j1}).
 */
inline bool is_symbol_chain(const std::vector<Sequence>& seqs, u64 bound) {
    constexpr u64 none = ~u64{0};
    std::vector<u64> forward(bound, none), backward(bound, none);
    for (std::size_t j = 0; j + 1 < seqs.size(); ++j) {
        for (std::size_t t = 0; t < seqs[j].size(); ++t) {
            const u64 a = seqs[j][t], b = seqs[j + 1][t];
            if (forward[a] == none && backward[b] == none) {
                forward[a] = b;
                backward[b] = a;
            } else if (forward[a] != b || backward[b] != a) {
                return false;
            }
        }
    }
    return true;
}

inline u64 max_nontrivial(const std::vector<u64>& row) {
    u64 m = 0;
    for (std::size_t tau = 1; tau < row.size(); ++tau)
        m = std::max(m, row[tau]);
    return m;
}

} // namespace detail

/// Exact (H_a, H_c) of an equal-length sequence family by exhaustive enumeration.
inline CoincidenceMaxima verify_one_coincidence(const std::vector<Sequence>& seqs) {
    if (seqs.empty())
        throw invalid_input("verify_one_coincidence: empty family");
    const std::size_t n = seqs.front().size();
    u64 bound = 0;
    for (std::size_t j = 0; j < seqs.size(); ++j) {
        if (seqs[j].size() != n)
            throw invalid_input("verify_one_coincidence: sequence " + std::to_string(j) + " has length " +
                                std::to_string(seqs[j].size()) + ", expected " + std::to_string(n));
        for (Symbol s : seqs[j])
            bound = std::max<u64>(bound, s + 1);
    }
    if (n == 0)
        throw invalid_input("verify_one_coincidence: sequences must be nonempty");

    CoincidenceMaxima out;
    auto cross = [&](const std::vector<u64>& row) {
        out.max_cross = std::max(out.max_cross, *std::max_element(row.begin(), row.end()));
    };
    if (seqs.size() > 2 && detail::is_symbol_chain(seqs, bound)) {
        // H_{e_d, e_0}(tau) = H_{e_0, e_d}(N - tau): same maximum.
        HitCounter against_first(seqs[0], bound);
        out.max_auto = detail::max_nontrivial(against_first.table(seqs[0]));
        for (std::size_t d = 1; d < seqs.size(); ++d)
            cross(against_first.table(seqs[d]));
        return out;
    }
    for (std::size_t j = 0; j < seqs.size(); ++j) {
        HitCounter against(seqs[j], bound);
        out.max_auto = std::max(out.max_auto, detail::max_nontrivial(against.table(seqs[j])));
        for (std::size_t i = 0; i < j; ++i)
            cross(against.table(seqs[i]));
    }
    return out;
}

struct OneCoincidenceSet {
    enum class Kind { dilation, translate, field };

    Kind kind = Kind::dilation;
    PrimePower prime_power;
    u64 generator = 0;
    /// Symbols lie in 0..alphabet_size-1 (Z_q or GF(q) element indices).
    u64 alphabet_size = 0;
    std::vector<Sequence> sequences;
    CoincidenceMaxima maxima;

    std::size_t rows() const noexcept { return sequences.size(); }
    std::size_t length() const noexcept { return sequences.front().size(); }

    FhsSet to_fhs_set() const {
        return FhsSet(Alphabet::plain(alphabet_size), sequences, std::string(kind_name(kind)));
    }

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::dilation: return "dilation";
        case Kind::translate: return "translate";
        case Kind::field: return "field";
        }
        return "?";
    }
};

namespace detail {

inline void seal(OneCoincidenceSet& e, bool verify) {
    std::vector<const Sequence*> order;
    for (const auto& row : e.sequences)
        order.push_back(&row);
    std::sort(order.begin(), order.end(), [](const Sequence* a, const Sequence* b) { return *a < *b; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (*order[i - 1] == *order[i])
            throw std::logic_error("one-coincidence generator produced duplicate sequences");
    if (!verify)
        return;
    e.maxima = verify_one_coincidence(e.sequences);
    if (!e.maxima.one_coincidence())
        throw std::logic_error(std::string(OneCoincidenceSet::kind_name(e.kind)) +
                               " family failed verification: H_a=" + std::to_string(e.maxima.max_auto) +
                               " H_c=" + std::to_string(e.maxima.max_cross));
}

inline void require_odd(const PrimePower& pp, const char* what) {
    if (pp.p == 2)
        throw unsupported_modulus(std::string(what) + " family needs an odd prime, got p = 2");
}

} // namespace detail

inline OneCoincidenceSet gen_dilation_set(const PrimePower& pp, bool verify = true) {
    detail::require_odd(pp, "dilation");
    OneCoincidenceSet e;
    e.kind = OneCoincidenceSet::Kind::dilation;
    e.prime_power = pp;
    e.generator = primitive_root_mod_prime_power(pp);
    e.alphabet_size = pp.q;
    u64 scale = 1;
    for (u64 j = 0; j + 1 < pp.p; ++j) {
        Sequence row(pp.q);
        for (u64 i = 1; i < pp.q; ++i) {
            const u64 next = row[i - 1] + scale;
            row[i] = next >= pp.q ? next - pp.q : next;
        }
        e.sequences.push_back(std::move(row));
        scale = mul_mod(scale, e.generator, pp.q);
    }
    detail::seal(e, verify);
    return e;
}

inline OneCoincidenceSet gen_translate_set(const PrimePower& pp, bool verify = true) {
    detail::require_odd(pp, "translate");
    OneCoincidenceSet e;
    e.kind = OneCoincidenceSet::Kind::translate;
    e.prime_power = pp;
    e.generator = primitive_root_mod_prime_power(pp);
    e.alphabet_size = pp.q;
    const u64 d = pp.totient();
    Sequence powers(d);
    u64 x = 1;
    for (u64 i = 0; i < d; ++i) {
        powers[i] = x;
        x = mul_mod(x, e.generator, pp.q);
    }
    for (u64 j = 0; j < pp.p; ++j) {
        Sequence row(d);
        for (u64 i = 0; i < d; ++i) {
            const u64 shifted = powers[i] + j;
            row[i] = shifted >= pp.q ? shifted - pp.q : shifted;
        }
        e.sequences.push_back(std::move(row));
    }
    detail::seal(e, verify);
    return e;
}

inline OneCoincidenceSet gen_field_set(const PrimePower& pp, bool verify = true) {
    const FieldElementTable field = gf_construct(pp);
    OneCoincidenceSet e;
    e.kind = OneCoincidenceSet::Kind::field;
    e.prime_power = pp;
    e.generator = field.primitive_element();
    e.alphabet_size = pp.q;
    const auto& powers = field.antilog();
    for (u64 j = 0; j < pp.q; ++j) {
        Sequence row(pp.q - 1);
        for (u64 i = 0; i + 1 < pp.q; ++i)
            row[i] = field.add(powers[i], j);
        e.sequences.push_back(std::move(row));
    }
    detail::seal(e, verify);
    return e;
}

} // namespace fhs
