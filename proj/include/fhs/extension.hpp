#pragma once

/**
 * @file extension.hpp
 * @brief Direct-product extension of an FHS set by an auxiliary family.
 *
 * Sequence i of the result is the n x N array whose entry at row t1,
 * column t2 is (e_{w_i(t2)}(t1), x_i(t2)), read row by row. Position
 * t1*N + t2 of the output therefore carries symbol e * v + x.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fhs/correlation.hpp"
#include "fhs/error.hpp"
#include "fhs/labeling.hpp"
#include "fhs/numtheory.hpp"
#include "fhs/one_coincidence.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

/// An auxiliary family as the extension operator sees it: rows over Z_m.
struct AuxiliaryRows {
    std::span<const Sequence> rows;
    u64 alphabet_size;

    AuxiliaryRows(std::span<const Sequence> r, u64 m) : rows(r), alphabet_size(m) {}
    AuxiliaryRows(const OneCoincidenceSet& e) : rows(e.sequences), alphabet_size(e.alphabet_size) {}

    std::size_t length() const { return rows.front().size(); }
};

namespace detail {

inline void check_aux(const AuxiliaryRows& e) {
    if (e.rows.empty())
        throw invalid_input("auxiliary family is empty");
    for (const auto& r : e.rows) {
        if (r.size() != e.length() || r.empty())
            throw invalid_input("auxiliary rows must be nonempty and of equal length");
        for (Symbol s : r)
            if (s >= e.alphabet_size)
                throw invalid_input("auxiliary symbol " + std::to_string(s) + " >= " +
                                    std::to_string(e.alphabet_size));
    }
}

} // namespace detail

inline FhsSet extend_once(const FhsSet& x, const AuxiliaryRows& e, const Labeling& w) {
    detail::check_aux(e);
    if (auto verdict = validate_labeling(x, w, e.rows.size()); !verdict)
        throw invalid_input("extend_once: " + verdict.reason);

    const std::size_t n = e.length();
    const std::size_t big_n = x.length();
    checked_mul(n, big_n);
    Alphabet alphabet = x.alphabet().extended_by(e.alphabet_size);
    const u64 v = x.alphabet().size;

    std::vector<Sequence> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Sequence u(n * big_n);
        const auto xi = x[i];
        for (std::size_t t1 = 0; t1 < n; ++t1)
            for (std::size_t t2 = 0; t2 < big_n; ++t2)
                u[t1 * big_n + t2] = e.rows[w.values[i][t2]][t1] * v + xi[t2];
        out.push_back(std::move(u));
    }
    return FhsSet(std::move(alphabet), std::move(out));
}

/**
 * Correlation of extended sequences i and j at shift tau = N*tau1 + tau2,
 * assembled from base hits and auxiliary correlations.
 *
 * A hit at column t2 pairs with column t2 + tau2 of the shifted array. When
 * that column wraps past N - 1 it reads from the next row, so its auxiliary
 * shift is tau1 + 1 rather than tau1.
 */
inline u64 decomposed_correlation(const FhsSet& x, const AuxiliaryRows& e, const Labeling& w, std::size_t i,
                                  std::size_t j, u64 tau) {
    detail::check_aux(e);
    const std::size_t n = e.length();
    const std::size_t big_n = x.length();
    if (i >= x.size() || j >= x.size())
        throw invalid_input("decomposed_correlation: sequence index out of range");
    if (tau >= static_cast<u64>(n) * big_n)
        throw invalid_input("decomposed_correlation: shift " + std::to_string(tau) + " out of range");
    const u64 tau1 = tau / big_n;
    const u64 tau2 = tau % big_n;
    u64 total = 0;
    for (std::size_t t2 = 0; t2 < big_n; ++t2) {
        const bool wrap = t2 + tau2 >= big_n;
        const std::size_t col = wrap ? t2 + tau2 - big_n : t2 + tau2;
        if (x[i][t2] != x[j][col])
            continue;
        const u64 aux_shift = (tau1 + (wrap ? 1 : 0)) % n;
        total += hamming_correlation(e.rows[w.values[i][t2]], e.rows[w.values[j][col]], aux_shift);
    }
    return total;
}

} // namespace fhs
