#pragma once

/**
 * @file sequence_set.hpp
 * @brief Frequency-hopping sequence sets and slot occurrence statistics.
 *
 * Symbols are dense indices 0..v-1. A product alphabet Z_m x F flattens the
 * pair (c, f) to c * |F| + f, so repeated extension nests left-major and the
 * factor list grows at the front.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhs/error.hpp"
#include "fhs/numtheory.hpp"

namespace fhs {

using Symbol = std::uint64_t;
using Sequence = std::vector<Symbol>;

struct Alphabet {
    enum class Kind { plain, product };

    Kind kind = Kind::plain;
    u64 size = 0;
    /// Product kind only; leftmost is the newest extension coordinate.
    std::vector<u64> factors;

    static Alphabet plain(u64 v) {
        if (v < 1)
            throw invalid_input("alphabet size must be >= 1");
        return Alphabet{Kind::plain, v, {}};
    }

    static Alphabet product(std::vector<u64> factors) {
        if (factors.empty())
            throw invalid_input("product alphabet needs at least one factor");
        u64 size = 1;
        for (u64 f : factors) {
            if (f < 1)
                throw invalid_input("alphabet factor must be >= 1");
            size = checked_mul(size, f);
        }
        return Alphabet{Kind::product, size, std::move(factors)};
    }

    /// Z_m x (this), flattened left-major.
    Alphabet extended_by(u64 m) const {
        std::vector<u64> f{m};
        if (kind == Kind::product)
            f.insert(f.end(), factors.begin(), factors.end());
        else
            f.push_back(size);
        return product(std::move(f));
    }

    /// Splits a flattened symbol into one coordinate per factor.
    std::vector<u64> coordinates(Symbol s) const {
        if (kind == Kind::plain)
            return {s};
        std::vector<u64> out(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            out[i] = s % factors[i];
            s /= factors[i];
        }
        return out;
    }

    void validate() const {
        if (size < 1)
            throw validation_error("alphabet size must be >= 1");
        if (kind == Kind::plain) {
            if (!factors.empty())
                throw validation_error("plain alphabet must not list factors");
            return;
        }
        if (factors.empty())
            throw validation_error("product alphabet needs at least one factor");
        u64 prod = 1;
        for (u64 f : factors) {
            if (f < 1 || __builtin_mul_overflow(prod, f, &prod))
                throw validation_error("invalid product alphabet factors");
        }
        if (prod != size)
            throw validation_error("product alphabet size " + std::to_string(size) +
                                   " != product of factors " + std::to_string(prod));
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// M sequences of common length N over one alphabet.
class FhsSet {
public:
    FhsSet(Alphabet alphabet, std::vector<Sequence> sequences, std::optional<std::string> label = {})
        : alphabet_(std::move(alphabet)), sequences_(std::move(sequences)), label_(std::move(label)) {
        alphabet_.validate();
        if (sequences_.empty())
            throw validation_error("sequence set must contain at least one sequence");
        const std::size_t n = sequences_.front().size();
        if (n == 0)
            throw validation_error("sequences must have length >= 1");
        for (std::size_t i = 0; i < sequences_.size(); ++i) {
            if (sequences_[i].size() != n)
                throw validation_error("sequences[" + std::to_string(i) + "] has length " +
                                       std::to_string(sequences_[i].size()) + ", expected " +
                                       std::to_string(n));
            for (std::size_t t = 0; t < n; ++t) {
                if (sequences_[i][t] >= alphabet_.size)
                    throw validation_error("sequences[" + std::to_string(i) + "][" + std::to_string(t) +
                                           "]: symbol " + std::to_string(sequences_[i][t]) +
                                           " out of range for alphabet size " +
                                           std::to_string(alphabet_.size));
            }
        }
    }

    std::size_t size() const noexcept { return sequences_.size(); }
    std::size_t length() const noexcept { return sequences_.front().size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Sequence>& sequences() const noexcept { return sequences_; }
    std::span<const Symbol> operator[](std::size_t i) const { return sequences_[i]; }
    const std::optional<std::string>& label() const noexcept { return label_; }

    friend bool operator==(const FhsSet&, const FhsSet&) = default;

private:
    Alphabet alphabet_;
    std::vector<Sequence> sequences_;
    std::optional<std::string> label_;
};

struct Occurrence {
    std::size_t sequence;
    std::size_t position;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Positions of each slot, row-major (sequence index major).
struct OccurrenceMap {
    std::vector<std::vector<Occurrence>> slots;
    u64 multiplicity = 0;

    std::size_t count(Symbol k) const { return slots[k].size(); }
};

inline OccurrenceMap occurrence_map(const FhsSet& s) {
    OccurrenceMap out;
    out.slots.resize(s.alphabet().size);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t t = 0; t < s.length(); ++t)
            out.slots[s[i][t]].push_back({i, t});
    for (const auto& list : out.slots)
        out.multiplicity = std::max<u64>(out.multiplicity, list.size());
    return out;
}

/// m(X): largest number of appearances of any one slot.
inline u64 multiplicity(const FhsSet& s) {
    std::vector<u64> counts(s.alphabet().size, 0);
    u64 m = 0;
    for (const auto& seq : s.sequences())
        for (Symbol x : seq)
            m = std::max(m, ++counts[x]);
    return m;
}

} // namespace fhs
