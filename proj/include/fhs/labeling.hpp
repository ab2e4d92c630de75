#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fhs/error.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

/// Occurrence labels: values[i][t] picks the auxiliary row paired with x_i(t).
struct Labeling {
    std::vector<std::vector<u64>> values;
    u64 capacity = 0;

    u64 at(std::size_t i, std::size_t t) const { return values[i][t]; }
    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Label of each occurrence = number of earlier occurrences of the same slot
/// in row-major order. Capacity is m(X).
inline Labeling cumulative_labeling(const FhsSet& s) {
    Labeling out;
    std::vector<u64> seen(s.alphabet().size, 0);
    out.values.reserve(s.size());
    for (const auto& seq : s.sequences()) {
        std::vector<u64> row(seq.size());
        for (std::size_t t = 0; t < seq.size(); ++t)
            row[t] = seen[seq[t]]++;
        out.values.push_back(std::move(row));
    }
    for (u64 c : seen)
        out.capacity = std::max(out.capacity, c);
    return out;
}

struct LabelingVerdict {
    bool valid = true;
    std::string reason;
    std::optional<Symbol> slot;
    std::optional<Occurrence> first;
    std::optional<Occurrence> second;

    explicit operator bool() const noexcept { return valid; }
};

/// Accepts iff every label is below `capacity` and no slot repeats a label.
inline LabelingVerdict validate_labeling(const FhsSet& s, const Labeling& w, u64 capacity) {
    LabelingVerdict v;
    auto fail = [&](std::string why) {
        v.valid = false;
        v.reason = std::move(why);
        return v;
    };
    if (w.values.size() != s.size())
        return fail("labeling has " + std::to_string(w.values.size()) + " rows, set has " +
                    std::to_string(s.size()) + " sequences");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (w.values[i].size() != s.length())
            return fail("labeling row " + std::to_string(i) + " has length " +
                        std::to_string(w.values[i].size()) + ", expected " + std::to_string(s.length()));
        for (std::size_t t = 0; t < s.length(); ++t) {
            if (w.values[i][t] >= capacity) {
                v.first = Occurrence{i, t};
                v.slot = s[i][t];
                return fail("label " + std::to_string(w.values[i][t]) + " at (" + std::to_string(i) + ", " +
                            std::to_string(t) + ") exceeds capacity " + std::to_string(capacity));
            }
        }
    }
    const auto occ = occurrence_map(s);
    std::unordered_map<u64, Occurrence> owner;
    for (Symbol k = 0; k < occ.slots.size(); ++k) {
        owner.clear();
        for (const auto& o : occ.slots[k]) {
            const u64 label = w.values[o.sequence][o.position];
            auto [it, fresh] = owner.emplace(label, o);
            if (!fresh) {
                v.slot = k;
                v.first = it->second;
                v.second = o;
                return fail("slot " + std::to_string(k) + " has label " + std::to_string(label) +
                            " at both (" + std::to_string(it->second.sequence) + ", " +
                            std::to_string(it->second.position) + ") and (" + std::to_string(o.sequence) +
                            ", " + std::to_string(o.position) + ")");
            }
        }
    }
    return v;
}

} // namespace fhs
