#pragma once

#include <string>
#include <vector>

#include "fhs/error.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

/// (26, 7, 4; 3) set over Z_7.
inline FhsSet example1_base() {
    return FhsSet(Alphabet::plain(7),
                  {
                      {6, 1, 5, 3, 4, 4, 1, 2, 3, 5, 2, 0, 0, 6, 0, 0, 2, 5, 3, 2, 1, 4, 4, 3, 5, 1},
                      {6, 5, 3, 1, 2, 2, 5, 0, 1, 3, 0, 4, 4, 6, 4, 4, 0, 3, 1, 0, 5, 2, 2, 1, 3, 5},
                      {6, 3, 1, 5, 0, 0, 3, 4, 5, 1, 4, 2, 2, 6, 2, 2, 4, 1, 5, 4, 3, 0, 0, 5, 1, 3},
                  },
                  "example1_base");
}

/// (8, 3, 3; 3) set over Z_3.
inline FhsSet example2_base() {
    return FhsSet(Alphabet::plain(3),
                  {
                      {0, 2, 2, 1, 0, 1, 1, 2},
                      {1, 0, 0, 2, 1, 2, 2, 0},
                      {2, 1, 1, 0, 2, 0, 0, 1},
                  },
                  "example2_base");
}

inline std::vector<std::string> builtin_names() { return {"example1_base", "example2_base"}; }

inline FhsSet builtin(const std::string& name) {
    if (name == "example1_base")
        return example1_base();
    if (name == "example2_base")
        return example2_base();
    std::string known;
    for (const auto& n : builtin_names())
        known += (known.empty() ? "" : ", ") + n;
    throw not_found("unknown builtin '" + name + "' (available: " + known + ")");
}

} // namespace fhs
