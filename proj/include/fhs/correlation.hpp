#pragma once

/**
 * @file correlation.hpp
 * @brief Periodic Hamming correlation and full correlation profiles.
 *
 * H_{x,y}(tau) = #{ t : x(t) == y((t + tau) mod N) }.
 *
 * Profiles count hits directly, one O(N) pass per (pair, shift). The
 * occurrence-driven HitCounter gives the same table in O(sum of products of
 * slot counts) and is meant for near-permutation families such as the
 * auxiliary one-coincidence sets.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "fhs/error.hpp"
#include "fhs/sequence_set.hpp"

namespace fhs {

inline u64 hamming_correlation(std::span<const Symbol> x, std::span<const Symbol> y, u64 shift) {
    const std::size_t n = x.size();
    if (y.size() != n)
        throw invalid_input("hamming_correlation: lengths differ (" + std::to_string(n) + " vs " +
                            std::to_string(y.size()) + ")");
    if (shift >= n)
        throw invalid_input("hamming_correlation: shift " + std::to_string(shift) +
                            " out of range for length " + std::to_string(n));
    u64 hits = 0;
    const std::size_t split = n - shift;
    for (std::size_t t = 0; t < split; ++t)
        hits += x[t] == y[t + shift];
    for (std::size_t t = split; t < n; ++t)
        hits += x[t] == y[t + shift - n];
    return hits;
}

inline u64 hamming_correlation(const FhsSet& s, std::size_t i, std::size_t j, u64 shift) {
    if (i >= s.size() || j >= s.size())
        throw invalid_input("hamming_correlation: sequence index out of range");
    return hamming_correlation(s[i], s[j], shift);
}

/// H_{x,y}(tau) for every tau, by direct counting.
inline std::vector<u64> correlation_table(std::span<const Symbol> x, std::span<const Symbol> y) {
    if (x.size() != y.size())
        throw invalid_input("correlation_table: lengths differ");
    std::vector<u64> out(x.size());
    for (std::size_t tau = 0; tau < x.size(); ++tau)
        out[tau] = hamming_correlation(x, y, tau);
    return out;
}

/**
 * All-shift correlation against a fixed sequence y, accumulated per matching
 * symbol pair: cost is the sum over symbols of (count in x) * (count in y).
 *
 * `table(x)[tau]` = H_{x,y}(tau). Symbols must lie below `symbol_bound`.
 */
class HitCounter {
public:
    HitCounter(std::span<const Symbol> y, u64 symbol_bound)
        : n_(y.size()), bound_(symbol_bound), start_(symbol_bound + 1, 0), pos_(y.size()), out_(y.size()) {
        for (Symbol s : y) {
            if (s >= symbol_bound)
                throw invalid_input("hit_table: symbol " + std::to_string(s) + " >= bound");
            ++start_[s + 1];
        }
        for (u64 k = 0; k < symbol_bound; ++k)
            start_[k + 1] += start_[k];
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t t = 0; t < n_; ++t)
            pos_[fill[y[t]]++] = t;
    }

    const std::vector<u64>& table(std::span<const Symbol> x) {
        if (x.size() != n_)
            throw invalid_input("hit_table: lengths differ");
        std::fill(out_.begin(), out_.end(), 0);
        for (std::size_t t = 0; t < n_; ++t) {
            const Symbol s = x[t];
            if (s >= bound_)
                throw invalid_input("hit_table: symbol " + std::to_string(s) + " >= bound");
            for (std::size_t k = start_[s]; k < start_[s + 1]; ++k) {
                const std::size_t tp = pos_[k];
                ++out_[tp >= t ? tp - t : tp + n_ - t];
            }
        }
        return out_;
    }

private:
    std::size_t n_;
    u64 bound_;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> pos_;
    std::vector<u64> out_;
};

inline std::vector<u64> hit_table(std::span<const Symbol> x, std::span<const Symbol> y, u64 symbol_bound) {
    HitCounter counter(y, symbol_bound);
    return counter.table(x);
}

/// Worker count: FHS_THREADS when set and positive, else hardware concurrency.
inline unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FHS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<unsigned>(std::min<long>(v, 1024));
    }
    return hw;
}

struct CorrelationProfile {
    std::size_t length = 0;     // N
    std::size_t set_size = 0;   // M
    u64 max_auto = 0;           // H_a, shifts 0 < tau < N
    u64 max_cross = 0;          // H_c, all shifts, i != j
    u64 max_overall = 0;        // H_m
    /// One row of N values per unordered pair i <= j, in pair_index order.
    std::vector<std::vector<u64>> table;

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * set_size - i * (i + 1) / 2 + j;
    }

    /// H_{x_i,x_j}(tau) for any ordered pair, using H_{y,x}(tau) = H_{x,y}(N - tau).
    u64 at(std::size_t i, std::size_t j, std::size_t tau) const {
        if (i <= j)
            return table[pair_index(i, j)][tau];
        return table[pair_index(j, i)][tau == 0 ? 0 : length - tau];
    }
};

/// Exhaustive profile over all pairs and shifts; pairs fan out over worker threads.
inline CorrelationProfile correlation_profile(const FhsSet& s, unsigned threads = 0) {
    CorrelationProfile prof;
    prof.length = s.length();
    prof.set_size = s.size();
    const std::size_t m = s.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            pairs.emplace_back(i, j);
    prof.table.resize(pairs.size());

    if (threads == 0)
        threads = thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, pairs.size()));
    auto work = [&](std::size_t first) {
        for (std::size_t k = first; k < pairs.size(); k += threads)
            prof.table[k] = correlation_table(s[pairs[k].first], s[pairs[k].second]);
    };
    if (threads <= 1) {
        threads = 1;
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, w);
    }

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& row = prof.table[k];
        if (pairs[k].first == pairs[k].second) {
            for (std::size_t tau = 1; tau < row.size(); ++tau)
                prof.max_auto = std::max(prof.max_auto, row[tau]);
        } else {
            prof.max_cross = std::max(prof.max_cross, *std::max_element(row.begin(), row.end()));
        }
    }
    prof.max_overall = std::max(prof.max_auto, prof.max_cross);
    return prof;
}

} // namespace fhs
