#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fhs/catalog.hpp"
#include "fhs/correlation.hpp"
#include "fhs/sequence_set.hpp"
#include "oracles.hpp"

using namespace fhs;

namespace {

std::vector<Sequence> random_rows(std::mt19937_64& rng, std::size_t m, std::size_t n, u64 v) {
    std::vector<Sequence> rows(m, Sequence(n));
    for (auto& r : rows)
        for (auto& s : r)
            s = rng() % v;
    return rows;
}

} // namespace

TEST(Alphabet, PlainAndProduct) {
    EXPECT_THROW(Alphabet::plain(0), invalid_input);
    const auto a = Alphabet::plain(7).extended_by(13);
    EXPECT_EQ(a.kind, Alphabet::Kind::product);
    EXPECT_EQ(a.size, 91u);
    EXPECT_EQ(a.factors, (std::vector<u64>{13, 7}));
    EXPECT_EQ(a.coordinates(9 * 7 + 2), (std::vector<u64>{9, 2}));
    const auto b = a.extended_by(11);
    EXPECT_EQ(b.factors, (std::vector<u64>{11, 13, 7}));
    EXPECT_EQ(b.coordinates(3 * 91 + 9 * 7 + 2), (std::vector<u64>{3, 9, 2}));
    EXPECT_EQ(Alphabet::plain(5).coordinates(4), (std::vector<u64>{4}));
    EXPECT_THROW(Alphabet::product({}), invalid_input);
    EXPECT_THROW(Alphabet::product({u64{1} << 40, u64{1} << 40}), invalid_input);
}

TEST(FhsSetInvariants, RejectsMalformedSets) {
    EXPECT_THROW(FhsSet(Alphabet::plain(3), {}), validation_error);
    EXPECT_THROW(FhsSet(Alphabet::plain(3), {{}}), validation_error);
    EXPECT_THROW(FhsSet(Alphabet::plain(3), {{0, 1}, {0}}), validation_error);
    try {
        FhsSet(Alphabet::plain(3), {{0, 1, 2, 0}, {0, 1, 2, 3}});
        FAIL() << "expected validation_error";
    } catch (const validation_error& e) {
        EXPECT_NE(std::string(e.what()).find("sequences[1][3]"), std::string::npos) << e.what();
    }
    Alphabet bad{Alphabet::Kind::product, 10, {3, 3}};
    EXPECT_THROW(FhsSet(bad, {{0}}), validation_error);
    Alphabet plain_with_factors{Alphabet::Kind::plain, 3, {3}};
    EXPECT_THROW(FhsSet(plain_with_factors, {{0}}), validation_error);
}

TEST(Occurrences, MultiplicityOfBuiltins) {
    EXPECT_EQ(multiplicity(example1_base()), 12u);
    EXPECT_EQ(multiplicity(example2_base()), 8u);
    const FhsSet s(Alphabet::plain(5), {{0, 0, 1}, {0, 2, 2}});
    const auto occ = occurrence_map(s);
    EXPECT_EQ(occ.multiplicity, 3u);
    ASSERT_EQ(occ.slots.size(), 5u);
    EXPECT_EQ(occ.slots[0].size(), 3u);
    EXPECT_EQ(occ.slots[0][2], (Occurrence{1, 0}));
    EXPECT_TRUE(occ.slots[3].empty());
    EXPECT_EQ(occ.count(2), 2u);
}

TEST(HammingCorrelation, AgreesWithDefinition) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + rng() % 40;
        const u64 v = 1 + rng() % 6;
        const auto rows = random_rows(rng, 2, n, v);
        for (u64 tau = 0; tau < n; ++tau)
            ASSERT_EQ(hamming_correlation(rows[0], rows[1], tau), oracle::correlation(rows[0], rows[1], tau));
        ASSERT_EQ(correlation_table(rows[0], rows[1]), hit_table(rows[0], rows[1], v));
    }
}

TEST(HammingCorrelation, RejectsBadArguments) {
    const Sequence a{0, 1, 2}, b{0, 1};
    EXPECT_THROW(hamming_correlation(a, b, 0), invalid_input);
    EXPECT_THROW(hamming_correlation(a, a, 3), invalid_input);
    EXPECT_THROW(correlation_table(a, b), invalid_input);
    EXPECT_THROW(hit_table(a, a, 2), invalid_input);
    EXPECT_THROW(hit_table(a, b, 3), invalid_input);
    EXPECT_THROW(hamming_correlation(example2_base(), 0, 3, 0), invalid_input);
}

TEST(HammingCorrelation, SymmetryAndConservation) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + rng() % 30;
        const u64 v = 1 + rng() % 5;
        const auto r = random_rows(rng, 2, n, v);
        std::vector<u64> cx(v, 0), cy(v, 0);
        for (std::size_t t = 0; t < n; ++t) {
            ++cx[r[0][t]];
            ++cy[r[1][t]];
        }
        u64 dot = 0;
        for (u64 s = 0; s < v; ++s)
            dot += cx[s] * cy[s];
        const auto table = correlation_table(r[0], r[1]);
        u64 total = 0;
        for (std::size_t tau = 0; tau < n; ++tau) {
            total += table[tau];
            EXPECT_EQ(hamming_correlation(r[1], r[0], tau), table[(n - tau) % n]);
        }
        EXPECT_EQ(total, dot);
        EXPECT_EQ(hamming_correlation(r[0], r[0], 0), n);
    }
}

TEST(Profile, BuiltinMaxima) {
    const auto p1 = correlation_profile(example1_base());
    EXPECT_EQ(p1.max_auto, 4u);
    EXPECT_EQ(p1.max_cross, 4u);
    EXPECT_EQ(p1.max_overall, 4u);
    const auto p2 = correlation_profile(example2_base());
    EXPECT_EQ(p2.max_overall, 3u);
}

TEST(Profile, AgreesWithOracleForEveryOrderedPair) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 25;
        const u64 v = 1 + rng() % 7;
        const FhsSet s(Alphabet::plain(v), random_rows(rng, m, n, v));
        const auto prof = correlation_profile(s, 1 + k % 4);
        std::vector<oracle::Seq> rows(s.sequences().begin(), s.sequences().end());
        const auto want = oracle::maxima(rows);
        ASSERT_EQ(prof.max_auto, want.max_auto);
        ASSERT_EQ(prof.max_cross, want.max_cross);
        ASSERT_EQ(prof.max_overall, want.overall());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t tau = 0; tau < n; ++tau)
                    ASSERT_EQ(prof.at(i, j, tau), oracle::correlation(rows[i], rows[j], tau));
    }
}

TEST(Profile, SingleSequenceHasNoCrossTerm) {
    const FhsSet s(Alphabet::plain(2), {{0, 0, 1}});
    const auto prof = correlation_profile(s);
    EXPECT_EQ(prof.max_cross, 0u);
    EXPECT_EQ(prof.max_auto, 1u);
    const FhsSet one(Alphabet::plain(1), {{0}});
    EXPECT_EQ(correlation_profile(one).max_overall, 0u);
}

TEST(Profile, ThreadCountDoesNotChangeResult) {
    std::mt19937_64 rng(6);
    const FhsSet s(Alphabet::plain(4), random_rows(rng, 6, 50, 4));
    const auto serial = correlation_profile(s, 1);
    const auto parallel = correlation_profile(s, 8);
    EXPECT_EQ(serial.table, parallel.table);
    EXPECT_EQ(serial.max_overall, parallel.max_overall);
}

TEST(Profile, ThreadCountEnvironment) {
    ::setenv("FHS_THREADS", "3", 1);
    EXPECT_EQ(thread_count(), 3u);
    ::setenv("FHS_THREADS", "zero", 1);
    EXPECT_GE(thread_count(), 1u);
    ::setenv("FHS_THREADS", "-2", 1);
    EXPECT_GE(thread_count(), 1u);
    ::unsetenv("FHS_THREADS");
    EXPECT_GE(thread_count(), 1u);
}
