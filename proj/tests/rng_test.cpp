#include "swarmbench/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using swarmbench::SplitMix64;

TEST(SplitMix64, KnownOutputsSeedZero) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, KnownOutputsSeed42) {
    SplitMix64 rng(42);
    EXPECT_EQ(rng.next(), 0xbdd732262feb6e95ULL);
    EXPECT_EQ(rng.next(), 0x28efe333b266f103ULL);
    EXPECT_EQ(rng.next(), 0x47526757130f9f52ULL);
}

TEST(SplitMix64, SameSeedSameThousandDraws) {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next(), b.next()) << "draw " << i;
}

TEST(SplitMix64, NeighbouringSeedsDivergeEarly) {
    SplitMix64 a(42), b(43);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= a.next() != b.next();
    EXPECT_TRUE(differs);
}

TEST(SplitMix64, SeedZeroIsAnOrdinaryStream) {
    SplitMix64 rng(0);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 100; ++i) seen.insert(rng.next());
    EXPECT_EQ(seen.size(), 100u);
}

TEST(SplitMix64, UniformMatchesReferenceMapping) {
    SplitMix64 rng(7);
    std::uint64_t s = 7;
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(rng.uniform(), oracle::splitmix_uniform(s));
}

TEST(SplitMix64, UniformStaysInHalfOpenUnitInterval) {
    SplitMix64 rng(123);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(SplitMix64, UniformIntCoversInclusiveRange) {
    SplitMix64 rng(5);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform_int(-2, 3);
        ASSERT_GE(v, -2);
        ASSERT_LE(v, 3);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 6u);
    EXPECT_EQ(rng.uniform_int(4, 4), 4);
}
