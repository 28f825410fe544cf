#include <gtest/gtest.h>

#include <random>

#include "fmpartners/catalog.hpp"
#include "fmpartners/rigidity.hpp"
#include "rigidity_cases.hpp"

using namespace fmp;
using F = KodairaFiber;

TEST(MobiusMap, NormalizationAndAction) {
    MobiusMap g(-2, 0, 0, -2);
    EXPECT_TRUE(g.is_identity());
    MobiusMap inv(0, 3, 3, 0);  // z -> 1/z
    EXPECT_EQ(inv(BasePoint(0)), BasePoint::infinity());
    EXPECT_EQ(inv(BasePoint::infinity()), BasePoint(0));
    EXPECT_EQ(inv(BasePoint(2)), BasePoint(1, 2));
    EXPECT_THROW(MobiusMap(1, 2, 2, 4), InvalidArgumentError);
}

TEST(Rigidity, DefaultBaseIsRigid) {
    MarkedConfig c{{0, F::iii_star()}, {1, F::i_n(2)}, {BasePoint::infinity(), F::i_n(1)}};
    auto r = rigidity_check(c);
    EXPECT_TRUE(r.rigid);
    ASSERT_EQ(r.symmetries.size(), 1u);
    EXPECT_TRUE(r.symmetries.front().is_identity());
}

TEST(Rigidity, TwoPointsNotRigid) {
    auto r = rigidity_check(MarkedConfig{{0, F::i_n(1)}, {BasePoint::infinity(), F::i_n(1)}});
    EXPECT_FALSE(r.rigid);
    EXPECT_FALSE(r.finite);
    EXPECT_FALSE(rigidity_check(MarkedConfig{}).rigid);
}

TEST(Rigidity, ThreeEqualTypesGiveS3) {
    MarkedConfig c{{0, F::i_n(1)}, {1, F::i_n(1)}, {BasePoint::infinity(), F::i_n(1)}};
    auto r = rigidity_check(c);
    EXPECT_FALSE(r.rigid);
    ASSERT_EQ(r.symmetries.size(), 6u);
    // Every symmetry permutes {0, 1, inf}; the six permutations are distinct.
    std::set<std::vector<std::string>> perms;
    for (const auto& g : r.symmetries) {
        perms.insert({g(BasePoint(0)).to_string(), g(BasePoint(1)).to_string(), g(BasePoint::infinity()).to_string()});
    }
    EXPECT_EQ(perms.size(), 6u);
    EXPECT_TRUE(rigidity_cases::agrees(c));
}

TEST(Rigidity, SymmetricFourPoints) {
    // {0, inf} and {1, -1} typed separately: z -> -z, z -> 1/z, z -> -1/z.
    MarkedConfig c{{0, F::ii()}, {BasePoint::infinity(), F::ii()}, {1, F::i_n(1)}, {-1, F::i_n(1)}};
    auto r = rigidity_check(c);
    EXPECT_EQ(r.symmetries.size(), 4u);
    EXPECT_TRUE(rigidity_cases::agrees(c));
}

TEST(Rigidity, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(2026);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto c = rigidity_cases::random_config(rng);
        ASSERT_TRUE(rigidity_cases::agrees(c)) << "trial " << trial;
        nontrivial += !rigidity_check(c).rigid;
    }
    EXPECT_GT(nontrivial, 0);
}

TEST(Rigidity, CatalogEntries) {
    EXPECT_TRUE(rigidity_check(catalog_get(kDefaultBase).config).rigid);
    EXPECT_FALSE(rigidity_check(catalog_get("II*-I1-I1").config).rigid);
    EXPECT_TRUE(rigidity_check(catalog_get("IV*-I3-I1").config).rigid);
    EXPECT_EQ(rigidity_check(catalog_get("I9-I1-I1-I1").config).symmetries.size(), 2u);
    // The oracle is quadratic in the number of ordered triples; skip the 12-point entry.
    for (const auto& e : catalog_list()) {
        if (e.config.size() <= 8) {
            EXPECT_TRUE(rigidity_cases::agrees(e.config)) << e.name;
        }
    }
}
