#include <gtest/gtest.h>

#include "fone/finset.hpp"
#include "oracles.hpp"

using namespace fone;

namespace {

std::vector<DeltaMap> all_delta_maps(int bound)
{
    std::vector<DeltaMap> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (auto& d : enumerate_delta_maps(a, b))
                out.push_back(d);
    return out;
}

std::vector<PointedMap> all_ptd_maps(int bound)
{
    std::vector<PointedMap> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (auto& f : enumerate_ptd_maps(a, b))
                out.push_back(f);
    return out;
}

}  // namespace

TEST(PointedMap, RejectsBadAssignments)
{
    EXPECT_THROW(PointedMap(2, 1, {1}), std::invalid_argument);
    EXPECT_THROW(PointedMap(1, 1, {2}), std::invalid_argument);
    EXPECT_THROW(PointedMap(1, 1, {-1}), std::invalid_argument);
    EXPECT_NO_THROW(PointedMap(2, 1, {1, 0}));
}

TEST(PointedMap, CompositionChecksEndpoints)
{
    const PointedMap f(2, 1, {1, 1});
    const PointedMap g(2, 2, {2, 1});
    EXPECT_THROW(compose(f, f), composition_error);
    EXPECT_EQ(compose(f, g), f);
    EXPECT_TRUE(compose(g, g).is_identity());
}

TEST(PointedMap, EnumerationCountsAndOrder)
{
    EXPECT_EQ(enumerate_ptd_maps(2, 1).size(), 4U);
    EXPECT_EQ(enumerate_ptd_maps(3, 2).size(), 27U);
    EXPECT_EQ(enumerate_ptd_maps(0, 5).size(), 1U);
    EXPECT_EQ(enumerate_ptd_maps(2, 2).front(), PointedMap::zero(2, 2));
}

TEST(PointedMap, Printing)
{
    EXPECT_EQ(to_string(PointedMap(2, 1, {1, 0})), "<2>-><1>{1:1,2:*}");
}

TEST(DeltaMap, RejectsNonMonotone)
{
    EXPECT_THROW(DeltaMap(1, 2, {2, 1}), std::invalid_argument);
    EXPECT_THROW(DeltaMap(1, 1, {0, 2}), std::invalid_argument);
    EXPECT_NO_THROW(DeltaMap(1, 2, {1, 2}));
}

TEST(DeltaMap, EnumerationIsBinomial)
{
    // monotone [a] -> [b] are multisets of size a+1 from b+1 values
    EXPECT_EQ(enumerate_delta_maps(1, 1).size(), 3U);
    EXPECT_EQ(enumerate_delta_maps(2, 3).size(), 20U);
    EXPECT_EQ(enumerate_delta_maps(3, 0).size(), 1U);
}

TEST(DeltaMap, CosimplicialIdentities)
{
    for (int n = 2; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                EXPECT_EQ(compose(DeltaMap::coface(j, n), DeltaMap::coface(i, n - 1)),
                          compose(DeltaMap::coface(i, n), DeltaMap::coface(j - 1, n - 1)));
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < n; ++i) {
            EXPECT_TRUE(compose(DeltaMap::codegeneracy(i, n - 1), DeltaMap::coface(i, n)).is_identity());
            EXPECT_TRUE(
                compose(DeltaMap::codegeneracy(i, n - 1), DeltaMap::coface(i + 1, n)).is_identity());
        }
}

TEST(Circle, ObjectsAreSkeletal)
{
    EXPECT_EQ(s_on_object(0).size, 0);
    EXPECT_EQ(s_on_object(4).size, 4);
    EXPECT_THROW(s_on_object(-1), std::invalid_argument);
}

TEST(Circle, Examples)
{
    EXPECT_TRUE(s_on_map(DeltaMap::identity(3)).is_identity());
    EXPECT_EQ(s_on_map(DeltaMap(1, 0, {0, 0})), PointedMap(0, 1, {}));
    EXPECT_EQ(s_on_map(DeltaMap(1, 2, {1, 2})), PointedMap(2, 1, {0, 1}));
}

TEST(Circle, AgreesWithQuotientOracle)
{
    for (const auto& alpha : all_delta_maps(5))
        ASSERT_EQ(s_on_map(alpha).assignment(), oracle::circle_action(alpha)) << alpha;
}

TEST(Circle, ContravariantFunctor)
{
    const auto maps = all_delta_maps(5);
    for (const auto& beta : maps)
        for (const auto& alpha : maps) {
            if (alpha.domain() != beta.codomain())
                continue;
            ASSERT_EQ(s_on_map(compose(alpha, beta)), compose(s_on_map(beta), s_on_map(alpha)))
                << alpha << " after " << beta;
        }
}

TEST(Circle, SimplicialIdentitiesOnFacesAndDegeneracies)
{
    // d_i d_j = d_{j-1} d_i for i < j, images of the cosimplicial identities
    for (int n = 2; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                EXPECT_EQ(compose(s_on_map(DeltaMap::coface(i, n - 1)), s_on_map(DeltaMap::coface(j, n))),
                          compose(s_on_map(DeltaMap::coface(j - 1, n - 1)),
                                  s_on_map(DeltaMap::coface(i, n))));
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < n; ++i)
            EXPECT_TRUE(compose(s_on_map(DeltaMap::coface(i, n)),
                                s_on_map(DeltaMap::codegeneracy(i, n - 1)))
                            .is_identity());
}

TEST(Smash, AgreesWithPairTable)
{
    const auto maps = all_ptd_maps(3);
    for (const auto& f : maps)
        for (const auto& g : maps)
            ASSERT_EQ(smash(f, g), oracle::smash_by_pairs(f, g)) << f << " ^ " << g;
}

TEST(Smash, Functorial)
{
    const auto maps = all_ptd_maps(2);
    for (const auto& f : maps)
        for (const auto& g : maps) {
            if (g.domain() != f.codomain())
                continue;
            for (const auto& h : maps)
                for (const auto& k : maps) {
                    if (k.domain() != h.codomain())
                        continue;
                    ASSERT_EQ(smash(compose(g, f), compose(k, h)),
                              compose(smash(g, k), smash(f, h)));
                }
        }
}

TEST(Smash, StrictlyAssociativeWithStrictUnit)
{
    const auto maps = all_ptd_maps(3);
    const PointedMap one = PointedMap::identity(1), zero = PointedMap::identity(0);
    for (const auto& f : maps) {
        EXPECT_EQ(smash(one, f), f);
        EXPECT_EQ(smash(f, one), f);
        EXPECT_EQ(smash(zero, f).domain(), 0);
        EXPECT_EQ(smash(f, zero).codomain(), 0);
    }
    const auto small = all_ptd_maps(2);
    for (const auto& f : small)
        for (const auto& g : small)
            for (const auto& h : small)
                ASSERT_EQ(smash(smash(f, g), h), smash(f, smash(g, h)));
}

TEST(Wedge, LeftSummandFirst)
{
    const PointedMap f(1, 2, {2});
    const PointedMap g(2, 1, {1, 0});
    EXPECT_EQ(wedge(f, g), PointedMap(3, 3, {2, 3, 0}));
}

TEST(GammaFace, ProjectionsAndFolds)
{
    EXPECT_EQ(gamma_face(0, 2), PointedMap(2, 1, {0, 1}));
    EXPECT_EQ(gamma_face(1, 2), PointedMap(2, 1, {1, 1}));
    EXPECT_EQ(gamma_face(2, 2), PointedMap(2, 1, {1, 0}));
    EXPECT_EQ(gamma_face(2, 3), PointedMap(3, 2, {1, 2, 2}));
    EXPECT_THROW(gamma_face(3, 2), std::out_of_range);
    EXPECT_THROW(gamma_face(0, 0), std::out_of_range);
}

TEST(GammaFace, IsTheCircleOfAFace)
{
    // d_i^k is the image of the coface delta_i : [k-1] -> [k]
    for (int k = 1; k <= 5; ++k)
        for (int i = 0; i <= k; ++i)
            EXPECT_EQ(gamma_face(i, k), s_on_map(DeltaMap::coface(i, k)));
}

TEST(FinFunction, Predicates)
{
    EXPECT_TRUE(is_injective({0, 2, 1}, 4));
    EXPECT_FALSE(is_bijective({0, 2, 1}, 4));
    EXPECT_TRUE(is_bijective({0, 2, 1}, 3));
    EXPECT_FALSE(is_injective({0, 1, 1}, 3));
    EXPECT_EQ(compose(FinFunction{0, 2, 1}, FinFunction{0, 2, 1}), identity_function(3));
}
