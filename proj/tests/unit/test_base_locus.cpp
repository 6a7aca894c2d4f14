#include <gtest/gtest.h>

#include <random>

#include "okounkov/series/graded.hpp"

using namespace okounkov;
using namespace okounkov::series;

namespace {

using Section = LaurentSection<Rational>;
using Space = SectionSpace<Rational>;
using Flat = CoordinateFlatSet::Flat;

// Brute-force oracle: Bs evaluated on the 0/1 points of the chart. A monomial
// vanishes at a 0/1 point iff some variable in its support is 0 there, and a
// union of coordinate flats is determined by which 0/1 points it contains.
std::set<unsigned> zero_pattern_oracle(const Space& w)
{
    const std::size_t d = w.ambient_dim();
    std::set<unsigned> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask)   // bit i set: x_i = 0
    {
        bool all_vanish = true;
        for (const auto& b : w.basis())
        {
            const Exponent& e = b.terms().begin()->first;
            bool vanishes = false;
            for (std::size_t i = 0; i < d; ++i)
                vanishes = vanishes || (e[i] > 0 && (mask >> i & 1));
            all_vanish = all_vanish && vanishes;
        }
        if (all_vanish)
            out.insert(mask);
    }
    return out;
}

std::set<unsigned> zero_pattern(const CoordinateFlatSet& f, std::size_t d)
{
    std::set<unsigned> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask)
        for (const auto& t : f.flats())
            if (std::all_of(t.begin(), t.end(), [&](std::size_t i) { return mask >> i & 1; }))
                out.insert(mask);
    return out;
}

} // namespace

TEST(BaseLocus, Examples)
{
    Section x = Section::monomial({1, 0}), y = Section::monomial({0, 1});
    EXPECT_EQ(base_locus(Space(2, 1, {x, y})).flats(), (std::set<Flat>{{0, 1}}));
    EXPECT_TRUE(base_locus(Space(1, 1, {Section::monomial({0}), Section::monomial({1})})).is_empty());
    EXPECT_TRUE(base_locus(Space(2, 1)).is_whole());
    try
    {
        base_locus(Space(2, 1, {x + y}));
        FAIL();
    }
    catch (const SeriesError& e)
    {
        EXPECT_STREQ(e.what(), "base locus supported only for monomial series");
    }
}

TEST(BaseLocus, MatchesZeroPatternOracle)
{
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> exp(0, 2), count(0, 4);
    for (std::size_t d = 1; d <= 4; ++d)
        for (int trial = 0; trial < 40; ++trial)
        {
            std::vector<Section> gens;
            for (int i = count(rng); i > 0; --i)
            {
                Exponent e(d);
                for (auto& v : e)
                    v = exp(rng);
                gens.push_back(Section::monomial(e));
            }
            Space w(d, 1, gens);
            EXPECT_EQ(zero_pattern(base_locus(w), d), zero_pattern_oracle(w));
        }
}

TEST(BaseLocus, Monotonicity)
{
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> exp(0, 2), count(1, 4);
    for (int trial = 0; trial < 40; ++trial)
    {
        std::vector<Section> gens;
        for (int i = count(rng); i > 0; --i)
            gens.push_back(Section::monomial({exp(rng), exp(rng), exp(rng)}));
        Space small(3, 1, gens);
        for (int i = count(rng); i > 0; --i)
            gens.push_back(Section::monomial({exp(rng), exp(rng), exp(rng)}));
        Space big(3, 1, gens);
        EXPECT_TRUE(base_locus(small).contains(base_locus(big)));
    }
}

TEST(FlatSet, Algebra)
{
    CoordinateFlatSet axes(std::set<Flat>{{0}, {1}});
    CoordinateFlatSet origin(std::set<Flat>{{0, 1}});
    EXPECT_TRUE(axes.contains(origin));
    EXPECT_FALSE(origin.contains(axes));
    EXPECT_EQ(intersect(axes, origin), origin);
    EXPECT_EQ(intersect(axes, CoordinateFlatSet::whole()), axes);
    EXPECT_TRUE(intersect(axes, CoordinateFlatSet::empty()).is_empty());
    // redundant flats are dropped
    EXPECT_EQ(CoordinateFlatSet(std::set<Flat>{{0}, {0, 1}}).flats(), (std::set<Flat>{{0}}));
    EXPECT_TRUE(CoordinateFlatSet::whole().contains(axes));
    EXPECT_TRUE(axes.contains(CoordinateFlatSet::empty()));
}

TEST(StableBaseLocus, Examples)
{
    auto powers = GradedSeries<Rational>(SeriesKind::ExplicitList, 1,
                                         [](long m) { return Space(1, m, {Section::monomial({m})}); });
    auto sb = stable_base_locus(powers, 5);
    EXPECT_EQ(sb.locus.flats(), (std::set<Flat>{{0}}));
    EXPECT_EQ(sb.stabilization_degree, 1);
    EXPECT_TRUE(sb.confirmed);

    auto simplex = geom::convex_hull({RatVec{0, 0}, RatVec{1, 0}, RatVec{0, 1}});
    auto toric = stable_base_locus(polytope_series(simplex), 4);
    EXPECT_TRUE(toric.locus.is_empty());
    EXPECT_EQ(toric.stabilization_degree, 1);

    auto late = GradedSeries<Rational>(SeriesKind::ExplicitList, 1, [](long m) {
        if (m == 1)
            return Space(1, 1, {Section::monomial({1})});
        return Space(1, m, {Section::monomial({0}), Section::monomial({1})});
    });
    auto sl = stable_base_locus(late, 4);
    EXPECT_TRUE(sl.locus.is_empty());
    EXPECT_EQ(sl.stabilization_degree, 2);
}
