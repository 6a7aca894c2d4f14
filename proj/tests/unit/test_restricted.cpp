#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "okounkov/core/restricted.hpp"

using namespace fixtures;
using Section = series::LaurentSection<Rational>;
using namespace okounkov::core;

namespace {

ToricAdelicDivisor box12() { return ToricAdelicDivisor::constant(p1p1_frame(), p1p1_boundary(), div({0, 0, 1, 2})); }

} // namespace

TEST(RestrictedSeries, BoxAlongFirstAxis)
{
    auto s = restricted_series(box12(), {0});
    EXPECT_EQ(s.kind(), series::SeriesKind::RestrictedImage);
    for (long m = 1; m <= 6; ++m)
    {
        std::vector<Section> expected;
        for (long k = 0; k <= 2 * m; ++k)
            expected.push_back(Section::monomial({0, k}));
        EXPECT_EQ(s.at(m).dim(), static_cast<std::size_t>(2 * m + 1));
        EXPECT_TRUE(same_span(s.at(m), Space(2, m, expected)));
    }
}

TEST(RestrictedSeries, HypothesisGate)
{
    auto zero = ToricAdelicDivisor::constant(p1p1_frame(), p1p1_boundary(), div({0, 0, 0, 0}));
    try
    {
        restricted_series(zero, {0});
        FAIL();
    }
    catch (const CoreError& e)
    {
        EXPECT_STREQ(e.what(), "restricted theory undefined by hypothesis");
    }
    // O(1,0): not big, B₊ = U
    auto nef = ToricAdelicDivisor::constant(p1p1_frame(), p1p1_boundary(), div({0, 0, 1, 0}));
    EXPECT_THROW(restricted_series(nef, {1}), CoreError);
}

TEST(RestrictedSeries, LineInP2)
{
    auto s = restricted_series(p2_o1(), {0});
    for (long m = 1; m <= 6; ++m)
        EXPECT_EQ(s.at(m).dim(), static_cast<std::size_t>(m + 1));
}

TEST(RestrictedSeries, SliceCountEqualsDimension)
{
    for (const auto& [d, t] : std::vector<std::pair<ToricAdelicDivisor, std::vector<std::size_t>>>{
             {box12(), {0}}, {box12(), {1}}, {p2_o1(), {1}}, {square_divisor(), {0}}})
    {
        auto s = restricted_series(d, t);
        for (long m = 1; m <= 6; ++m)
            EXPECT_EQ(semigroup_slice(s, m, s.natural_flag()).size(), s.at(m).dim());
    }
}

TEST(RestrictedVolume, Examples)
{
    auto s = restricted_series(box12(), {0});
    auto v = restricted_volume_estimate(s, 10);
    EXPECT_EQ(v.dim, 1u);
    EXPECT_EQ(v.estimate, make_rational(21, 10));
    EXPECT_EQ(*v.upper, 2);
    EXPECT_EQ(v.lower, 2);
    auto body = okounkov_truncated(s, s.natural_flag(), 5);
    EXPECT_EQ(*body.exact_body, segment(0, 2));
    EXPECT_EQ(body.inner_body, segment(0, 2));

    auto line = restricted_volume_estimate(restricted_series(p2_o1(), {0}), 10);
    EXPECT_EQ(line.estimate, make_rational(11, 10));
    EXPECT_EQ(*line.upper, 1);

    auto point = restricted_series(p2_o1(), {0, 1});
    EXPECT_EQ(point.at(3).dim(), 1u);
    EXPECT_THROW(restricted_volume_estimate(point, 5), CoreError);
    EXPECT_THROW(restricted_volume_estimate(adelic_series(p2_o1()), 5), CoreError);
}

TEST(RestrictedHomogeneity, VeroneseOfRestriction)
{
    auto s = restricted_series(box12(), {0});
    for (long t : {2, 3})
        EXPECT_TRUE(homogeneity_check(s, t, 3).ok());
}
