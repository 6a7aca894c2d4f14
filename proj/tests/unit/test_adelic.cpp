#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace fixtures;
using series::CoordinateFlatSet;

namespace {

// Oracle for toric sections: enumerate u ∈ Z^d in a box, keep those with
// ⟨u, v_ρ⟩ >= -m a_ρ for every ray, and map to chart exponents α_i = ⟨u, v_ci⟩ + m a_ci.
std::vector<Exponent> sections_by_character_scan(const ToricFrame& f, const ModelDivisor& d, long m, long box)
{
    const std::size_t n = f.dim();
    std::vector<Exponent> out;
    Exponent u(n, -box);
    while (true)
    {
        bool ok = true;
        for (std::size_t r = 0; r < f.ray_count() && ok; ++r)
        {
            Rational s(0);
            for (std::size_t i = 0; i < n; ++i)
                s += Rational(static_cast<long>(u[i] * f.rays()[r][i]));
            ok = s >= -m * d.coeffs[r];
        }
        if (ok)
        {
            Exponent alpha(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto& v = f.rays()[f.chart()[i]];
                long s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    s += u[k] * v[k];
                Rational a = s + m * d.coeffs[f.chart()[i]];
                alpha[i] = a.get_num().get_si();
            }
            out.push_back(alpha);
        }
        std::size_t k = 0;
        while (k < n && ++u[k] > box)
            u[k++] = -box;
        if (k == n)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponent> exponents(const Space& w)
{
    std::vector<Exponent> out;
    for (const auto& b : w.basis())
        out.push_back(b.terms().begin()->first);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponent> range1(long lo, long hi)
{
    std::vector<Exponent> out;
    for (long k = lo; k <= hi; ++k)
        out.push_back({k});
    return out;
}

} // namespace

TEST(Frame, Validation)
{
    EXPECT_NO_THROW(p2_frame());
    EXPECT_THROW(ToricFrame({{1, 0}, {0, 1}, {-1, -1}}, {}), ModelError);
    EXPECT_THROW(ToricFrame({{2, 0}, {0, 1}, {-1, -1}}, {2}), ModelError);
    // non-boundary rays {e1, e1+2e2} have determinant 2
    EXPECT_THROW(ToricFrame({{1, 0}, {1, 2}, {-1, -1}}, {2}), ModelError);
    EXPECT_THROW(ToricFrame({{1, 0}, {0, 1}, {1, 1}, {-1, -1}}, {2, 3}), ModelError);
    EXPECT_THROW(BoundaryDivisor(p2_frame(), div({0, 1, 1})), ModelError);
    EXPECT_THROW(BoundaryDivisor(p2_frame(), div({0, 0, 0})), ModelError);
}

TEST(ChartPolytope, AgainstCharacterScan)
{
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long> coef(0, 3);
    for (const ToricFrame& f : {p1_frame(), p2_frame(), p1p1_frame(),
                                ToricFrame({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {3})})
    {
        for (int trial = 0; trial < 8; ++trial)
        {
            ModelDivisor d;
            for (std::size_t r = 0; r < f.ray_count(); ++r)
                d.coeffs.push_back(f.is_boundary(r) ? make_rational(coef(rng) * 2 + 1, 2) : Rational(coef(rng) - 1));
            // each |u_i| <= m Σ|a_ρ| on these fans (all rays have entries in {-1,0,1})
            Rational total(0);
            for (const auto& a : d.coeffs)
                total += abs(a);
            for (long m : {1, 2, 3})
                EXPECT_EQ(exponents(model_sections(f, d, m)),
                          sections_by_character_scan(f, d, m, ceil(Rational(m * total)).get_si() + 1));
        }
    }
}

TEST(BoundaryDistance, Examples)
{
    auto f = p1_frame();
    auto d0 = p1_boundary();
    EXPECT_EQ(*boundary_distance(f, div({0, q(9, 10)}), div({0, q(3, 4)}), d0), q(3, 20));
    EXPECT_EQ(*boundary_distance(f, div({0, 1}), div({0, 1}), d0), 0);
    EXPECT_FALSE(boundary_distance(f, div({1, 1}), div({0, 1}), d0).has_value());
    // D0 = 2[∞] halves the distance
    EXPECT_EQ(*boundary_distance(f, div({0, 1}), div({0, 0}), BoundaryDivisor(f, div({0, 2}))), q(1, 2));
}

TEST(BoundaryDistance, NormAxioms)
{
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    auto f = p1p1_frame();
    auto d0 = p1p1_boundary();
    auto random_div = [&] { return div({1, 2, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))}); };
    for (int trial = 0; trial < 50; ++trial)
    {
        auto a = random_div(), b = random_div(), c = random_div();
        Rational ab = *boundary_distance(f, a, b, d0);
        EXPECT_EQ(ab, *boundary_distance(f, b, a, d0));
        EXPECT_EQ(ab == 0, a == b);
        EXPECT_LE(*boundary_distance(f, a, c, d0), ab + *boundary_distance(f, b, c, d0));
    }
}

TEST(VerifyCauchy, Examples)
{
    auto good = verify_cauchy(interval_divisor(), 10);
    EXPECT_TRUE(good.ok());
    EXPECT_EQ(*good.worst_limit_ratio, 1);

    auto tight = ToricAdelicDivisor::closed_form(p1_frame(), p1_boundary(), {{0, 0, q(1, 2)}, {1, 1, q(1, 2)}},
                                                 q(1, 4), q(1, 2));
    auto bad = verify_cauchy(tight, 6);
    ASSERT_FALSE(bad.ok());
    // |D_j - D_{j+1}| = 2^{-j-1} > 2^{-j-2}
    bool found = false;
    for (const auto& v : bad.violations)
        found = found || (v.j == 1 && v.i == 2);
    EXPECT_TRUE(found);

    EXPECT_TRUE(verify_cauchy(constant_p1(1), 5).ok());
}

TEST(VerifyCauchy, RandomClosedFormsObeyBound)
{
    // c - r s^j with q_j = |r| s^j is Cauchy: |r|(s^j - s^i) <= |r| s^j
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> num(-5, 5), sden(2, 5);
    for (int trial = 0; trial < 20; ++trial)
    {
        Rational r = make_rational(num(rng) == 0 ? 1 : num(rng), 1);
        Rational s = make_rational(1, sden(rng));
        auto d = ToricAdelicDivisor::closed_form(p1_frame(), p1_boundary(), {{0, 0, s}, {2, r, s}}, abs(r), s);
        EXPECT_TRUE(verify_cauchy(d, 8).ok());
        for (long j = 1; j <= 8; ++j)
            EXPECT_LE(*boundary_distance(d.frame(), d.stage(j).divisor, d.limit(), d.boundary()), d.stage(j).q);
    }
}

TEST(AdelicSections, Examples)
{
    EXPECT_EQ(exponents(adelic_sections(interval_divisor(), 3)), range1(0, 3));
    // limit polytope [0, 1/2]: only the constant at m = 1; empty limit polytope: zero space
    EXPECT_EQ(exponents(adelic_sections(constant_p1(q(1, 2)), 1)), range1(0, 0));
    EXPECT_TRUE(adelic_sections(constant_p1(q(-1, 2)), 1).is_zero());
    // constant sequence: classical H⁰(P², O(m))
    for (long m = 1; m <= 5; ++m)
        EXPECT_EQ(exponents(adelic_sections(p2_o1(), m)),
                  sections_by_character_scan(p2_frame(), div({0, 0, 1}), m, 8));
}

TEST(AdelicSections, Multiplicativity)
{
    for (const auto& d : {interval_divisor(), p2_o1(), square_divisor()})
    {
        auto s = adelic_series(d);
        EXPECT_FALSE(series::multiplicativity_violation(s, 6).has_value());
    }
}

TEST(Sandwich, IntervalExample)
{
    auto sw = sandwich_spaces(interval_divisor(), 1, 2);
    // D_1 = 1/2, q_1 = 1/2: lower coefficient 0, upper 1, limit 1
    EXPECT_EQ(exponents(sw.lower), range1(0, 0));
    EXPECT_EQ(exponents(sw.middle), range1(0, 2));
    EXPECT_EQ(exponents(sw.upper), range1(0, 2));
    EXPECT_TRUE(sw.ok());
}

TEST(Sandwich, ConstantSequenceCollapses)
{
    for (long m = 1; m <= 4; ++m)
    {
        auto sw = sandwich_spaces(p2_o1(), 3, m);
        EXPECT_TRUE(same_span(sw.lower, sw.middle));
        EXPECT_TRUE(same_span(sw.middle, sw.upper));
    }
}

TEST(Sandwich, HoldsAcrossStagesAndDegrees)
{
    for (const auto& d : {interval_divisor(), square_divisor()})
        for (long j = 1; j <= 6; ++j)
            for (long m = 1; m <= 8; ++m)
                EXPECT_TRUE(sandwich_spaces(d, j, m).ok()) << "j=" << j << " m=" << m;
}

TEST(Combine, Examples)
{
    auto d = interval_divisor();
    auto same = combine(d, d, 1, 0);
    EXPECT_EQ(same.limit(), d.limit());
    for (long j = 1; j <= 5; ++j)
        EXPECT_EQ(same.stage(j).divisor, d.stage(j).divisor);

    auto zero = combine(d, d, 1, -1);
    EXPECT_EQ(zero.limit(), div({0, 0}));
    for (long j = 1; j <= 5; ++j)
    {
        EXPECT_EQ(zero.stage(j).q, 2 * d.stage(j).q);
        EXPECT_LE(*boundary_distance(zero.frame(), zero.stage(j).divisor, div({0, 0}), zero.boundary()),
                  2 * d.stage(j).q);
    }
    EXPECT_TRUE(verify_cauchy(zero, 6).ok());

    auto sum = combine(constant_p1(1), constant_p1(1), 1, 1);
    EXPECT_EQ(sum.chart_polytope(), segment(0, 2));

    auto other = ToricAdelicDivisor::constant(p2_frame(), p2_boundary(), div({0, 0, 1}));
    EXPECT_THROW(combine(d, other, 1, 1), ModelError);
}

TEST(Combine, StaysCauchy)
{
    auto d = interval_divisor(), sq = constant_p1(3);
    for (const auto& [a1, a2] : std::vector<std::pair<long, long>>{{1, 1}, {2, -1}, {-3, 2}, {0, 5}})
        EXPECT_TRUE(verify_cauchy(combine(d, sq, a1, a2), 8).ok());
}

TEST(Ampleness, Surrogate)
{
    EXPECT_TRUE(is_ample(p1_frame(), div({0, 1})));
    EXPECT_FALSE(is_ample(p1_frame(), div({0, 0})));
    EXPECT_TRUE(is_ample(p2_frame(), div({0, 0, 1})));
    EXPECT_TRUE(is_ample(p1p1_frame(), div({0, 0, 1, 1})));
    // O(1,0) on P¹×P¹ is nef, not ample
    EXPECT_FALSE(is_ample(p1p1_frame(), div({0, 0, 1, 0})));
}

TEST(AugmentedBaseLocus, Examples)
{
    auto d = constant_p1(1);
    auto b1 = augmented_base_locus(d, div({0, 1}), 6);
    EXPECT_TRUE(b1.locus.is_empty());
    EXPECT_EQ(b1.stabilization_degree, 1);
    auto b2 = augmented_base_locus(d, div({0, 2}), 6);
    EXPECT_EQ(b1.locus, b2.locus);

    auto zero = constant_p1(0);
    EXPECT_TRUE(augmented_base_locus(zero, div({0, 1}), 6).locus.is_whole());
    EXPECT_THROW(augmented_base_locus(d, div({0, 0}), 3), ModelError);
}

TEST(AugmentedBaseLocus, ContainsStableBaseLocusAndIndependentOfAmple)
{
    auto f = p1p1_frame();
    auto b = p1p1_boundary();
    // O(1,0): not big, so B₊ is the whole chart while Bs is empty
    auto nef = ToricAdelicDivisor::constant(f, b, div({0, 0, 1, 0}));
    for (const auto& d : {nef, square_divisor()})
    {
        auto sb = series::stable_base_locus(adelic_series(d), 6);
        auto bp = augmented_base_locus(d, div({0, 0, 1, 1}), 6);
        auto bp2 = augmented_base_locus(d, div({0, 0, 2, 1}), 6);
        EXPECT_TRUE(bp.locus.contains(sb.locus));
        EXPECT_EQ(bp.locus, bp2.locus);
    }
    EXPECT_TRUE(augmented_base_locus(nef, div({0, 0, 1, 1}), 6).locus.is_whole());
    EXPECT_TRUE(augmented_base_locus(square_divisor(), div({0, 0, 1, 1}), 6).locus.is_empty());
}

TEST(AugmentedBaseLocus, HirzebruchFixedComponent)
{
    // F₁: boundary rays -e1+e2 and -e2. D = -D₂ + 2D₃ has chart polytope
    // {α2 >= α1 + 1, α2 <= 2}, so every section of mD̄ is divisible by x₂^m.
    ToricFrame f({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {2, 3});
    BoundaryDivisor b(f, div({0, 0, 1, 1}));
    auto d = ToricAdelicDivisor::constant(f, b, div({0, 0, -1, 2}));
    EXPECT_EQ(d.chart_polytope(), geom::convex_hull({rv({0, 1}), rv({0, 2}), rv({1, 2})}));

    const std::set<CoordinateFlatSet::Flat> x2_axis{{1}};
    auto sb = series::stable_base_locus(adelic_series(d), 5);
    EXPECT_EQ(sb.locus.flats(), x2_axis);
    EXPECT_EQ(sb.stabilization_degree, 1);

    ASSERT_TRUE(is_ample(f, div({0, 0, 1, 1})));
    ASSERT_TRUE(is_ample(f, div({0, 0, 2, 1})));
    // mD - A = (0,0,-m-1,2m-1): empty at m = 1, {x₂³} at m = 2
    auto bp = augmented_base_locus(d, div({0, 0, 1, 1}), 6);
    EXPECT_TRUE(bp.per_degree[0].is_whole());
    EXPECT_EQ(bp.per_degree[1].flats(), x2_axis);
    EXPECT_EQ(bp.locus.flats(), x2_axis);
    EXPECT_EQ(bp.stabilization_degree, 2);
    EXPECT_EQ(augmented_base_locus(d, div({0, 0, 2, 1}), 6).locus, bp.locus);
    EXPECT_TRUE(bp.locus.contains(sb.locus));
}
