#pragma once

#include <set>

#include "okounkov/core/restricted.hpp"
#include "okounkov/geometry/cone.hpp"

namespace okounkov::global {

using adelic::ToricAdelicDivisor;
using core::CoreError;
using series::Flag;

using GradingPair = std::pair<Rational, Rational>;

/// Points (ν(s), n·a₁, n·a₂) for sections s of degree n of a₁D̄ + a₂Ē over
/// the grid |a_i| <= A_max, a ≠ 0, 1 <= n <= M.
struct GlobalSemigroup
{
    std::size_t dim = 0;
    long grid_bound = 0, degree_bound = 0;
    std::set<Exponent> points;
};

struct GlobalCone
{
    geom::RatCone cone;
    geom::RatCone support;
};

struct GlobalBody
{
    GlobalSemigroup semigroup;
    GlobalCone cone;
};

namespace detail {

inline GlobalCone cone_over(const GlobalSemigroup& g)
{
    geom::RatCone c(g.dim, 2);
    for (const auto& p : g.points)
        c.add(to_ratvec(p));
    geom::RatCone support = c.projection();
    return {std::move(c), std::move(support)};
}

// Valuations of degree-n sections of a₁D̄ + a₂Ē, optionally restricted to V(T).
inline void collect(GlobalSemigroup& g, const ToricAdelicDivisor& comb, long a1, long a2, const Flag& flag,
                    const std::vector<std::size_t>* restriction)
{
    for (long n = 1; n <= g.degree_bound; ++n)
    {
        auto space = adelic::adelic_sections(comb, n);
        if (restriction)
            space = series::restrict(space, *restriction);
        for (auto v : series::leading_exponents(space, flag))
        {
            v.push_back(n * a1);
            v.push_back(n * a2);
            g.points.insert(std::move(v));
        }
    }
}

} // namespace detail

/// Γ(U) on the grid and its cone Δ(U) with support.
inline GlobalBody build_global(const ToricAdelicDivisor& d, const ToricAdelicDivisor& e, const Flag& flag,
                               long grid_bound, long degree_bound)
{
    adelic::check_compatible(d, e);
    if (!d.is_big())
        throw CoreError("global body: D must be big");
    if (grid_bound < 1 || degree_bound < 1)
        throw CoreError("global body: grid and degree bounds must be positive");
    GlobalSemigroup g{flag.dim(), grid_bound, degree_bound, {}};
    for (long a1 = -grid_bound; a1 <= grid_bound; ++a1)
        for (long a2 = -grid_bound; a2 <= grid_bound; ++a2)
            if (a1 != 0 || a2 != 0)
                detail::collect(g, adelic::combine(d, e, a1, a2), a1, a2, flag, nullptr);
    auto cone = detail::cone_over(g);
    return {std::move(g), std::move(cone)};
}

/// Lattice index of the materialized Γ(U) in Z^{d+2}.
inline std::optional<Integer> global_lattice_index(const GlobalSemigroup& g)
{
    std::vector<RatVec> vs;
    for (const auto& p : g.points)
        vs.push_back(to_ratvec(p));
    return geom::lattice_index(vs, g.dim + 2);
}

struct FiberReport
{
    GradingPair a;
    bool skipped = false;
    std::string reason;
    geom::RatPolytope direct = geom::RatPolytope::empty(0);
    geom::RatPolytope slice = geom::RatPolytope::empty(0);
    std::optional<Rational> gap;
    bool equal = false;
    bool interior = false;

    /// Equality is only demanded in the interior reach of the sampled grid.
    bool demanded() const { return !skipped && interior; }
    bool ok() const { return !demanded() || equal; }
};

/// Chart polytope of the limit of a₁D̄ + a₂Ē for rational a.
inline geom::RatPolytope combined_polytope(const ToricAdelicDivisor& d, const ToricAdelicDivisor& e,
                                           const GradingPair& a)
{
    return adelic::chart_polytope(d.frame(), a.first * d.limit() + a.second * e.limit());
}

namespace detail {

inline FiberReport compare_fiber(const GlobalCone& gc, const GradingPair& a, geom::RatPolytope direct)
{
    FiberReport rep;
    rep.a = a;
    rep.direct = std::move(direct);
    const RatVec av{a.first, a.second};
    rep.slice = geom::cone_slice(gc.cone, av);
    rep.interior = geom::interior_contains(gc.support, av);
    rep.equal = rep.direct == rep.slice;
    if (!rep.direct.is_empty() && !rep.slice.is_empty())
        rep.gap = geom::hausdorff_distance(rep.direct, rep.slice);
    return rep;
}

} // namespace detail

/// Δ(a₁D̄ + a₂Ē) computed directly against the slice of the global cone at a.
/// Non-big directions are skipped.
inline FiberReport fiber_check(const ToricAdelicDivisor& d, const ToricAdelicDivisor& e, const GlobalBody& body,
                               const GradingPair& a, const Flag& flag)
{
    geom::RatPolytope direct = geom::project(combined_polytope(d, e, a), flag.order());
    if (!direct.is_full_dimensional())
    {
        FiberReport rep;
        rep.a = a;
        rep.skipped = true;
        rep.reason = "combination not big";
        rep.direct = std::move(direct);
        return rep;
    }
    return detail::compare_fiber(body.cone, a, std::move(direct));
}

struct RestrictedGlobal
{
    GlobalBody body;
    std::vector<FiberReport> fibers;
};

/// The restricted global body along F = V(T), with fiber reports at `samples`.
inline RestrictedGlobal restricted_global(const ToricAdelicDivisor& d, const ToricAdelicDivisor& e,
                                          std::vector<std::size_t> t, long grid_bound, long degree_bound,
                                          const std::vector<GradingPair>& samples,
                                          long bplus_degree = core::kBplusDegree)
{
    adelic::check_compatible(d, e);
    std::sort(t.begin(), t.end());
    const auto& ample = d.boundary().divisor();
    if (core::flat_in_augmented_base_locus(d, t, ample, bplus_degree))
        throw CoreError("restricted theory undefined by hypothesis");
    const Flag flag = Flag::restricted(d.dim(), t);
    GlobalSemigroup g{flag.dim(), grid_bound, degree_bound, {}};
    for (long a1 = -grid_bound; a1 <= grid_bound; ++a1)
        for (long a2 = -grid_bound; a2 <= grid_bound; ++a2)
        {
            if (a1 == 0 && a2 == 0)
                continue;
            auto comb = adelic::combine(d, e, a1, a2);
            if (core::flat_in_augmented_base_locus(comb, t, ample, bplus_degree))
                continue;
            detail::collect(g, comb, a1, a2, flag, &t);
        }
    RestrictedGlobal out{{g, detail::cone_over(g)}, {}};
    for (const auto& a : samples)
    {
        const bool integral = is_integral(a.first) && is_integral(a.second);
        if (!integral)
            throw CoreError("restricted global: fiber samples must be integral");
        auto comb = adelic::combine(d, e, a.first, a.second);
        if (core::flat_in_augmented_base_locus(comb, t, ample, bplus_degree))
        {
            FiberReport rep;
            rep.a = a;
            rep.skipped = true;
            rep.reason = "restricted flat inside the augmented base locus";
            out.fibers.push_back(std::move(rep));
            continue;
        }
        geom::RatPolytope face = comb.chart_polytope();
        for (auto i : t)
        {
            RatVec normal(d.dim(), Rational(0));
            normal[i] = -1;
            face = geom::intersect_hyperplane(face, {normal, Rational(0)});
        }
        out.fibers.push_back(detail::compare_fiber(out.body.cone, a, geom::project(face, flag.order())));
    }
    return out;
}

} // namespace okounkov::global
