#pragma once

#include "okounkov/geometry/lp.hpp"
#include "okounkov/geometry/polytope.hpp"

namespace okounkov::geom {

/// L∞ distance from a point to a nonempty polytope, as the exact LP
///   min t  s.t.  -t <= (Σ λ_j w_j - v)_i <= t,  Σ λ_j = 1,  λ, t >= 0.
inline Rational linf_distance(const RatVec& v, const RatPolytope& q)
{
    if (q.is_empty())
        throw GeometryError("undefined distance to empty body");
    const auto& ws = q.vertices();
    const std::size_t d = v.size(), p = ws.size();
    // columns: λ_0..λ_{p-1}, t, slack+ (d), slack- (d)
    const std::size_t n = p + 1 + 2 * d;
    RatMatrix a;
    RatVec b;
    for (std::size_t i = 0; i < d; ++i)
    {
        RatVec up(n, Rational(0)), down(n, Rational(0));
        for (std::size_t j = 0; j < p; ++j)
        {
            up[j] = ws[j][i];
            down[j] = -ws[j][i];
        }
        up[p] = -1;
        down[p] = -1;
        up[p + 1 + i] = 1;
        down[p + 1 + d + i] = 1;
        a.push_back(std::move(up));
        b.push_back(v[i]);
        a.push_back(std::move(down));
        b.push_back(-v[i]);
    }
    RatVec convex(n, Rational(0));
    for (std::size_t j = 0; j < p; ++j)
        convex[j] = 1;
    a.push_back(std::move(convex));
    b.emplace_back(1);

    RatVec c(n, Rational(0));
    c[p] = 1;
    const LpResult r = lp_minimize(a, b, c);
    if (r.status != LpStatus::Optimal)
        throw GeometryError("linf_distance: LP did not reach an optimum");
    return r.value;
}

/// Hausdorff distance under the L∞ unit ball. The distance to a convex body
/// is convex, so the one-sided excess is attained at a vertex.
inline Rational hausdorff_distance(const RatPolytope& p, const RatPolytope& q)
{
    if (p.is_empty() || q.is_empty())
        throw GeometryError("undefined distance to empty body");
    if (p.ambient_dim() != q.ambient_dim())
        throw GeometryError("hausdorff_distance: dimension mismatch");
    Rational best(0);
    for (const auto& v : p.vertices())
        if (!q.contains(v))
            best = std::max(best, linf_distance(v, q));
    for (const auto& w : q.vertices())
        if (!p.contains(w))
            best = std::max(best, linf_distance(w, p));
    return best;
}

} // namespace okounkov::geom
