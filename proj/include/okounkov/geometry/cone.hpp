#pragma once

#include <functional>
#include <map>
#include <vector>

#include "okounkov/geometry/lp.hpp"
#include "okounkov/geometry/polytope.hpp"

namespace okounkov::geom {

/// Cone of nonnegative combinations of generators in R^(d+k). The first d
/// coordinates are body coordinates, the last k grading coordinates.
class RatCone
{
public:
    RatCone(std::size_t body_dim, std::size_t grading_dim, std::vector<RatVec> generators = {})
        : d_(body_dim), k_(grading_dim)
    {
        for (auto& g : generators)
            add(std::move(g));
    }

    void add(RatVec g)
    {
        if (g.size() != d_ + k_)
            throw GeometryError("RatCone: generator dimension mismatch");
        if (!is_zero(g))
            gens_.push_back(std::move(g));
    }

    std::size_t body_dim() const { return d_; }
    std::size_t grading_dim() const { return k_; }
    const std::vector<RatVec>& generators() const { return gens_; }

    RatVec body_part(const RatVec& g) const { return RatVec(g.begin(), g.begin() + d_); }
    RatVec grading_part(const RatVec& g) const { return RatVec(g.begin() + d_, g.end()); }

    /// Image of the cone under projection to the grading coordinates.
    RatCone projection() const
    {
        RatCone out(0, k_);
        for (const auto& g : gens_)
            out.add(grading_part(g));
        return out;
    }

    /// Membership by an exact feasibility LP.
    bool contains(const RatVec& x) const
    {
        if (is_zero(x))
            return true;
        const std::size_t n = gens_.size();
        RatMatrix a(d_ + k_, RatVec(n));
        for (std::size_t i = 0; i < d_ + k_; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = gens_[j][i];
        return lp_minimize(a, x, RatVec(n, Rational(0))).status == LpStatus::Optimal;
    }

private:
    std::size_t d_, k_;
    std::vector<RatVec> gens_;
};

namespace detail {

// Generators grouped by grading ray, keeping only the hull vertices of the
// normalized body parts. Generators with zero grading must have zero body part.
inline std::vector<RatVec> reduce_generators(const RatCone& c)
{
    const std::size_t d = c.body_dim();
    std::map<RatVec, std::vector<RatVec>, bool (*)(const RatVec&, const RatVec&)> groups(lex_less);
    for (const auto& g : c.generators())
    {
        RatVec y = c.grading_part(g);
        if (is_zero(y))
            throw GeometryError("cone_slice: slice unbounded (generator with zero grading)");
        RatVec dir = normalize_ray(y);
        std::size_t j = 0;
        while (dir[j] == 0)
            ++j;
        const Rational s = y[j] / dir[j];
        groups[dir].push_back(mul(1 / s, c.body_part(g)));
    }
    std::vector<RatVec> out;
    for (auto& [dir, pts] : groups)
    {
        RatPolytope hull = d <= kMaxHullDimension ? convex_hull(pts, d) : RatPolytope::empty(d);
        const auto& keep = d <= kMaxHullDimension ? hull.vertices() : pts;
        for (const auto& x : keep)
        {
            RatVec g = x;
            g.insert(g.end(), dir.begin(), dir.end());
            out.push_back(std::move(g));
        }
    }
    return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    if (!cur.empty())
        visit(cur);
    if (cur.size() == k)
        return;
    for (std::size_t i = start; i < n; ++i)
    {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, visit);
        cur.pop_back();
    }
}

// Recession directions of the slice: λ >= 0, Σλ = 1, Σ λ y = 0 with a
// nonzero body image. One LP per signed body coordinate.
inline bool slice_bounded(const std::vector<RatVec>& gens, std::size_t d, std::size_t k)
{
    const std::size_t n = gens.size();
    RatMatrix eq(k + 1, RatVec(n, Rational(0)));
    RatVec rhs(k + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
    {
        for (std::size_t i = 0; i < k; ++i)
            eq[i][j] = gens[j][d + i];
        eq[k][j] = 1;
    }
    rhs[k] = 1;
    for (std::size_t i = 0; i < d; ++i)
    {
        for (int sign : {1, -1})
        {
            RatVec obj(n);
            for (std::size_t j = 0; j < n; ++j)
                obj[j] = sign * gens[j][i];
            const LpResult r = lp_maximize(eq, rhs, obj);
            if (r.status == LpStatus::Infeasible)
                return true;
            if (r.status == LpStatus::Unbounded || r.value > 0)
                return false;
        }
    }
    return true;
}

} // namespace detail

/// The polytope {x in R^d : (x, a) in C}. Vertices of the slice are images of
/// basic solutions of {λ >= 0 : Σ λ_i y_i = a}, i.e. of supports of at most k
/// generators with independent grading parts.
inline RatPolytope cone_slice(const RatCone& c, const RatVec& a)
{
    const std::size_t d = c.body_dim(), k = c.grading_dim();
    if (a.size() != k)
        throw GeometryError("cone_slice: grading dimension mismatch");
    if (is_zero(a))
        throw GeometryError("cone_slice: zero grading vector");

    const std::vector<RatVec> gens = detail::reduce_generators(c);
    const std::size_t n = gens.size();

    if (!detail::slice_bounded(gens, d, k))
        throw GeometryError("cone_slice: slice unbounded");

    std::vector<RatVec> points;
    std::vector<std::size_t> cur;
    detail::subsets(n, k, 0, cur, [&](const std::vector<std::size_t>& s) {
        RatMatrix ys(k, RatVec(s.size()));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                ys[i][j] = gens[s[j]][d + i];
        if (rank(ys) < s.size())
            return;
        auto lambda = solve(ys, a);
        if (!lambda)
            return;
        RatVec x(d, Rational(0));
        for (std::size_t j = 0; j < s.size(); ++j)
        {
            if ((*lambda)[j] < 0)
                return;
            for (std::size_t i = 0; i < d; ++i)
                x[i] += (*lambda)[j] * gens[s[j]][i];
        }
        points.push_back(std::move(x));
    });
    return convex_hull(std::move(points), d);
}

/// Strict interior membership: a is interior iff a ± ε e_i lies in the cone for
/// some ε > 0 and every i. Each direction is one exact LP maximizing ε <= 1.
inline bool interior_contains(const RatCone& support, const RatVec& a)
{
    const std::size_t k = support.body_dim() + support.grading_dim();
    if (a.size() != k)
        throw GeometryError("interior_contains: dimension mismatch");
    const auto& gens = support.generators();
    const std::size_t n = gens.size();
    // columns: λ (n), ε, slack for ε <= 1
    for (std::size_t i = 0; i < k; ++i)
    {
        for (int sign : {1, -1})
        {
            RatMatrix eq(k + 1, RatVec(n + 2, Rational(0)));
            RatVec rhs(k + 1, Rational(0));
            for (std::size_t r = 0; r < k; ++r)
            {
                for (std::size_t j = 0; j < n; ++j)
                    eq[r][j] = gens[j][r];
                rhs[r] = a[r];
            }
            // Σλg - sign·ε·e_i = a
            eq[i][n] = -sign;
            eq[k][n] = 1;
            eq[k][n + 1] = 1;
            rhs[k] = 1;
            RatVec obj(n + 2, Rational(0));
            obj[n] = 1;
            LpResult r = lp_maximize(eq, rhs, obj);
            if (r.status != LpStatus::Optimal || r.value <= 0)
                return false;
        }
    }
    return true;
}

} // namespace okounkov::geom
