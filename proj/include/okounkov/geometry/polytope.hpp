#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "okounkov/geometry/double_description.hpp"
#include "okounkov/geometry/linalg.hpp"

namespace okounkov::geom {

/// Largest ambient dimension for which hulls and volumes are computed.
inline constexpr std::size_t kMaxHullDimension = 4;

/// The closed halfspace {x : normal·x <= offset}, or the hyperplane
/// {x : normal·x == offset} when used as an equation.
struct Halfspace
{
    RatVec normal;
    Rational offset;

    bool satisfied_by(const RatVec& x) const { return dot(normal, x) <= offset; }
    bool tight_at(const RatVec& x) const { return dot(normal, x) == offset; }

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Bounded rational polytope carrying both a minimal vertex list and a facet
/// description relative to its affine hull. Only constructible through
/// convex_hull (or the empty/point factories), so both descriptions always
/// agree.
class RatPolytope
{
public:
    static RatPolytope empty(std::size_t ambient)
    {
        RatPolytope p;
        p.ambient_ = ambient;
        return p;
    }

    std::size_t ambient_dim() const { return ambient_; }
    bool is_empty() const { return vertices_.empty(); }
    /// Affine dimension; -1 for the empty polytope.
    int dim() const { return is_empty() ? -1 : static_cast<int>(affine_dim_); }
    bool is_full_dimensional() const { return !is_empty() && affine_dim_ == ambient_; }

    const std::vector<RatVec>& vertices() const { return vertices_; }
    /// Facet inequalities (relative to the affine hull).
    const std::vector<Halfspace>& halfspaces() const { return facets_; }
    /// Equations of the affine hull.
    const std::vector<Halfspace>& equations() const { return equations_; }

    bool contains(const RatVec& x) const
    {
        if (is_empty())
            return false;
        for (const auto& e : equations_)
            if (!e.tight_at(x))
                return false;
        for (const auto& h : facets_)
            if (!h.satisfied_by(x))
                return false;
        return true;
    }

    /// Membership of x/scale without forming the quotient.
    bool contains_scaled(const RatVec& x, const Rational& scale) const
    {
        if (is_empty())
            return false;
        for (const auto& e : equations_)
            if (dot(e.normal, x) != scale * e.offset)
                return false;
        for (const auto& h : facets_)
            if (dot(h.normal, x) > scale * h.offset)
                return false;
        return true;
    }

    bool subset_of(const RatPolytope& other) const
    {
        return std::all_of(vertices_.begin(), vertices_.end(),
                           [&](const RatVec& v) { return other.contains(v); });
    }

    friend bool operator==(const RatPolytope& a, const RatPolytope& b)
    {
        return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
    }

private:
    friend RatPolytope convex_hull(std::vector<RatVec> points, std::size_t ambient);

    void check_consistency() const
    {
        for (const auto& v : vertices_)
        {
            if (!contains(v))
                throw GeometryError("polytope: vertex violates its own H-description");
        }
        for (const auto& h : facets_)
        {
            std::size_t tight = std::count_if(vertices_.begin(), vertices_.end(),
                                              [&](const RatVec& v) { return h.tight_at(v); });
            if (tight < affine_dim_)
                throw GeometryError("polytope: facet tight at too few vertices");
        }
    }

    std::size_t ambient_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<Halfspace> equations_;
};

/// Convex hull of finitely many points in dimension at most kMaxHullDimension.
/// An empty input yields the empty polytope of the given ambient dimension.
inline RatPolytope convex_hull(std::vector<RatVec> points, std::size_t ambient)
{
    if (ambient > kMaxHullDimension)
        throw GeometryError("convex_hull: ambient dimension " + std::to_string(ambient) +
                            " exceeds cap " + std::to_string(kMaxHullDimension));
    for (const auto& p : points)
        if (p.size() != ambient)
            throw GeometryError("convex_hull: dimension mismatch");

    RatPolytope out;
    out.ambient_ = ambient;
    if (points.empty())
        return out;

    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const AffineHull aff = affine_hull(points);
    const std::size_t k = aff.dim();
    out.affine_dim_ = k;
    for (auto& [n, c] : affine_equations(aff, ambient))
        out.equations_.push_back(Halfspace{std::move(n), std::move(c)});

    if (k == 0)
    {
        out.vertices_ = {points.front()};
        out.check_consistency();
        return out;
    }

    // Facets of the projection onto the pivot coordinates are the extreme rays
    // (a, b) of the polar cone {b - a·y_i >= 0}.
    RatMatrix rows;
    rows.reserve(points.size());
    for (const auto& p : points)
    {
        RatVec r(k + 1);
        for (std::size_t j = 0; j < k; ++j)
            r[j] = -p[aff.pivots[j]];
        r[k] = 1;
        rows.push_back(std::move(r));
    }
    auto rays = extreme_rays(rows, k + 1);

    std::vector<std::vector<std::size_t>> tight_facets(points.size());
    for (const auto& ray : rays)
    {
        Halfspace h{RatVec(ambient, Rational(0)), ray.direction[k]};
        for (std::size_t j = 0; j < k; ++j)
            h.normal[aff.pivots[j]] = ray.direction[j];
        const std::size_t f = out.facets_.size();
        for (std::size_t i = 0; i < points.size(); ++i)
            if (ray.tight.test(i))
                tight_facets[i].push_back(f);
        out.facets_.push_back(std::move(h));
    }
    std::sort(out.facets_.begin(), out.facets_.end(), [](const Halfspace& a, const Halfspace& b) {
        return lex_less(a.normal, b.normal) || (a.normal == b.normal && a.offset < b.offset);
    });

    // a point is a vertex iff the normals of its tight facets have rank k
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (tight_facets[i].size() < k)
            continue;
        RatMatrix normals;
        for (const auto& h : out.facets_)
            if (h.tight_at(points[i]))
            {
                RatVec n(k);
                for (std::size_t j = 0; j < k; ++j)
                    n[j] = h.normal[aff.pivots[j]];
                normals.push_back(std::move(n));
            }
        if (rank(normals) == k)
            out.vertices_.push_back(points[i]);
    }
    out.check_consistency();
    return out;
}

inline RatPolytope convex_hull(const std::vector<RatVec>& points)
{
    if (points.empty())
        throw GeometryError("convex_hull: no points and no ambient dimension");
    return convex_hull(points, points.front().size());
}

inline RatPolytope point_polytope(const RatVec& p) { return convex_hull({p}, p.size()); }

/// The polytope {x : normal_i·x <= offset_i}. Throws when the region is unbounded.
inline RatPolytope polytope_from_halfspaces(const std::vector<Halfspace>& hs, std::size_t ambient)
{
    // homogenize: t*offset - normal·y >= 0, t >= 0
    RatMatrix rows;
    for (const auto& h : hs)
    {
        RatVec r(ambient + 1);
        for (std::size_t j = 0; j < ambient; ++j)
            r[j] = -h.normal[j];
        r[ambient] = h.offset;
        rows.push_back(std::move(r));
    }
    RatVec t(ambient + 1, Rational(0));
    t[ambient] = 1;
    rows.push_back(t);

    RatMatrix normals;
    for (const auto& h : hs)
        normals.push_back(h.normal);
    if (rank(normals) < ambient)
    {
        // the recession cone contains a line; nonempty regions are unbounded
        throw GeometryError("polytope_from_halfspaces: region is unbounded or has lineality");
    }

    std::vector<RatVec> verts;
    for (const auto& ray : extreme_rays(rows, ambient + 1))
    {
        const Rational& tt = ray.direction[ambient];
        if (tt == 0)
            throw GeometryError("polytope_from_halfspaces: region is unbounded");
        RatVec v(ambient);
        for (std::size_t j = 0; j < ambient; ++j)
            v[j] = ray.direction[j] / tt;
        verts.push_back(std::move(v));
    }
    return convex_hull(std::move(verts), ambient);
}

namespace detail {

inline std::size_t affine_rank(const std::vector<RatVec>& vs, const std::vector<std::size_t>& ids)
{
    RatMatrix diffs;
    for (std::size_t i = 1; i < ids.size(); ++i)
        diffs.push_back(sub(vs[ids[i]], vs[ids[0]]));
    return diffs.empty() ? 0 : rank(diffs);
}

// Pulling triangulation: cone from the first vertex of a face over the
// facets of that face not containing it.
inline void pull(const RatPolytope& p, const std::vector<std::size_t>& face, std::size_t k,
                 std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out)
{
    const auto& vs = p.vertices();
    prefix.push_back(face.front());
    if (k == 0)
    {
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : p.halfspaces())
    {
        std::vector<std::size_t> sub;
        for (auto v : face)
            if (h.tight_at(vs[v]))
                sub.push_back(v);
        if (sub.size() == face.size() || sub.empty() || sub.front() == face.front())
            continue;
        if (affine_rank(vs, sub) != k - 1 || !seen.insert(sub).second)
            continue;
        pull(p, sub, k - 1, prefix, out);
    }
    prefix.pop_back();
}

} // namespace detail

/// Simplices (as vertex index lists) of a triangulation of a full-dimensional polytope.
inline std::vector<std::vector<std::size_t>> triangulate(const RatPolytope& p)
{
    std::vector<std::vector<std::size_t>> out;
    if (!p.is_full_dimensional())
        return out;
    std::vector<std::size_t> all(p.vertices().size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> prefix;
    detail::pull(p, all, p.ambient_dim(), prefix, out);
    return out;
}

/// Exact Lebesgue volume in the ambient dimension; 0 for empty or
/// lower-dimensional polytopes.
inline Rational polytope_volume(const RatPolytope& p)
{
    if (!p.is_full_dimensional())
        return Rational(0);
    const std::size_t d = p.ambient_dim();
    const auto& vs = p.vertices();
    Rational total(0);
    for (const auto& simplex : triangulate(p))
    {
        RatMatrix m;
        for (std::size_t i = 1; i <= d; ++i)
            m.push_back(sub(vs[simplex[i]], vs[simplex[0]]));
        total += abs(determinant(std::move(m)));
    }
    return total / Rational(factorial(static_cast<unsigned>(d)));
}

inline RatPolytope minkowski_sum(const RatPolytope& p, const RatPolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw GeometryError("minkowski_sum: dimension mismatch");
    if (p.is_empty() || q.is_empty())
        return RatPolytope::empty(p.ambient_dim());
    std::vector<RatVec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            sums.push_back(add(a, b));
    return convex_hull(std::move(sums), p.ambient_dim());
}

inline RatPolytope scale(const RatPolytope& p, const Rational& t)
{
    if (t < 0)
        throw GeometryError("scale: negative factor");
    if (p.is_empty())
        return p;
    std::vector<RatVec> vs;
    for (const auto& v : p.vertices())
        vs.push_back(mul(t, v));
    return convex_hull(std::move(vs), p.ambient_dim());
}

inline RatPolytope translate(const RatPolytope& p, const RatVec& by)
{
    if (p.is_empty())
        return p;
    std::vector<RatVec> vs;
    for (const auto& v : p.vertices())
        vs.push_back(add(v, by));
    return convex_hull(std::move(vs), p.ambient_dim());
}

/// Image under the coordinate map x -> (x[coords[0]], ..., x[coords[k-1]]).
inline RatPolytope project(const RatPolytope& p, const std::vector<std::size_t>& coords)
{
    if (p.is_empty())
        return RatPolytope::empty(coords.size());
    std::vector<RatVec> vs;
    for (const auto& v : p.vertices())
    {
        RatVec w;
        for (auto c : coords)
            w.push_back(v.at(c));
        vs.push_back(std::move(w));
    }
    return convex_hull(std::move(vs), coords.size());
}

/// P ∩ {x : h.normal·x == h.offset}; h must be valid on P.
inline RatPolytope intersect_hyperplane(const RatPolytope& p, const Halfspace& h)
{
    std::vector<Halfspace> hs = p.halfspaces();
    for (const auto& e : p.equations())
    {
        hs.push_back(e);
        hs.push_back(Halfspace{mul(Rational(-1), e.normal), -e.offset});
    }
    hs.push_back(h);
    hs.push_back(Halfspace{mul(Rational(-1), h.normal), -h.offset});
    if (p.is_empty())
        return p;
    return polytope_from_halfspaces(hs, p.ambient_dim());
}

/// (m·P) ∩ Z^d, sorted lexicographically. Bounding-box scan filtered through
/// the H-description.
inline std::vector<Exponent> lattice_points(const RatPolytope& p, long m)
{
    std::vector<Exponent> out;
    if (p.is_empty())
        return out;
    const std::size_t d = p.ambient_dim();
    const Rational mm(m);
    std::vector<Integer> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j)
    {
        Rational mn = p.vertices().front()[j], mx = mn;
        for (const auto& v : p.vertices())
        {
            if (v[j] < mn)
                mn = v[j];
            if (v[j] > mx)
                mx = v[j];
        }
        lo[j] = ceil(mm * mn);
        hi[j] = floor(mm * mx);
        if (lo[j] > hi[j])
            return out;
    }
    if (d == 0)
    {
        out.push_back({});
        return out;
    }
    Exponent cur(d);
    RatVec x(d);
    for (std::size_t j = 0; j < d; ++j)
        cur[j] = lo[j].get_si();
    while (true)
    {
        for (std::size_t j = 0; j < d; ++j)
            x[j] = Rational(static_cast<long>(cur[j]));
        if (p.contains_scaled(x, mm))
            out.push_back(cur);
        std::size_t j = d;
        while (j > 0)
        {
            --j;
            if (cur[j] < hi[j].get_si())
            {
                ++cur[j];
                break;
            }
            cur[j] = lo[j].get_si();
            if (j == 0)
                return out;
        }
    }
}

} // namespace okounkov::geom
