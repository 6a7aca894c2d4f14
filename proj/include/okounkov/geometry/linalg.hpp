#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov::geom {

using RatMatrix = std::vector<RatVec>;   // row-major

/// Reduced row echelon form in place. Returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    const std::size_t rows = a.size(), cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i)
        {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix a) { return rref(a).size(); }

inline Rational determinant(RatMatrix a)
{
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c)
        {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i)
        {
            if (a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[i][k] -= f * a[c][k];
        }
    }
    return det;
}

/// Solves A x = b. Returns nullopt when inconsistent; free variables are set to 0.
inline std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    RatMatrix aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i)
    {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols)
        return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = aug[i][cols];
    return x;
}

/// Basis of the null space {x : A x = 0}.
inline RatMatrix null_space(RatMatrix a, std::size_t cols)
{
    auto piv = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv)
        is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f)
    {
        if (is_pivot[f])
            continue;
        RatVec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Affine hull of a point set: base point, direction basis in echelon form and
/// the pivot coordinates along which the hull projects injectively.
struct AffineHull
{
    RatVec origin;
    RatMatrix directions;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return directions.size(); }
};

inline AffineHull affine_hull(const std::vector<RatVec>& points)
{
    AffineHull h;
    if (points.empty())
        return h;
    h.origin = points.front();
    RatMatrix diffs;
    diffs.reserve(points.size());
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], h.origin));
    if (diffs.empty())
        return h;
    h.pivots = rref(diffs);
    diffs.resize(h.pivots.size());
    h.directions = std::move(diffs);
    return h;
}

/// Equations {x : n·x = c} cutting out the affine hull inside the ambient space.
inline std::vector<std::pair<RatVec, Rational>> affine_equations(const AffineHull& h, std::size_t ambient)
{
    std::vector<std::pair<RatVec, Rational>> eqs;
    for (auto& n : null_space(h.directions, ambient))
    {
        RatVec prim = normalize_ray(n);
        // sign convention: first nonzero coordinate positive
        for (auto& x : prim)
        {
            if (x == 0)
                continue;
            if (x < 0)
                for (auto& y : prim)
                    y = -y;
            break;
        }
        Rational c = dot(prim, h.origin);
        eqs.emplace_back(std::move(prim), std::move(c));
    }
    return eqs;
}

} // namespace okounkov::geom
