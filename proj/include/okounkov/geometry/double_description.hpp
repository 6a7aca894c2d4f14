#pragma once

#include <cstdint>
#include <vector>

#include "okounkov/geometry/linalg.hpp"

namespace okounkov::geom {

/// Bit set over constraint indices, sized once per run.
class IndexSet
{
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    IndexSet operator&(const IndexSet& o) const
    {
        IndexSet r;
        r.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    bool contains(const IndexSet& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0)
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct ExtremeRay
{
    RatVec direction;   // primitive integer entries
    IndexSet tight;     // constraints satisfied with equality
};

/// Extreme rays of the pointed cone {x : A x >= 0} by the double description
/// method (Motzkin et al.) with the combinatorial adjacency test.
/// Throws GeometryError when A does not have full column rank.
inline std::vector<ExtremeRay> extreme_rays(const RatMatrix& rows, std::size_t n)
{
    const std::size_t m = rows.size();

    // initial simplicial cone from n independent rows
    std::vector<std::size_t> basis_rows;
    RatMatrix acc;
    for (std::size_t i = 0; i < m && basis_rows.size() < n; ++i)
    {
        acc.push_back(rows[i]);
        if (rank(acc) == acc.size())
            basis_rows.push_back(i);
        else
            acc.pop_back();
    }
    if (basis_rows.size() < n)
        throw GeometryError("double description: cone is not pointed");

    std::vector<ExtremeRay> rays;
    for (std::size_t k = 0; k < n; ++k)
    {
        RatVec e(n, Rational(0));
        e[k] = 1;
        auto x = solve(acc, e);
        ExtremeRay r{normalize_ray(*x), IndexSet(m)};
        for (std::size_t j = 0; j < n; ++j)
            if (j != k)
                r.tight.set(basis_rows[j]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(m, false);
    for (auto i : basis_rows)
        in_basis[i] = true;

    for (std::size_t i = 0; i < m; ++i)
    {
        if (in_basis[i])
            continue;
        const RatVec& a = rows[i];
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r)
        {
            val[r] = dot(a, rays[r].direction);
            if (val[r] > 0)
                pos.push_back(r);
            else if (val[r] < 0)
                neg.push_back(r);
            else
                rays[r].tight.set(i);
        }
        if (neg.empty())
            continue;

        std::vector<ExtremeRay> next;
        next.reserve(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0)
                next.push_back(rays[r]);

        for (auto p : pos)
        {
            for (auto q : neg)
            {
                IndexSet common = rays[p].tight & rays[q].tight;
                if (common.count() + 2 < n)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].tight.contains(common))
                        adjacent = false;
                if (!adjacent)
                    continue;
                RatVec dir(n);
                for (std::size_t k = 0; k < n; ++k)
                    dir[k] = val[p] * rays[q].direction[k] - val[q] * rays[p].direction[k];
                common.set(i);
                next.push_back(ExtremeRay{normalize_ray(dir), std::move(common)});
            }
        }
        rays = std::move(next);
    }
    return rays;
}

} // namespace okounkov::geom
