#pragma once

#include <optional>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov::geom {

/// Index [Z^n : L] of the subgroup generated by integer vectors, via Hermite
/// reduction. nullopt stands for infinite index (rank below n, or no vectors).
inline std::optional<Integer> lattice_index(const std::vector<RatVec>& vectors, std::size_t n)
{
    if (vectors.empty())
        return std::nullopt;
    std::vector<std::vector<Integer>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors)
    {
        if (v.size() != n)
            throw GeometryError("lattice_index: dimension mismatch");
        if (!is_integral(v))
            throw GeometryError("lattice_index: non-integral vector");
        std::vector<Integer> r(n);
        for (std::size_t j = 0; j < n; ++j)
            r[j] = v[j].get_num();
        rows.push_back(std::move(r));
    }

    Integer index(1);
    std::size_t top = 0;
    for (std::size_t c = 0; c < n; ++c)
    {
        // gcd-combine column c of rows[top..] into rows[top]
        for (std::size_t i = top + 1; i < rows.size(); ++i)
        {
            if (rows[i][c] == 0)
                continue;
            if (rows[top][c] == 0)
            {
                std::swap(rows[top], rows[i]);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[top][c].get_mpz_t(),
                       rows[i][c].get_mpz_t());
            const Integer a = rows[top][c] / g, b = rows[i][c] / g;
            for (std::size_t k = c; k < n; ++k)
            {
                Integer x = rows[top][k], y = rows[i][k];
                rows[top][k] = s * x + t * y;
                rows[i][k] = a * y - b * x;
            }
        }
        if (top == rows.size() || rows[top][c] == 0)
            return std::nullopt;
        index *= abs(rows[top][c]);
        ++top;
    }
    return index;
}

} // namespace okounkov::geom
