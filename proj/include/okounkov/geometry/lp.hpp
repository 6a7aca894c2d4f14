#pragma once

#include <optional>
#include <vector>

#include "okounkov/geometry/linalg.hpp"

namespace okounkov::geom {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RatVec x;
};

namespace detail {

// Dense simplex tableau. Row i holds the constraint for basis_[i]; the last
// column is the right-hand side. Pivot selection follows Bland's rule.
class Tableau
{
public:
    Tableau(RatMatrix rows, std::vector<std::size_t> basis)
        : t_(std::move(rows)), basis_(std::move(basis))
    {}

    // Minimizes cost·x over the current feasible basis; columns >= allowed are never entered.
    LpStatus minimize(const RatVec& cost, std::size_t allowed)
    {
        while (true)
        {
            const RatVec reduced = reduced_costs(cost);
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed; ++j)
                if (reduced[j] < 0)
                {
                    enter = j;
                    break;
                }
            if (!enter)
                return LpStatus::Optimal;

            std::optional<std::size_t> leave;
            Rational best;
            const std::size_t rhs = t_.front().size() - 1;
            for (std::size_t i = 0; i < t_.size(); ++i)
            {
                if (t_[i][*enter] <= 0)
                    continue;
                Rational ratio = t_[i][rhs] / t_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                return LpStatus::Unbounded;
            pivot(*leave, *enter);
        }
    }

    RatVec reduced_costs(const RatVec& cost) const
    {
        const std::size_t cols = t_.front().size() - 1;
        RatVec r(cost.begin(), cost.end());
        r.resize(cols, Rational(0));
        for (std::size_t i = 0; i < t_.size(); ++i)
        {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[j] -= cb * t_[i][j];
        }
        return r;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / t_[row][col];
        for (auto& x : t_[row])
            x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i)
        {
            if (i == row || t_[i][col] == 0)
                continue;
            const Rational f = t_[i][col];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    RatVec solution(std::size_t n) const
    {
        RatVec x(n, Rational(0));
        const std::size_t rhs = t_.front().size() - 1;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (basis_[i] < n)
                x[basis_[i]] = t_[i][rhs];
        return x;
    }

    RatMatrix& rows() { return t_; }
    std::vector<std::size_t>& basis() { return basis_; }

private:
    RatMatrix t_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

/// Minimizes c·x subject to A x = b, x >= 0, in exact arithmetic
/// (two-phase simplex, Bland's rule).
inline LpResult lp_minimize(const RatMatrix& a, const RatVec& b, const RatVec& c)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    LpResult result;
    if (m == 0)
    {
        for (const auto& cj : c)
            if (cj < 0)
            {
                result.status = LpStatus::Unbounded;
                return result;
            }
        result.status = LpStatus::Optimal;
        result.value = 0;
        result.x.assign(n, Rational(0));
        return result;
    }

    // phase 1 with one artificial variable per row
    RatMatrix rows(m, RatVec(n + m + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        rows[i][n + i] = 1;
        rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    detail::Tableau tab(std::move(rows), std::move(basis));
    RatVec phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[n + i] = 1;
    tab.minimize(phase1, n + m);

    Rational infeas(0);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis()[i] >= n)
            infeas += tab.rows()[i][n + m];
    if (infeas != 0)
        return result;

    // drive remaining artificials out of the basis; drop redundant rows
    for (std::size_t i = 0; i < tab.rows().size();)
    {
        if (tab.basis()[i] < n)
        {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.rows()[i][j] != 0)
            {
                col = j;
                break;
            }
        if (col)
        {
            tab.pivot(i, *col);
            ++i;
        }
        else
        {
            tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    if (tab.rows().empty())
    {
        RatMatrix none;
        return lp_minimize(none, {}, c);
    }

    RatVec cost(n + m, Rational(0));
    std::copy(c.begin(), c.end(), cost.begin());
    const LpStatus st = tab.minimize(cost, n);
    if (st == LpStatus::Unbounded)
    {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x = tab.solution(n);
    result.value = dot(c, result.x);
    return result;
}

inline LpResult lp_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c)
{
    RatVec neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        neg[i] = -c[i];
    LpResult r = lp_minimize(a, b, neg);
    if (r.status == LpStatus::Optimal)
        r.value = -r.value;
    return r;
}

} // namespace okounkov::geom
