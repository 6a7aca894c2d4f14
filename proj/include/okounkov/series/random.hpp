#pragma once

#include <random>

#include "okounkov/series/space.hpp"

namespace okounkov::series {

/// Seeded random section spaces for the echelon-valuation property.
struct RandomSpaceParams
{
    std::size_t max_dim = 3;
    std::size_t max_space_dim = 12;
    long max_coeff = 3;
};

namespace detail {

inline std::size_t box_side(std::size_t d)
{
    // (side)^d comfortably exceeds max_space_dim + 6 for d <= 3
    return d == 1 ? 18 : d == 2 ? 5 : 3;
}

template <class Rng>
std::vector<Exponent> random_support(Rng& rng, std::size_t d, std::size_t count)
{
    const long side = static_cast<long>(box_side(d));
    std::uniform_int_distribution<long> coord(0, side - 1);
    std::set<Exponent> out;
    while (out.size() < count)
    {
        Exponent e(d);
        for (auto& x : e)
            x = coord(rng);
        out.insert(std::move(e));
    }
    return {out.begin(), out.end()};
}

} // namespace detail

/// Either k distinct monomials or k dense combinations over a random support.
template <class Rng>
SectionSpace<Rational> random_section_space(Rng& rng, const RandomSpaceParams& p = {})
{
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, p.max_dim)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, p.max_space_dim)(rng);
    const bool monomial = std::bernoulli_distribution(0.5)(rng);
    std::vector<LaurentSection<Rational>> gens;
    if (monomial)
    {
        for (auto& e : detail::random_support(rng, d, k))
            gens.push_back(LaurentSection<Rational>::monomial(std::move(e)));
        return SectionSpace<Rational>(d, 1, gens);
    }
    const std::size_t n = k + std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const auto support = detail::random_support(rng, d, n);
    std::uniform_int_distribution<long> coef(-p.max_coeff, p.max_coeff);
    std::bernoulli_distribution keep(0.6);
    for (std::size_t i = 0; i < k; ++i)
    {
        LaurentSection<Rational> s(d);
        for (const auto& e : support)
            if (keep(rng))
                if (long c = coef(rng); c != 0)
                    s.add_term(e, Rational(c));
        gens.push_back(std::move(s));
    }
    return SectionSpace<Rational>(d, 1, gens);
}

/// Random unimodular integer matrix: a product of elementary row operations
/// and sign flips.
template <class Rng>
std::vector<std::vector<long>> random_unimodular(Rng& rng, std::size_t k, int steps = 12)
{
    std::vector<std::vector<long>> u(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        u[i][i] = 1;
    if (k < 2)
    {
        if (k == 1 && std::bernoulli_distribution(0.5)(rng))
            u[0][0] = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> row(0, k - 1);
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < steps; ++s)
    {
        const std::size_t i = row(rng), j = row(rng);
        if (i == j)
        {
            for (auto& x : u[i])
                x = -x;
            continue;
        }
        const long c = mult(rng);
        for (std::size_t c2 = 0; c2 < k; ++c2)
            u[i][c2] += c * u[j][c2];
    }
    return u;
}

/// The basis of `space` transformed by `u` (rows of u give combinations).
inline SectionSpace<Rational> change_basis(const SectionSpace<Rational>& space,
                                           const std::vector<std::vector<long>>& u)
{
    const auto& b = space.basis();
    std::vector<LaurentSection<Rational>> gens;
    for (const auto& row : u)
    {
        LaurentSection<Rational> s(space.ambient_dim());
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                s.axpy(Rational(row[j]), b[j]);
        gens.push_back(std::move(s));
    }
    return SectionSpace<Rational>(space.ambient_dim(), space.degree(), gens);
}

struct EchelonTrial
{
    std::size_t ambient_dim = 0, dim = 0, distinct = 0;
    bool monomial = false;
    bool invariant = false;

    bool ok() const { return distinct == dim && invariant; }
};

/// #distinct leading exponents = dim, and the leading set survives a random
/// unimodular change of basis, under a random variable order.
template <class Rng>
EchelonTrial echelon_trial(Rng& rng, const RandomSpaceParams& p = {})
{
    const auto space = random_section_space(rng, p);
    const std::size_t d = space.ambient_dim();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Flag flag(d, order);

    EchelonTrial t;
    t.ambient_dim = d;
    t.dim = space.dim();
    t.monomial = space.is_monomial();
    const auto lead = leading_exponents(space, flag);
    t.distinct = std::set<Exponent>(lead.begin(), lead.end()).size();
    const auto moved = change_basis(space, random_unimodular(rng, space.dim()));
    t.invariant = moved.dim() == space.dim() && leading_exponents(moved, flag) == lead;
    return t;
}

} // namespace okounkov::series
