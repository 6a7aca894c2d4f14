#pragma once

#include "okounkov/geometry/lattice.hpp"
#include "okounkov/series/graded.hpp"

namespace okounkov::core {

using Series = series::GradedSeries<Rational>;
using series::Flag;

class CoreError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Γ_m: the valuation image of W_m, sorted. #Γ_m = dim W_m.
inline std::vector<Exponent> semigroup_slice(const Series& s, long m, const Flag& flag)
{
    return series::leading_exponents(s.at(m), flag);
}

/// Γ_0, ..., Γ_M of a series under a flag.
struct GradedSemigroup
{
    std::size_t dim = 0;
    std::vector<std::vector<Exponent>> slices;   // index = degree
    std::string source;

    long max_degree() const { return static_cast<long>(slices.size()) - 1; }
};

inline GradedSemigroup materialize(const Series& s, const Flag& flag, long max_degree, std::string source = {})
{
    GradedSemigroup g{flag.dim(), {}, std::move(source)};
    for (long m = 0; m <= max_degree; ++m)
        g.slices.push_back(semigroup_slice(s, m, flag));
    return g;
}

/// First (a, b, α + β) with α ∈ Γ_a, β ∈ Γ_b and α + β ∉ Γ_{a+b}, if any.
inline std::optional<std::pair<long, long>> additivity_violation(const GradedSemigroup& g)
{
    const long top = g.max_degree();
    for (long a = 1; a <= top; ++a)
        for (long b = a; a + b <= top; ++b)
        {
            const auto& target = g.slices[a + b];
            for (const auto& x : g.slices[a])
                for (const auto& y : g.slices[b])
                {
                    Exponent z(x.size());
                    for (std::size_t i = 0; i < z.size(); ++i)
                        z[i] = x[i] + y[i];
                    if (!std::binary_search(target.begin(), target.end(), z))
                        return std::pair{a, b};
                }
        }
    return std::nullopt;
}

struct ConditionReport
{
    bool gamma0_ok = false;
    /// max coordinate of Γ_m / m over 1 <= m <= M
    Rational b;
    /// every α ∈ Γ_m satisfies 0 <= α_i <= m·⌈b⌉, i.e. Γ lies in the semigroup
    /// generated by {(a, 1) : a ∈ {0..⌈b⌉}^d}
    bool bounded_ok = false;
    /// index of the group generated by {(α, m)} in Z^{d+1}; nullopt = infinite
    std::optional<Integer> index;
    /// every slice of positive degree is empty
    bool degenerate = false;

    bool ok() const { return gamma0_ok && bounded_ok && index && *index == 1; }
};

inline ConditionReport check_conditions(const GradedSemigroup& g)
{
    ConditionReport rep;
    const std::size_t d = g.dim;
    rep.gamma0_ok = !g.slices.empty() && g.slices[0] == std::vector<Exponent>{Exponent(d, 0)};
    rep.b = 0;
    rep.degenerate = true;
    std::vector<RatVec> gens;
    for (long m = 1; m <= g.max_degree(); ++m)
        for (const auto& a : g.slices[m])
        {
            rep.degenerate = false;
            RatVec v = to_ratvec(a);
            for (const auto& x : v)
                rep.b = std::max(rep.b, Rational(x / m));
            v.emplace_back(m);
            gens.push_back(std::move(v));
        }
    const Integer cap = ceil(rep.b);
    rep.bounded_ok = true;
    for (long m = 1; m <= g.max_degree(); ++m)
        for (const auto& a : g.slices[m])
            for (auto x : a)
                rep.bounded_ok = rep.bounded_ok && x >= 0 && Integer(x) <= cap * m;
    rep.index = geom::lattice_index(gens, d + 1);
    return rep;
}

} // namespace okounkov::core
