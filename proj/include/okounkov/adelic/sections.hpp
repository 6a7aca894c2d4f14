#pragma once

#include "okounkov/adelic/divisor.hpp"
#include "okounkov/series/graded.hpp"

namespace okounkov::adelic {

using Space = series::SectionSpace<Rational>;
using Series = series::GradedSeries<Rational>;

/// Chart monomials of (mP) ∩ Z^d for a polytope P.
inline Space lattice_space(const geom::RatPolytope& p, long m)
{
    if (m < 1)
        throw ModelError("sections: degree must be positive");
    return Space::monomials(p.ambient_dim(), m, p.is_empty() ? std::vector<Exponent>{} : geom::lattice_points(p, m));
}

/// H⁰(X, mD) for a model divisor, in chart coordinates.
inline Space model_sections(const ToricFrame& f, const ModelDivisor& d, long m)
{
    return lattice_space(chart_polytope(f, d), m);
}

/// H⁰(U, mD̄). A section x^α is in the space iff div(x^α) + mD̄ is a limit of
/// effective model divisors; effectivity is closed in the boundary topology,
/// so the test is membership in the closed limit polytope.
inline Space adelic_sections(const ToricAdelicDivisor& d, long m) { return lattice_space(d.chart_polytope(), m); }

/// The graded series m ↦ H⁰(U, mD̄), with the limit polytope as exact body.
inline Series adelic_series(const ToricAdelicDivisor& d)
{
    return series::polytope_series<Rational>(d.chart_polytope(), series::SeriesKind::ToricLimit);
}

/// The series of the model divisor D_j + sign·q_j·D0 (sign in {-1, 0, 1}).
inline Series stage_series(const ToricAdelicDivisor& d, long j, int sign)
{
    const Stage& s = d.stage(j);
    ModelDivisor shifted = s.divisor + Rational(sign * s.q) * d.boundary().divisor();
    return series::polytope_series<Rational>(chart_polytope(d.frame(), shifted), series::SeriesKind::ToricModel);
}

struct Sandwich
{
    Space lower, middle, upper;
    bool lower_in_middle, middle_in_upper;

    bool ok() const { return lower_in_middle && middle_in_upper; }
};

/// H⁰(m(D_j - q_j D0)) ⊆ H⁰(U, mD̄) ⊆ H⁰(m(D_j + q_j D0)).
inline Sandwich sandwich_spaces(const ToricAdelicDivisor& d, long j, long m)
{
    const Stage& s = d.stage(j);
    const ModelDivisor& d0 = d.boundary().divisor();
    Space lower = model_sections(d.frame(), s.divisor - s.q * d0, m);
    Space middle = adelic_sections(d, m);
    Space upper = model_sections(d.frame(), s.divisor + s.q * d0, m);
    const bool lm = lower.subspace_of(middle), mu = middle.subspace_of(upper);
    return {std::move(lower), std::move(middle), std::move(upper), lm, mu};
}

struct AugmentedBaseLocus
{
    series::CoordinateFlatSet locus;
    long stabilization_degree = 1;
    bool confirmed = false;
    /// Bs(mD̄ - A) for m = 1..M
    std::vector<series::CoordinateFlatSet> per_degree;
};

/// B₊(D̄) ≈ ∩_{m <= M} Bs(mD̄ - A) for an ample model divisor A.
inline AugmentedBaseLocus augmented_base_locus(const ToricAdelicDivisor& d, const ModelDivisor& ample, long max_degree)
{
    if (max_degree < 1)
        throw ModelError("augmented base locus: degree bound must be positive");
    check_divisor(d.frame(), ample);
    if (!is_ample(d.frame(), ample))
        throw ModelError("augmented base locus: reference divisor is not ample");
    const ToricAdelicDivisor a = ToricAdelicDivisor::constant(d.frame(), d.boundary(), ample);
    AugmentedBaseLocus out{series::CoordinateFlatSet::whole(), 1, false, {}};
    for (long m = 1; m <= max_degree; ++m)
    {
        auto bs = series::base_locus(adelic_sections(combine(d, a, Rational(m), Rational(-1)), 1));
        auto next = intersect(out.locus, bs);
        if (m == 1 || !(next == out.locus))
            out.stabilization_degree = m;
        out.locus = std::move(next);
        out.per_degree.push_back(std::move(bs));
    }
    out.confirmed = out.stabilization_degree < max_degree;
    return out;
}

} // namespace okounkov::adelic
