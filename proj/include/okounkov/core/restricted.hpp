#pragma once

#include "okounkov/adelic/sections.hpp"
#include "okounkov/core/okounkov_body.hpp"

namespace okounkov::core {

/// Default degree bound for the B₊ hypothesis gate.
inline constexpr long kBplusDegree = 8;

/// Whether E = V(x_i : i ∈ T) lies in B₊(D̄), computed against `ample`.
inline bool flat_in_augmented_base_locus(const adelic::ToricAdelicDivisor& d, const std::vector<std::size_t>& t,
                                         const adelic::ModelDivisor& ample, long bplus_degree = kBplusDegree)
{
    const auto bplus = adelic::augmented_base_locus(d, ample, bplus_degree);
    return bplus.locus.contains_flat(series::CoordinateFlatSet::Flat(t.begin(), t.end()));
}

/// m ↦ restrict(H⁰(U, mD̄), T), the images H⁰(U|E, mD̄) on E = V(T).
inline Series restricted_series(const adelic::ToricAdelicDivisor& d, std::vector<std::size_t> t,
                                const adelic::ModelDivisor& ample, long bplus_degree = kBplusDegree)
{
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (auto i : t)
        if (i >= d.dim())
            throw CoreError("restricted series: coordinate out of range");
    if (flat_in_augmented_base_locus(d, t, ample, bplus_degree))
        throw CoreError("restricted theory undefined by hypothesis");
    geom::RatPolytope face = d.chart_polytope();
    for (auto i : t)
    {
        RatVec normal(d.dim(), Rational(0));
        normal[i] = -1;
        face = geom::intersect_hyperplane(face, {normal, Rational(0)});
    }
    return Series(
        series::SeriesKind::RestrictedImage, d.dim(),
        [d, t](long m) { return series::restrict(adelic::adelic_sections(d, m), t); }, face, t);
}

/// Restricted series gated against the boundary divisor as ample reference.
inline Series restricted_series(const adelic::ToricAdelicDivisor& d, std::vector<std::size_t> t)
{
    return restricted_series(d, std::move(t), d.boundary().divisor());
}

/// vol̂_{U|E} ≈ k!·#Γ_{U|E,M}/M^k with k = dim E.
inline VolumeEstimate restricted_volume_estimate(const Series& s, long max_degree)
{
    if (s.kind() != series::SeriesKind::RestrictedImage)
        throw CoreError("restricted volume: series is not a restricted image");
    if (s.natural_flag().dim() == 0)
        throw CoreError("restricted volume: degenerate zero-dimensional restriction");
    return volume_estimate(okounkov_truncated(s, s.natural_flag(), max_degree));
}

} // namespace okounkov::core
