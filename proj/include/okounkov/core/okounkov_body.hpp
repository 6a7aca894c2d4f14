#pragma once

#include "okounkov/core/semigroup.hpp"
#include "okounkov/geometry/hausdorff.hpp"

namespace okounkov::core {

struct VolumeRow
{
    long m;
    std::size_t count;
    /// #Γ_m / m^k
    Rational scaled;
};

/// Truncated Okounkov body: hull of ∪_{m <= M} Γ_m / m, with the exact body
/// attached when the series knows its chart polytope.
struct OkounkovApprox
{
    long truncation = 0;
    std::size_t dim = 0;
    geom::RatPolytope inner_body = geom::RatPolytope::empty(0);
    std::optional<geom::RatPolytope> exact_body;
    std::vector<VolumeRow> volume_sequence;

    /// Positive volume of the exact body, or of the inner body when there is none.
    bool big_observed() const
    {
        if (exact_body)
            return exact_body->is_full_dimensional();
        return inner_body.is_full_dimensional();
    }
};

/// Exact body of a series with known chart polytope P: the closure of
/// ∪ ((mP) ∩ Z^d)/m is P itself, read in flag coordinates.
inline std::optional<geom::RatPolytope> exact_body(const Series& s, const Flag& flag)
{
    if (!s.chart_body())
        return std::nullopt;
    return geom::project(*s.chart_body(), flag.order());
}

inline OkounkovApprox okounkov_truncated(const Series& s, const Flag& flag, long max_degree)
{
    if (max_degree < 1)
        throw CoreError("okounkov body: degree bound must be positive");
    const std::size_t k = flag.dim();
    if (k == 0)
        throw CoreError("okounkov body: zero-dimensional flag");
    OkounkovApprox out;
    out.truncation = max_degree;
    out.dim = k;
    out.inner_body = geom::RatPolytope::empty(k);
    out.exact_body = exact_body(s, flag);
    for (long m = 1; m <= max_degree; ++m)
    {
        const auto slice = semigroup_slice(s, m, flag);
        out.volume_sequence.push_back(
            {m, slice.size(), Rational(Rational(static_cast<unsigned long>(slice.size())) / pow(Rational(m), k))});
        std::vector<RatVec> fresh;
        for (const auto& a : slice)
        {
            RatVec x = mul(make_rational(1, m), to_ratvec(a));
            if (out.inner_body.is_empty() || !out.inner_body.contains(x))
                fresh.push_back(std::move(x));
        }
        if (fresh.empty())
            continue;
        for (const auto& v : out.inner_body.vertices())
            fresh.push_back(v);
        out.inner_body = geom::convex_hull(std::move(fresh), k);
    }
    return out;
}

struct VolumeEstimate
{
    long truncation;
    std::size_t dim;
    /// k!·#Γ_M / M^k
    Rational estimate;
    /// k!·vol(inner body at M)
    Rational lower;
    /// k!·vol(exact body), when known
    std::optional<Rational> upper;
};

inline VolumeEstimate volume_estimate(const OkounkovApprox& a)
{
    const Rational kf(factorial(static_cast<unsigned>(a.dim)));
    VolumeEstimate v{a.truncation, a.dim, kf * a.volume_sequence.back().scaled,
                     kf * geom::polytope_volume(a.inner_body), std::nullopt};
    if (a.exact_body)
        v.upper = kf * geom::polytope_volume(*a.exact_body);
    return v;
}

/// vol̂ ≈ d!·#Γ_M/M^d with the certified interval [d!·vol(inner), d!·vol(exact)].
inline VolumeEstimate adelic_volume_estimate(const Series& s, long max_degree)
{
    if (max_degree < 2)
        throw CoreError("volume estimate: degree bound must be at least 2");
    return volume_estimate(okounkov_truncated(s, s.natural_flag(), max_degree));
}

struct HomogeneityReport
{
    long t = 1;
    /// exact body of tD̄ equals t·(exact body of D̄); nullopt without exact bodies
    std::optional<bool> exact_equal;
    /// inner body of tD̄ at M equals t·(hull of Γ_{tm}(D̄)/(tm), m <= M)
    bool inner_equal = false;
    /// d_H(inner body of tD̄ at M, t·Δ(D̄)), with Δ(D̄) exact when known
    Rational gap;

    bool ok() const { return exact_equal.value_or(true) && inner_equal; }
};

/// Compares the series of tD̄ (`scaled`) with the series of D̄ (`base`).
inline HomogeneityReport homogeneity_check(const Series& base, const Series& scaled, long t, long max_degree,
                                           const Flag& flag)
{
    if (t < 1)
        throw CoreError("homogeneity: t must be positive");
    HomogeneityReport rep;
    rep.t = t;
    const auto lhs = okounkov_truncated(scaled, flag, max_degree);
    const auto compatible = okounkov_truncated(series::veronese(base, t), flag, max_degree);
    rep.inner_equal = lhs.inner_body == compatible.inner_body;
    const auto base_exact = exact_body(base, flag);
    if (lhs.exact_body && base_exact)
        rep.exact_equal = *lhs.exact_body == geom::scale(*base_exact, t);
    const geom::RatPolytope reference =
        base_exact ? geom::scale(*base_exact, t)
                   : geom::scale(okounkov_truncated(base, flag, max_degree).inner_body, t);
    if (!lhs.inner_body.is_empty() && !reference.is_empty())
        rep.gap = geom::hausdorff_distance(lhs.inner_body, reference);
    return rep;
}

/// Series-only form: the t-fold series is the Veronese m ↦ W_{tm}.
inline HomogeneityReport homogeneity_check(const Series& s, long t, long max_degree)
{
    return homogeneity_check(s, series::veronese(s, t), t, max_degree, s.natural_flag());
}

/// Least r0 <= ⌊M/2⌋ with W_r ≠ 0 for every r0 < r <= M. The window keeps at
/// least ⌈M/2⌉ observed degrees behind the answer.
inline std::optional<long> eventual_nonvanishing(const Series& s, long max_degree)
{
    if (max_degree < 1)
        throw CoreError("eventual nonvanishing: degree bound must be positive");
    long last_zero = 0;
    for (long r = 1; r <= max_degree; ++r)
        if (s.at(r).is_zero())
            last_zero = r;
    if (last_zero > max_degree / 2)
        return std::nullopt;
    return last_zero;
}

} // namespace okounkov::core
