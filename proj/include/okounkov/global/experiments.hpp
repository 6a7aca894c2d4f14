#pragma once

#include <random>

#include "okounkov/geometry/root_compare.hpp"
#include "okounkov/global/global_body.hpp"

namespace okounkov::global {

struct ConvergenceRow
{
    long j;
    Rational distance;      // d_H(Δ(D̄), Δ(D_j))
    Rational q;
    Rational body_volume;   // vol(Δ(D_j))
    Rational volume;        // d!·vol(Δ(D_j))
};

struct ConvergenceTable
{
    Rational limit_body_volume, limit_volume;
    /// d!·#Γ_M/M^d for D̄
    Rational estimate;
    std::vector<ConvergenceRow> rows;
    /// max d_H/q_j over rows with q_j > 0
    std::optional<Rational> constant;
    bool distances_nonincreasing = true;
    bool volume_gaps_nonincreasing = true;
    bool within_bound = true;

    bool ok() const { return distances_nonincreasing && volume_gaps_nonincreasing && within_bound; }
};

/// Rows (j, d_H(Δ(D̄), Δ(D_j)), q_j, vol(D_j)) for 1 <= j <= J.
inline ConvergenceTable model_convergence_experiment(const ToricAdelicDivisor& d, const Flag& flag, long stages,
                                                     long max_degree)
{
    if (stages < 2)
        throw CoreError("convergence: need at least two stages");
    const Rational df(factorial(static_cast<unsigned>(flag.dim())));
    const geom::RatPolytope limit = geom::project(d.chart_polytope(), flag.order());
    ConvergenceTable t;
    t.limit_body_volume = geom::polytope_volume(limit);
    t.limit_volume = df * t.limit_body_volume;
    t.estimate = core::volume_estimate(core::okounkov_truncated(adelic::adelic_series(d), flag, max_degree)).estimate;
    for (long j = 1; j <= stages; ++j)
    {
        const auto& st = d.stage(j);
        const geom::RatPolytope pj = geom::project(adelic::chart_polytope(d.frame(), st.divisor), flag.order());
        ConvergenceRow row{j, Rational(0), st.q, geom::polytope_volume(pj), Rational(0)};
        row.volume = df * row.body_volume;
        row.distance = geom::hausdorff_distance(limit, pj);
        if (st.q > 0)
        {
            Rational ratio = row.distance / st.q;
            if (!t.constant || ratio > *t.constant)
                t.constant = ratio;
        }
        else if (row.distance != 0)
            t.within_bound = false;
        if (!t.rows.empty())
        {
            const auto& prev = t.rows.back();
            t.distances_nonincreasing = t.distances_nonincreasing && row.distance <= prev.distance;
            t.volume_gaps_nonincreasing = t.volume_gaps_nonincreasing &&
                                          abs(Rational(row.volume - t.limit_volume)) <=
                                              abs(Rational(prev.volume - t.limit_volume));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

struct ContinuityRow
{
    Rational t;
    Rational volume;     // d!·vol(Δ(D̄ + tA))
    Rational distance;   // d_H(Δ(D̄ + tA), Δ(D̄))
};

struct ContinuityTable
{
    Rational base_volume;
    std::vector<ContinuityRow> rows;
    bool monotone = true;

    bool ok() const { return monotone; }
};

/// Rows for D̄ + t·A along a sequence t → 0; gaps must shrink monotonically.
inline ContinuityTable continuity_experiment(const ToricAdelicDivisor& d, const adelic::ModelDivisor& a,
                                             const std::vector<Rational>& ts, const Flag& flag)
{
    const Rational df(factorial(static_cast<unsigned>(flag.dim())));
    const geom::RatPolytope base = geom::project(d.chart_polytope(), flag.order());
    ContinuityTable out;
    out.base_volume = df * geom::polytope_volume(base);
    for (const auto& t : ts)
    {
        const geom::RatPolytope p =
            geom::project(adelic::chart_polytope(d.frame(), d.limit() + t * a), flag.order());
        ContinuityRow row{t, df * geom::polytope_volume(p), Rational(0)};
        if (p.is_empty() || base.is_empty())
            throw CoreError("continuity: empty body along the perturbation");
        row.distance = geom::hausdorff_distance(p, base);
        if (!out.rows.empty())
        {
            const auto& prev = out.rows.back();
            out.monotone = out.monotone && row.distance <= prev.distance &&
                           abs(Rational(row.volume - out.base_volume)) <= abs(Rational(prev.volume - out.base_volume));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

struct LogConcavityRow
{
    Rational vol_p, vol_q, vol_sum;
    bool holds;
};

/// vol(D+E)^(1/d) >= vol(D)^(1/d) + vol(E)^(1/d) for effective D, E, decided exactly.
inline LogConcavityRow log_concavity_check(const adelic::ToricFrame& f, const adelic::ModelDivisor& p,
                                           const adelic::ModelDivisor& q)
{
    const auto d = static_cast<unsigned>(f.dim());
    const Rational df(factorial(d));
    LogConcavityRow row;
    row.vol_p = df * geom::polytope_volume(adelic::chart_polytope(f, p));
    row.vol_q = df * geom::polytope_volume(adelic::chart_polytope(f, q));
    row.vol_sum = df * geom::polytope_volume(adelic::chart_polytope(f, p + q));
    row.holds = geom::brunn_minkowski_holds(row.vol_sum, row.vol_p, row.vol_q, d);
    return row;
}

/// Random effective divisor: integral chart coefficients in [0, 2], boundary
/// coefficients in {0, 1/2, ..., 3}.
inline adelic::ModelDivisor random_effective(const adelic::ToricFrame& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> chart(0, 2), bnd(0, 6);
    adelic::ModelDivisor out;
    for (std::size_t r = 0; r < f.ray_count(); ++r)
        out.coeffs.push_back(f.is_boundary(r) ? make_rational(bnd(rng), 2) : Rational(chart(rng)));
    return out;
}

struct FujitaReport
{
    geom::RatPolytope inner = geom::RatPolytope::empty(0);
    Rational epsilon, vol_outer, vol_inner;
    bool contained = false, close = false;

    bool ok() const { return contained && close; }
};

/// Rational Q ⊆ P with vol(Q) >= vol(P) - ε, by shrinking P toward the vertex
/// barycenter with factor 1 - δ, δ = min(ε/(d·vol P), 1/2).
inline FujitaReport fujita_inner_polytope(const geom::RatPolytope& p, const Rational& epsilon)
{
    if (p.is_empty() || epsilon <= 0)
        throw CoreError("fujita: need a nonempty polytope and positive epsilon");
    const std::size_t d = p.ambient_dim();
    FujitaReport rep;
    rep.epsilon = epsilon;
    rep.vol_outer = geom::polytope_volume(p);
    RatVec c(d, Rational(0));
    for (const auto& v : p.vertices())
        c = add(c, v);
    c = mul(make_rational(1, static_cast<long>(p.vertices().size())), c);
    Rational delta = make_rational(1, 2);
    if (rep.vol_outer > 0)
        delta = std::min(delta, Rational(epsilon / (Rational(static_cast<long>(d)) * rep.vol_outer)));
    std::vector<RatVec> vs;
    for (const auto& v : p.vertices())
        vs.push_back(add(c, mul(Rational(1 - delta), sub(v, c))));
    rep.inner = geom::convex_hull(std::move(vs), d);
    rep.vol_inner = geom::polytope_volume(rep.inner);
    rep.contained = rep.inner.subset_of(p);
    rep.close = rep.vol_inner >= rep.vol_outer - epsilon;
    return rep;
}

} // namespace okounkov::global
