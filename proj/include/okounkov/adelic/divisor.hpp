#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "okounkov/adelic/frame.hpp"

namespace okounkov::adelic {

struct Stage
{
    ModelDivisor divisor;
    Rational q;
};

/// Per-ray closed form c - r·s^j.
struct ClosedFormCoeff
{
    Rational c, r, s;

    Rational at(long j) const { return c - r * pow(s, static_cast<unsigned>(j)); }
};

/// Adelic divisor on a fixed frame: stages j ↦ (D_j, q_j) for j >= 1 with an
/// exact rational limit. Stages are memoized behind a shared thread-safe cache.
class ToricAdelicDivisor
{
public:
    using StageFn = std::function<Stage(long)>;

    ToricAdelicDivisor(ToricFrame frame, BoundaryDivisor boundary, ModelDivisor limit, StageFn stages)
        : frame_(std::make_shared<const ToricFrame>(std::move(frame))),
          boundary_(std::move(boundary)),
          limit_(std::move(limit)),
          cache_(std::make_shared<Cache>())
    {
        cache_->fn = std::move(stages);
        check_divisor(*frame_, limit_);
        check_integral_on_chart(*frame_, limit_);
    }

    /// The constant sequence D_j = D with q_j = 0.
    static ToricAdelicDivisor constant(const ToricFrame& f, const BoundaryDivisor& b, const ModelDivisor& d)
    {
        return ToricAdelicDivisor(f, b, d, [d](long) { return Stage{d, Rational(0)}; });
    }

    /// D_j = c - r·s^j per ray, q_j = q_r·q_s^j.
    static ToricAdelicDivisor closed_form(const ToricFrame& f, const BoundaryDivisor& b,
                                          std::vector<ClosedFormCoeff> coeffs, Rational q_r, Rational q_s)
    {
        ModelDivisor limit;
        for (const auto& c : coeffs)
        {
            if (c.r != 0 && (c.s <= 0 || c.s >= 1))
                throw ModelError("closed-form stage: need 0 < s < 1");
            limit.coeffs.push_back(c.c);
        }
        if (q_r < 0 || q_s <= 0 || q_s >= 1)
            throw ModelError("closed-form stage: need q_r >= 0 and 0 < q_s < 1");
        return ToricAdelicDivisor(f, b, limit, [coeffs = std::move(coeffs), q_r, q_s](long j) {
            ModelDivisor dj;
            for (const auto& c : coeffs)
                dj.coeffs.push_back(c.at(j));
            return Stage{std::move(dj), Rational(q_r * pow(q_s, static_cast<unsigned>(j)))};
        });
    }

    /// Finitely many explicit stages; later stages are undefined.
    static ToricAdelicDivisor listed(const ToricFrame& f, const BoundaryDivisor& b, const ModelDivisor& limit,
                                     std::vector<Stage> stages)
    {
        auto shared = std::make_shared<const std::vector<Stage>>(std::move(stages));
        return ToricAdelicDivisor(f, b, limit, [shared](long j) {
            if (j > static_cast<long>(shared->size()))
                throw ModelError("stage " + std::to_string(j) + " beyond the listed stages");
            return (*shared)[j - 1];
        });
    }

    const ToricFrame& frame() const { return *frame_; }
    const BoundaryDivisor& boundary() const { return boundary_; }
    const ModelDivisor& limit() const { return limit_; }
    std::size_t dim() const { return frame_->dim(); }

    const Stage& stage(long j) const
    {
        if (j < 1)
            throw ModelError("stages are indexed from 1");
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->stages.find(j);
            if (it != cache_->stages.end())
                return *it->second;
        }
        auto made = std::make_shared<const Stage>(cache_->fn(j));
        check_divisor(*frame_, made->divisor);
        if (made->q < 0)
            throw ModelError("stage q must be nonnegative");
        std::lock_guard lock(cache_->mutex);
        return *cache_->stages.try_emplace(j, std::move(made)).first->second;
    }

    /// Chart polytope of the limit; sections of mD̄ are its m-th lattice slice.
    geom::RatPolytope chart_polytope() const { return adelic::chart_polytope(*frame_, limit_); }

    bool is_big() const { return chart_polytope().is_full_dimensional(); }

private:
    struct Cache
    {
        StageFn fn;
        std::mutex mutex;
        std::map<long, std::shared_ptr<const Stage>> stages;
    };

    std::shared_ptr<const ToricFrame> frame_;
    BoundaryDivisor boundary_;
    ModelDivisor limit_;
    std::shared_ptr<Cache> cache_;
};

inline void check_compatible(const ToricAdelicDivisor& a, const ToricAdelicDivisor& b)
{
    if (!(a.frame() == b.frame()) || !(a.boundary().divisor() == b.boundary().divisor()))
        throw ModelError("combine: frame or boundary divisor mismatch");
}

/// a1·D̄ + a2·Ē stage-wise, with q'_j = |a1|·q^D_j + |a2|·q^E_j.
inline ToricAdelicDivisor combine(const ToricAdelicDivisor& d, const ToricAdelicDivisor& e, const Rational& a1,
                                  const Rational& a2)
{
    check_compatible(d, e);
    ModelDivisor limit = a1 * d.limit() + a2 * e.limit();
    return ToricAdelicDivisor(d.frame(), d.boundary(), std::move(limit), [d, e, a1, a2](long j) {
        const Stage& sd = d.stage(j);
        const Stage& se = e.stage(j);
        return Stage{a1 * sd.divisor + a2 * se.divisor, Rational(abs(a1) * sd.q + abs(a2) * se.q)};
    });
}

/// D̄ + t·A for a model divisor A (the constant sequence).
inline ToricAdelicDivisor perturb(const ToricAdelicDivisor& d, const ModelDivisor& a, const Rational& t)
{
    return combine(d, ToricAdelicDivisor::constant(d.frame(), d.boundary(), a), Rational(1), t);
}

struct CauchyViolation
{
    long j, i;   // i == 0 marks the limit check
    std::size_t ray;
    std::string what;
};

struct CauchyReport
{
    long stage_bound = 0;
    std::vector<CauchyViolation> violations;
    /// max_j ‖D_j - limit‖ / q_j over stages with q_j > 0
    std::optional<Rational> worst_limit_ratio;

    bool ok() const { return violations.empty(); }
};

/// For 1 <= j <= i <= J: D_j - q_j D0 <= D_i <= D_j + q_j D0 coefficient-wise,
/// |limit - D_j| <= q_j D0, and q nonincreasing (strictly while positive).
inline CauchyReport verify_cauchy(const ToricAdelicDivisor& d, long stage_bound)
{
    if (stage_bound < 2)
        throw ModelError("verify_cauchy: stage bound must be at least 2");
    const auto& f = d.frame();
    CauchyReport rep;
    rep.stage_bound = stage_bound;
    for (long j = 1; j <= stage_bound; ++j)
    {
        const Stage& sj = d.stage(j);
        for (long i = j; i <= stage_bound; ++i)
        {
            const Stage& si = d.stage(i);
            for (std::size_t r = 0; r < f.ray_count(); ++r)
            {
                const Rational slack = sj.q * d.boundary()[r];
                if (abs(Rational(si.divisor.coeffs[r] - sj.divisor.coeffs[r])) > slack)
                    rep.violations.push_back({j, i, r, "stage sandwich D_j - q_j D0 <= D_i <= D_j + q_j D0"});
            }
        }
        for (std::size_t r = 0; r < f.ray_count(); ++r)
            if (abs(Rational(d.limit().coeffs[r] - sj.divisor.coeffs[r])) > sj.q * d.boundary()[r])
                rep.violations.push_back({j, 0, r, "limit within q_j D0 of D_j"});
        if (j < stage_bound)
        {
            const Rational& next = d.stage(j + 1).q;
            if (next > sj.q || (sj.q > 0 && next == sj.q))
                rep.violations.push_back({j, j + 1, 0, "q_j strictly decreasing"});
        }
        if (sj.q > 0)
        {
            auto dist = boundary_distance(f, sj.divisor, d.limit(), d.boundary());
            if (dist)
            {
                Rational ratio = *dist / sj.q;
                if (!rep.worst_limit_ratio || ratio > *rep.worst_limit_ratio)
                    rep.worst_limit_ratio = ratio;
            }
        }
    }
    return rep;
}

} // namespace okounkov::adelic
