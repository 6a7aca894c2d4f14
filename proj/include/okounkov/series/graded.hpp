#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "okounkov/geometry/polytope.hpp"
#include "okounkov/series/base_locus.hpp"

namespace okounkov::series {

enum class SeriesKind
{
    ToricLimit,
    ToricModel,
    ExplicitList,
    RestrictedImage,
};

inline const char* to_string(SeriesKind k)
{
    switch (k)
    {
    case SeriesKind::ToricLimit: return "toric-limit";
    case SeriesKind::ToricModel: return "toric-model";
    case SeriesKind::ExplicitList: return "explicit-list";
    case SeriesKind::RestrictedImage: return "restricted-image";
    }
    return "?";
}

/// m ↦ W_m with W_0 = span{1}. Degree slices are generated on demand and
/// memoized; the cache is shared between copies and safe for concurrent reads.
template <class F = Rational>
class GradedSeries
{
public:
    using Space = SectionSpace<F>;
    using Generator = std::function<Space(long)>;

    GradedSeries(SeriesKind kind, std::size_t ambient_dim, Generator gen,
                 std::optional<geom::RatPolytope> chart_body = std::nullopt, std::vector<std::size_t> restriction = {})
        : state_(std::make_shared<State>())
    {
        state_->restriction = std::move(restriction);
        state_->kind = kind;
        state_->d = ambient_dim;
        state_->gen = std::move(gen);
        state_->body = std::move(chart_body);
    }

    SeriesKind kind() const { return state_->kind; }
    std::size_t ambient_dim() const { return state_->d; }

    /// Closed polytope P with W_m = monomials of (mP) ∩ Z^d, when known.
    const std::optional<geom::RatPolytope>& chart_body() const { return state_->body; }

    /// Coordinates set to zero on the subvariety carrying the series (empty: all of U).
    const std::vector<std::size_t>& restriction() const { return state_->restriction; }

    /// Standard variable order on the surviving coordinates.
    Flag natural_flag() const { return Flag::restricted(state_->d, state_->restriction); }

    const Space& at(long m) const
    {
        if (m < 0)
            throw SeriesError("graded series: negative degree");
        {
            std::lock_guard lock(state_->mutex);
            auto it = state_->cache.find(m);
            if (it != state_->cache.end())
                return *it->second;
        }
        auto made = std::make_shared<const Space>(m == 0 ? unit() : state_->gen(m));
        if (made->ambient_dim() != state_->d || made->degree() != m)
            throw SeriesError("graded series: generator produced a slice of the wrong shape");
        std::lock_guard lock(state_->mutex);
        return *state_->cache.try_emplace(m, std::move(made)).first->second;
    }

private:
    Space unit() const
    {
        return Space(state_->d, 0, {LaurentSection<F>::monomial(Exponent(state_->d, 0))});
    }

    struct State
    {
        SeriesKind kind;
        std::size_t d;
        Generator gen;
        std::optional<geom::RatPolytope> body;
        std::vector<std::size_t> restriction;
        std::mutex mutex;
        std::map<long, std::shared_ptr<const Space>> cache;
    };
    std::shared_ptr<State> state_;
};

/// W_m = monomials of the lattice points of mP.
template <class F = Rational>
GradedSeries<F> polytope_series(const geom::RatPolytope& p, SeriesKind kind = SeriesKind::ToricLimit)
{
    const std::size_t d = p.ambient_dim();
    return GradedSeries<F>(
        kind, d,
        [p, d](long m) {
            return SectionSpace<F>::monomials(d, m, p.is_empty() ? std::vector<Exponent>{} : geom::lattice_points(p, m));
        },
        p);
}

/// Slices given explicitly for 1 <= m <= list size; higher degrees are not defined.
template <class F = Rational>
GradedSeries<F> explicit_series(std::size_t d, std::vector<SectionSpace<F>> slices)
{
    auto shared = std::make_shared<const std::vector<SectionSpace<F>>>(std::move(slices));
    return GradedSeries<F>(SeriesKind::ExplicitList, d, [shared](long m) {
        if (m > static_cast<long>(shared->size()))
            throw SeriesError("explicit series: degree " + std::to_string(m) + " beyond the listed slices");
        return (*shared)[m - 1];
    });
}

/// The t-th Veronese series m ↦ W_{tm}, regraded.
template <class F>
GradedSeries<F> veronese(const GradedSeries<F>& s, long t)
{
    if (t < 1)
        throw SeriesError("veronese: t must be positive");
    std::optional<geom::RatPolytope> body;
    if (s.chart_body())
        body = geom::scale(*s.chart_body(), Rational(t));
    return GradedSeries<F>(
        s.kind(), s.ambient_dim(),
        [s, t](long m) {
            const auto& w = s.at(t * m);
            return SectionSpace<F>(w.ambient_dim(), m, w.basis());
        },
        std::move(body), s.restriction());
}

/// First pair (a, b) with a + b <= M and W_a · W_b ⊄ W_{a+b}, if any.
template <class F>
std::optional<std::pair<long, long>> multiplicativity_violation(const GradedSeries<F>& s, long max_degree)
{
    for (long a = 1; a <= max_degree; ++a)
        for (long b = a; a + b <= max_degree; ++b)
        {
            const auto& target = s.at(a + b);
            for (const auto& x : s.at(a).basis())
                for (const auto& y : s.at(b).basis())
                    if (!target.contains(x * y))
                        return std::pair{a, b};
        }
    return std::nullopt;
}

struct StableBaseLocus
{
    CoordinateFlatSet locus;
    long stabilization_degree = 1;
    /// The final value was observed at some degree after the stabilization degree.
    bool confirmed = false;
};

/// ∩_{1 <= m <= M} Bs(W_m) with the least degree from which the running
/// intersection no longer changes.
template <class F>
StableBaseLocus stable_base_locus(const GradedSeries<F>& s, long max_degree)
{
    if (max_degree < 1)
        throw SeriesError("stable base locus: degree bound must be positive");
    StableBaseLocus out{CoordinateFlatSet::whole(), 1, false};
    for (long m = 1; m <= max_degree; ++m)
    {
        CoordinateFlatSet next = intersect(out.locus, base_locus(s.at(m)));
        if (m == 1 || !(next == out.locus))
            out.stabilization_degree = m;
        out.locus = std::move(next);
    }
    out.confirmed = out.stabilization_degree < max_degree;
    return out;
}

} // namespace okounkov::series
