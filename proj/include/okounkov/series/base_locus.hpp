#pragma once

#include <set>

#include "okounkov/series/space.hpp"

namespace okounkov::series {

/// Closed subset of the chart given as a finite union of coordinate flats
/// V(x_i : i in T). Only the inclusion-minimal index sets T are stored, so an
/// empty collection is the empty set and {∅} is the whole chart.
class CoordinateFlatSet
{
public:
    using Flat = std::set<std::size_t>;

    CoordinateFlatSet() = default;
    explicit CoordinateFlatSet(std::set<Flat> flats) : flats_(std::move(flats)) { minimize(); }

    static CoordinateFlatSet empty() { return {}; }
    static CoordinateFlatSet whole() { return CoordinateFlatSet({Flat{}}); }

    const std::set<Flat>& flats() const { return flats_; }
    bool is_empty() const { return flats_.empty(); }
    bool is_whole() const { return flats_.count(Flat{}) > 0; }

    /// Whether the locus contains V(T).
    bool contains_flat(const Flat& t) const
    {
        return std::any_of(flats_.begin(), flats_.end(),
                           [&](const Flat& a) { return std::includes(t.begin(), t.end(), a.begin(), a.end()); });
    }

    /// Whether `other` ⊆ this as subsets of the chart.
    bool contains(const CoordinateFlatSet& other) const
    {
        return std::all_of(other.flats_.begin(), other.flats_.end(), [&](const Flat& t) { return contains_flat(t); });
    }

    friend CoordinateFlatSet intersect(const CoordinateFlatSet& a, const CoordinateFlatSet& b)
    {
        std::set<Flat> out;
        for (const auto& s : a.flats_)
            for (const auto& t : b.flats_)
            {
                Flat u = s;
                u.insert(t.begin(), t.end());
                out.insert(std::move(u));
            }
        return CoordinateFlatSet(std::move(out));
    }

    friend bool operator==(const CoordinateFlatSet&, const CoordinateFlatSet&) = default;

private:
    void minimize()
    {
        std::set<Flat> keep;
        for (const auto& t : flats_)
        {
            bool redundant = std::any_of(flats_.begin(), flats_.end(), [&](const Flat& s) {
                return s != t && std::includes(t.begin(), t.end(), s.begin(), s.end());
            });
            if (!redundant)
                keep.insert(t);
        }
        flats_ = std::move(keep);
    }

    std::set<Flat> flats_;
};

/// Common zero locus in the chart of a monomial space: the minimal hitting
/// sets of the monomial supports.
template <class F>
CoordinateFlatSet base_locus(const SectionSpace<F>& space)
{
    if (!space.is_monomial())
        throw SeriesError("base locus supported only for monomial series");
    std::set<CoordinateFlatSet::Flat> supports;
    for (const auto& b : space.basis())
    {
        const Exponent& e = b.terms().begin()->first;
        CoordinateFlatSet::Flat s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                s.insert(i);
        supports.insert(std::move(s));
    }
    std::set<CoordinateFlatSet::Flat> hitting{{}};
    for (const auto& s : supports)
    {
        std::set<CoordinateFlatSet::Flat> next;
        for (const auto& t : hitting)
        {
            if (std::any_of(s.begin(), s.end(), [&](std::size_t i) { return t.count(i) > 0; }))
            {
                next.insert(t);
                continue;
            }
            for (auto i : s)
            {
                auto u = t;
                u.insert(i);
                next.insert(std::move(u));
            }
        }
        hitting = CoordinateFlatSet(std::move(next)).flats();
    }
    return CoordinateFlatSet(std::move(hitting));
}

} // namespace okounkov::series
