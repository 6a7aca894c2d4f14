#pragma once

#include <map>

#include "okounkov/series/section.hpp"

namespace okounkov::series {

template <class F>
class SectionSpace;

namespace detail {

// Echelon rows keyed by their leading exponent (original coordinates) under a flag.
template <class F>
class Echelon
{
public:
    explicit Echelon(Flag flag) : flag_(std::move(flag)) {}

    /// Reduces s against the stored rows; returns the nonzero remainder if any.
    std::optional<LaurentSection<F>> reduce(LaurentSection<F> s) const
    {
        while (!s.is_zero())
        {
            const Exponent lead = leading_term(s, flag_);
            auto it = rows_.find(flag_.coordinates(lead));
            if (it == rows_.end())
                return s;
            const LaurentSection<F>& row = it->second.section;
            s.axpy(F(-(s.coefficient(lead) / row.coefficient(it->second.lead))), row);
        }
        return std::nullopt;
    }

    /// Inserts s when independent of the stored rows. Returns whether it was.
    bool insert(const LaurentSection<F>& s)
    {
        auto r = reduce(s);
        if (!r)
            return false;
        Exponent lead = leading_term(*r, flag_);
        rows_.emplace(flag_.coordinates(lead), Row{std::move(*r), lead});
        return true;
    }

    std::size_t size() const { return rows_.size(); }

    /// Rows in increasing valuation order.
    std::vector<LaurentSection<F>> rows() const
    {
        std::vector<LaurentSection<F>> out;
        for (const auto& [v, row] : rows_)
            out.push_back(row.section);
        return out;
    }

    std::vector<Exponent> valuations() const
    {
        std::vector<Exponent> out;
        for (const auto& [v, row] : rows_)
            out.push_back(v);
        return out;
    }

private:
    struct Row
    {
        LaurentSection<F> section;
        Exponent lead;
    };
    struct LexLess
    {
        bool operator()(const Exponent& a, const Exponent& b) const { return lex_compare(a, b) < 0; }
    };

    Flag flag_;
    std::map<Exponent, Row, LexLess> rows_;
};

} // namespace detail

/// Finite-dimensional space of sections in degree m. The stored basis is the
/// independent subset of the given generators, kept in input order.
template <class F = Rational>
class SectionSpace
{
public:
    using Section = LaurentSection<F>;

    SectionSpace(std::size_t ambient_dim, long degree, const std::vector<Section>& generators = {})
        : d_(ambient_dim), degree_(degree)
    {
        detail::Echelon<F> ech(Flag::standard(d_));
        for (const auto& g : generators)
        {
            if (g.ambient_dim() != d_)
                throw SeriesError("section space: generator dimension mismatch");
            if (ech.insert(g))
                basis_.push_back(g);
        }
    }

    static SectionSpace monomials(std::size_t d, long degree, const std::vector<Exponent>& exps)
    {
        SectionSpace out(d, degree);
        for (const auto& e : exps)
            out.basis_.push_back(Section::monomial(e));
        std::sort(out.basis_.begin(), out.basis_.end(),
                  [](const Section& a, const Section& b) { return a.terms().begin()->first < b.terms().begin()->first; });
        auto dup = std::adjacent_find(out.basis_.begin(), out.basis_.end());
        if (dup != out.basis_.end())
            throw SeriesError("section space: repeated monomial");
        return out;
    }

    std::size_t ambient_dim() const { return d_; }
    long degree() const { return degree_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Section>& basis() const { return basis_; }

    bool is_monomial() const
    {
        return std::all_of(basis_.begin(), basis_.end(), [](const Section& s) { return s.is_monomial(); });
    }

    bool contains(const Section& s) const
    {
        detail::Echelon<F> ech(Flag::standard(d_));
        for (const auto& b : basis_)
            ech.insert(b);
        return !ech.reduce(s).has_value();
    }

    bool subspace_of(const SectionSpace& other) const
    {
        detail::Echelon<F> ech(Flag::standard(d_));
        for (const auto& b : other.basis_)
            ech.insert(b);
        return std::all_of(basis_.begin(), basis_.end(), [&](const Section& s) { return !ech.reduce(s); });
    }

    friend bool same_span(const SectionSpace& a, const SectionSpace& b)
    {
        return a.dim() == b.dim() && a.subspace_of(b);
    }

private:
    std::size_t d_;
    long degree_;
    std::vector<Section> basis_;
};

/// Echelon basis with pairwise distinct valuations under `flag`, sorted by
/// valuation. Pivots on lex-minimal exponents; ties broken by basis order.
template <class F>
SectionSpace<F> lex_echelon(const SectionSpace<F>& space, const Flag& flag)
{
    detail::Echelon<F> ech(flag);
    for (const auto& b : space.basis())
        ech.insert(b);
    return SectionSpace<F>(space.ambient_dim(), space.degree(), ech.rows());
}

/// The valuation image ν(W \ 0), sorted lexicographically.
template <class F>
std::vector<Exponent> leading_exponents(const SectionSpace<F>& space, const Flag& flag)
{
    if (space.is_monomial())
    {
        std::vector<Exponent> out;
        for (const auto& b : space.basis())
            out.push_back(valuation(b, flag));
        std::sort(out.begin(), out.end());
        return out;
    }
    detail::Echelon<F> ech(flag);
    for (const auto& b : space.basis())
        ech.insert(b);
    auto out = ech.valuations();
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
SectionSpace<F> tensor(const SectionSpace<F>& a, const SectionSpace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw SeriesError("tensor: dimension mismatch");
    std::vector<LaurentSection<F>> products;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            products.push_back(x * y);
    return lex_echelon(SectionSpace<F>(a.ambient_dim(), a.degree() + b.degree(), products),
                       Flag::standard(a.ambient_dim()));
}

/// Image under x_i = 0 for i in T. The ambient dimension is kept; the
/// surviving sections have zero exponent along T.
template <class F>
SectionSpace<F> restrict(const SectionSpace<F>& space, const std::vector<std::size_t>& t)
{
    for (auto i : t)
        if (i >= space.ambient_dim())
            throw SeriesError("restrict: coordinate out of range");
    std::vector<LaurentSection<F>> images;
    for (const auto& b : space.basis())
        images.push_back(b.restrict_to(t));
    return lex_echelon(SectionSpace<F>(space.ambient_dim(), space.degree(), images),
                       Flag::restricted(space.ambient_dim(), t));
}

} // namespace okounkov::series
