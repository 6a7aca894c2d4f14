#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov::series {

class SeriesError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Lexicographic comparison of exponent vectors.
inline std::strong_ordering lex_compare(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size())
        throw SeriesError("lex_compare: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

/// Admissible flag at the origin of the affine chart. Coordinates in `order`
/// are read in that sequence; coordinates in `mask` are set to zero (the flag
/// then lives inside the coordinate flat they cut out). All indices 0-based.
class Flag
{
public:
    Flag(std::size_t ambient_dim, std::vector<std::size_t> order, std::vector<std::size_t> mask = {})
        : d_(ambient_dim), order_(std::move(order)), mask_(std::move(mask))
    {
        std::vector<int> seen(d_, 0);
        for (auto i : order_)
        {
            if (i >= d_ || seen[i]++)
                throw SeriesError("flag: variable order is not a permutation of the surviving coordinates");
        }
        for (auto i : mask_)
        {
            if (i >= d_ || seen[i]++)
                throw SeriesError("flag: restriction mask overlaps the variable order");
        }
        if (order_.size() + mask_.size() != d_)
            throw SeriesError("flag: variable order is not a permutation of the surviving coordinates");
        std::sort(mask_.begin(), mask_.end());
    }

    static Flag standard(std::size_t d)
    {
        std::vector<std::size_t> order(d);
        std::iota(order.begin(), order.end(), 0);
        return Flag(d, std::move(order));
    }

    /// Standard order on the coordinates outside T.
    static Flag restricted(std::size_t d, const std::vector<std::size_t>& t)
    {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < d; ++i)
            if (std::find(t.begin(), t.end(), i) == t.end())
                order.push_back(i);
        return Flag(d, std::move(order), t);
    }

    std::size_t ambient_dim() const { return d_; }
    /// Length of valuation vectors.
    std::size_t dim() const { return order_.size(); }
    const std::vector<std::size_t>& order() const { return order_; }
    const std::vector<std::size_t>& mask() const { return mask_; }

    /// The exponent read in flag coordinates.
    Exponent coordinates(const Exponent& e) const
    {
        if (e.size() != d_)
            throw SeriesError("flag: exponent length mismatch");
        for (auto i : mask_)
            if (e[i] != 0)
                throw SeriesError("flag: section not supported on the flag's flat");
        Exponent out(order_.size());
        for (std::size_t k = 0; k < order_.size(); ++k)
        {
            out[k] = e[order_[k]];
            if (out[k] < 0)
                throw SeriesError("flag: negative exponent at the flag point");
        }
        return out;
    }

private:
    std::size_t d_;
    std::vector<std::size_t> order_, mask_;
};

/// Finite Laurent polynomial with coefficients in F; zero coefficients are never stored.
template <class F = Rational>
class LaurentSection
{
public:
    using Coefficient = F;

    explicit LaurentSection(std::size_t d = 0) : d_(d) {}

    static LaurentSection monomial(Exponent e, F c = F(1))
    {
        LaurentSection s(e.size());
        s.add_term(std::move(e), c);
        return s;
    }

    std::size_t ambient_dim() const { return d_; }
    const std::map<Exponent, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    F coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(Exponent e, const F& c)
    {
        if (e.size() != d_)
            throw SeriesError("section: exponent length mismatch");
        auto [it, fresh] = terms_.try_emplace(std::move(e), c);
        if (!fresh)
            it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    /// this += c * other
    void axpy(const F& c, const LaurentSection& other)
    {
        for (const auto& [e, v] : other.terms_)
            add_term(e, F(c * v));
    }

    friend LaurentSection operator+(LaurentSection a, const LaurentSection& b)
    {
        a.axpy(F(1), b);
        return a;
    }
    friend LaurentSection operator-(LaurentSection a, const LaurentSection& b)
    {
        a.axpy(F(-1), b);
        return a;
    }
    friend LaurentSection operator*(const F& c, const LaurentSection& a)
    {
        LaurentSection out(a.d_);
        out.axpy(c, a);
        return out;
    }
    friend LaurentSection operator*(const LaurentSection& a, const LaurentSection& b)
    {
        if (a.d_ != b.d_)
            throw SeriesError("section product: dimension mismatch");
        LaurentSection out(a.d_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
            {
                Exponent e(a.d_);
                for (std::size_t i = 0; i < a.d_; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), F(ca * cb));
            }
        return out;
    }
    friend bool operator==(const LaurentSection& a, const LaurentSection& b)
    {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    /// Substitutes x_i = 0 for i in T (chart exponents are nonnegative).
    LaurentSection restrict_to(const std::vector<std::size_t>& t) const
    {
        LaurentSection out(d_);
        for (const auto& [e, c] : terms_)
            if (std::all_of(t.begin(), t.end(), [&](std::size_t i) { return e[i] == 0; }))
                out.terms_.emplace(e, c);
        return out;
    }

private:
    std::size_t d_;
    std::map<Exponent, F> terms_;
};

namespace detail {

template <class F>
const Exponent& leading_term(const LaurentSection<F>& s, const Flag& flag)
{
    if (s.is_zero())
        throw SeriesError("valuation of zero undefined");
    const Exponent* best = nullptr;
    Exponent best_key;
    for (const auto& [e, c] : s.terms())
    {
        Exponent key = flag.coordinates(e);
        if (!best || lex_compare(key, best_key) < 0)
        {
            best = &e;
            best_key = std::move(key);
        }
    }
    return *best;
}

} // namespace detail

/// ν: lex-minimal exponent among the terms, read in flag coordinates.
template <class F>
Exponent valuation(const LaurentSection<F>& s, const Flag& flag)
{
    return flag.coordinates(detail::leading_term(s, flag));
}

} // namespace okounkov::series
