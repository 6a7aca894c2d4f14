#pragma once

#include <algorithm>
#include <cstdint>
#include <gmpxx.h>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace okounkov {

/// Exact rational over arbitrary-precision integers. Always canonical
/// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// A point or direction with exact rational coordinates.
using RatVec = std::vector<Rational>;

/// Integer exponent vector of a (Laurent) monomial.
using Exponent = std::vector<std::int64_t>;

class GeometryError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer floor(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer ceil(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rational pow(const Rational& base, unsigned exp)
{
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i)
        out *= base;
    return out;
}

inline Integer factorial(unsigned n)
{
    Integer out(1);
    for (unsigned i = 2; i <= n; ++i)
        out *= i;
    return out;
}

/// Canonical textual form: "p/q" reduced, sign on the numerator, "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline RatVec to_ratvec(const Exponent& e)
{
    RatVec out;
    out.reserve(e.size());
    for (auto v : e)
        out.emplace_back(static_cast<long>(v));
    return out;
}

inline RatVec add(const RatVec& a, const RatVec& b)
{
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

inline RatVec sub(const RatVec& a, const RatVec& b)
{
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline RatVec mul(const Rational& t, const RatVec& a)
{
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = t * a[i];
    return out;
}

inline Rational dot(const RatVec& a, const RatVec& b)
{
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RatVec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline bool is_integral(const RatVec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return is_integral(x); });
}

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector is returned unchanged.
inline std::vector<Integer> primitive_integer(const RatVec& v)
{
    Integer l(1);
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g(0);
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

inline RatVec normalize_ray(const RatVec& v)
{
    auto p = primitive_integer(v);
    RatVec out;
    out.reserve(p.size());
    for (auto& x : p)
        out.emplace_back(x);
    return out;
}

/// Lexicographic order on rational vectors, used for canonical vertex order.
inline bool lex_less(const RatVec& a, const RatVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string to_string(const RatVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

inline std::string to_string(const Exponent& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace okounkov
