#pragma once

#include <optional>

#include "okounkov/rational.hpp"

namespace okounkov::geom {

/// c^(1/d) when it is rational, for c >= 0.
inline std::optional<Rational> exact_root(const Rational& c, unsigned d)
{
    if (c < 0)
        return std::nullopt;
    Integer rn, rd;
    const int num_exact = mpz_root(rn.get_mpz_t(), c.get_num_mpz_t(), d);
    const int den_exact = mpz_root(rd.get_mpz_t(), c.get_den_mpz_t(), d);
    if (!num_exact || !den_exact)
        return std::nullopt;
    return make_rational(rn, rd);
}

/// Dyadic bounds lo <= c^(1/d) < lo + 2^-bits.
inline std::pair<Rational, Rational> root_bounds(const Rational& c, unsigned d, unsigned bits)
{
    Integer scaled = c.get_num() << (d * bits);
    scaled /= c.get_den();   // floor, c >= 0
    Integer r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), d);
    const Integer unit = Integer(1) << bits;
    return {make_rational(r, unit), make_rational(r + 1, unit)};
}

/// Sign of A^(1/d) - a^(1/d) - b^(1/d) for nonnegative rationals, decided exactly.
///
/// When no ratio among A, a, b is a rational d-th power the three real roots
/// are linearly independent over Q (Besicovitch / Mordell), so the difference
/// is nonzero and dyadic refinement terminates. The dependent cases collapse
/// to a rational comparison.
inline int compare_root_sum(const Rational& big, const Rational& a, const Rational& b, unsigned d)
{
    if (big < 0 || a < 0 || b < 0)
        throw GeometryError("compare_root_sum: negative argument");
    if (d == 1)
    {
        Rational diff = big - a - b;
        return sgn(diff);
    }
    if (a == 0)
        return sgn(Rational(big - b));
    if (b == 0)
        return sgn(Rational(big - a));
    if (big == 0)
        return -1;

    auto compare_scaled = [&](const Rational& factor, const Rational& lhs, const Rational& rhs) {
        // sign of factor * lhs^(1/d) - rhs^(1/d), factor rational
        if (factor <= 0)
            return factor == 0 && rhs == 0 ? 0 : -1;
        return sgn(Rational(pow(factor, d) * lhs - rhs));
    };
    if (auto r = exact_root(a / big, d))
        return compare_scaled(Rational(1 - *r), big, b);
    if (auto r = exact_root(b / big, d))
        return compare_scaled(Rational(1 - *r), big, a);
    if (auto r = exact_root(a / b, d))
        return sgn(Rational(big - pow(Rational(1 + *r), d) * b));

    for (unsigned bits = 32; bits <= (1u << 16); bits *= 2)
    {
        auto [big_lo, big_hi] = root_bounds(big, d, bits);
        auto [a_lo, a_hi] = root_bounds(a, d, bits);
        auto [b_lo, b_hi] = root_bounds(b, d, bits);
        if (big_lo - a_hi - b_hi > 0)
            return 1;
        if (big_hi - a_lo - b_lo < 0)
            return -1;
    }
    throw GeometryError("compare_root_sum: refinement did not separate");
}

/// vol(P+Q)^(1/d) >= vol(P)^(1/d) + vol(Q)^(1/d), decided without floating point.
inline bool brunn_minkowski_holds(const Rational& vol_sum, const Rational& vol_p, const Rational& vol_q,
                                  unsigned d)
{
    return compare_root_sum(vol_sum, vol_p, vol_q, d) >= 0;
}

} // namespace okounkov::geom
