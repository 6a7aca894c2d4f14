#pragma once

#include "okounkov/adelic/sections.hpp"

namespace fixtures {

using namespace okounkov;
using namespace okounkov::adelic;

inline ModelDivisor div(std::initializer_list<Rational> xs) { return ModelDivisor{RatVec(xs)}; }

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

// P¹ with chart ray e and boundary ray -e (the point at infinity).
inline ToricFrame p1_frame() { return ToricFrame({{1}, {-1}}, {1}); }
inline BoundaryDivisor p1_boundary() { return BoundaryDivisor(p1_frame(), div({0, 1})); }

// D_j = (1 - 2^-j)[∞], q_j = 2^-j, limit [∞]
inline ToricAdelicDivisor interval_divisor()
{
    return ToricAdelicDivisor::closed_form(p1_frame(), p1_boundary(), {{0, 0, q(1, 2)}, {1, 1, q(1, 2)}}, 1, q(1, 2));
}

inline ToricAdelicDivisor constant_p1(const Rational& a)
{
    return ToricAdelicDivisor::constant(p1_frame(), p1_boundary(), div({0, a}));
}

inline ToricFrame p2_frame() { return ToricFrame({{1, 0}, {0, 1}, {-1, -1}}, {2}); }
inline BoundaryDivisor p2_boundary() { return BoundaryDivisor(p2_frame(), div({0, 0, 1})); }
inline ToricAdelicDivisor p2_o1() { return ToricAdelicDivisor::constant(p2_frame(), p2_boundary(), div({0, 0, 1})); }

inline ToricFrame p1p1_frame() { return ToricFrame({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {2, 3}); }
inline BoundaryDivisor p1p1_boundary() { return BoundaryDivisor(p1p1_frame(), div({0, 0, 1, 1})); }

// limit square [0,1]², each side shrunk by 2^-j at stage j
inline ToricAdelicDivisor square_divisor()
{
    return ToricAdelicDivisor::closed_form(p1p1_frame(), p1p1_boundary(),
                                           {{0, 0, q(1, 2)}, {0, 0, q(1, 2)}, {1, 1, q(1, 2)}, {1, 1, q(1, 2)}}, 1,
                                           q(1, 2));
}

inline RatVec rv(std::initializer_list<long> xs)
{
    RatVec out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

inline geom::RatPolytope segment(const Rational& lo, const Rational& hi)
{
    return geom::convex_hull({RatVec{lo}, RatVec{hi}});
}

} // namespace fixtures
