#ifndef GMSET_SIGNS_HPP
#define GMSET_SIGNS_HPP

/**
 * @file signs.hpp
 * @brief Conjoint sign functions and the generalized Kronecker delta.
 *
 * For a sample pair (x, y) with s_x = sign(x), s_y = sign(y):
 *
 *   s_p  = |s_x + s_y|        s_hp = |s_x + s_y| / 2
 *   s_m  = |s_x - s_y|        s_hm = |s_x - s_y| / 2
 *   s_xy = s_x s_y
 *
 * s_hp gates same-sign pairs, s_hm gates opposite-sign pairs, and
 * s_xy = s_hp - s_hm holds for every input. All values are small dyadic
 * rationals, so the identities hold exactly in binary floating point.
 */

#include <cmath>
#include <concepts>
#include <cstdlib>

#include "signal.hpp"

namespace gmset {

/// -1, 0 or +1. Negative zero maps to 0. Throws on NaN/inf.
template <std::floating_point T>
int sign(T x)
{
    detail::require_finite(x, "sign");
    return (x > T(0)) - (x < T(0));
}

template <std::floating_point T>
struct BasicSignTuple {
    T s_p;
    T s_m;
    T s_hp;
    T s_hm;
    T s_xy;

    friend bool operator==(const BasicSignTuple&, const BasicSignTuple&) = default;
};

using SignTuple = BasicSignTuple<double>;

template <std::floating_point T>
BasicSignTuple<T> conjoint_signs(T x, T y)
{
    const int sx = sign(x);
    const int sy = sign(y);
    const int p = std::abs(sx + sy);
    const int m = std::abs(sx - sy);
    return BasicSignTuple<T>{T(p), T(m), T(p) / T(2), T(m) / T(2), T(sx * sy)};
}

/**
 * Generalized Kronecker delta: +1 on the crest x = y, -1 on the anti-crest
 * x = -y (both nonzero), 0 at the origin and 0 everywhere off the crests.
 */
template <std::floating_point T>
int gen_kronecker(T x, T y)
{
    detail::require_finite(x, "gen_kronecker");
    detail::require_finite(y, "gen_kronecker");
    if (x == T(0) && y == T(0)) {
        return 0;
    }
    if (x == y) {
        return 1;
    }
    if (x == -y) {
        return -1;
    }
    return 0;
}

} // namespace gmset

#endif // GMSET_SIGNS_HPP
