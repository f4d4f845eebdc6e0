#ifndef TORIC_EXACT_ANGLE_HPP
#define TORIC_EXACT_ANGLE_HPP

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/error.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * A primitive nonzero integer vector, standing in for an angle in [0,2pi)
 * whose tangent is rational. Coordinates are arbitrary precision: repeated
 * Gaussian products on long chains overflow 64-bit integers.
 */
struct Direction {
    Int x;
    Int y;

    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Negation reverses the ray (adds pi to the argument).
inline Direction operator-(const Direction& d)
{
    return Direction{-d.x, -d.y};
}

inline Direction direction_reduce(const Int& x, const Int& y)
{
    if (x == 0 && y == 0)
        throw ToricError(ErrorCode::ZeroVector, "direction (0,0) has no argument");
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                       boost::multiprecision::abs(y));
    return Direction{x / g, y / g};
}

/**
 * Quadrant index of arg(d) in [0,2pi), with each axis ray opening its
 * quadrant counterclockwise: arg(1,0)=0 lies in quadrant 0, arg(0,1)=pi/2
 * in quadrant 1, arg(-1,0)=pi in quadrant 2, arg(0,-1)=3pi/2 in quadrant 3.
 */
inline int quadrant(const Direction& d)
{
    if (d.x > 0 && d.y >= 0) return 0;
    if (d.x <= 0 && d.y > 0) return 1;
    if (d.x < 0 && d.y <= 0) return 2;
    return 3;
}

inline Int cross(const Direction& u, const Direction& v)
{
    return u.x * v.y - u.y * v.x;
}

/// Compare arg(u) vs arg(v) in [0,2pi): quadrant first, cross product within.
inline std::strong_ordering arg_compare(const Direction& u, const Direction& v)
{
    int qu = quadrant(u);
    int qv = quadrant(v);
    if (qu != qv)
        return qu <=> qv;
    Int c = cross(u, v);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/**
 * An element of the universal cover of the circle at rational-slope points:
 * the real angle 2pi*winding + arg(dir) with arg in [0,2pi).
 */
struct ExactAngle {
    Direction dir;
    Int winding; // >= 0

    friend bool operator==(const ExactAngle&, const ExactAngle&) = default;
};

/**
 * arg(v) - arg(u) mod 2pi, computed as the Gaussian-integer product
 * v * conj(u), re-reduced to primitive. Returns ((1,0),0) when u and v are
 * parallel with the same orientation.
 */
inline ExactAngle angle_between(const Direction& u, const Direction& v)
{
    Int x = v.x * u.x + v.y * u.y;
    Int y = v.y * u.x - v.x * u.y;
    return ExactAngle{direction_reduce(x, y), 0};
}

/**
 * Addition of angles via Gaussian-integer multiplication of the directions;
 * a carry into the winding occurs exactly when arg(a) + arg(b) wraps past
 * 2pi, detected by comparing the product's argument against arg(a).
 */
inline ExactAngle angle_add(const ExactAngle& a, const ExactAngle& b)
{
    Int x = a.dir.x * b.dir.x - a.dir.y * b.dir.y;
    Int y = a.dir.x * b.dir.y + a.dir.y * b.dir.x;
    Direction dir = direction_reduce(x, y);
    Int winding = a.winding + b.winding;
    // arg(b) = 0 never carries, even though the product equals a.dir.
    bool b_is_zero_angle = (b.dir.x > 0 && b.dir.y == 0);
    if (!b_is_zero_angle && arg_compare(dir, a.dir) == std::strong_ordering::less)
        winding += 1;
    return ExactAngle{dir, winding};
}

inline std::strong_ordering angle_compare(const ExactAngle& a, const ExactAngle& b)
{
    if (a.winding != b.winding)
        return a.winding < b.winding ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    return arg_compare(a.dir, b.dir);
}

} // namespace toric

#endif // TORIC_EXACT_ANGLE_HPP
