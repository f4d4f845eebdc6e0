#ifndef TORIC_CONE_HPP
#define TORIC_CONE_HPP

#include <tuple>
#include <utility>

#include "toric/exact_angle.hpp"

namespace toric {

/**
 * Moment cone of a contact toric 3-manifold with non-free action: an ordered
 * pair of primitive rays plus the number of full turns contained in the
 * angle difference between them. The total angle is
 * delta = 2pi*winding + (arg r2 - arg r1 mod 2pi) and must be positive.
 */
struct MomentCone {
    Direction r1;
    Direction r2;
    Int winding; // >= 0

    friend bool operator==(const MomentCone&, const MomentCone&) = default;
};

/// An element of SL(2,Z), rows (a,b) and (c,d).
struct UnimodularMap {
    Int a, b;
    Int c, d;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

inline UnimodularMap identity_map()
{
    return UnimodularMap{1, 0, 0, 1};
}

inline Int det(const UnimodularMap& m)
{
    return m.a * m.d - m.b * m.c;
}

inline Direction apply(const UnimodularMap& m, const Direction& v)
{
    return direction_reduce(m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y);
}

inline UnimodularMap compose(const UnimodularMap& m, const UnimodularMap& n)
{
    return UnimodularMap{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                         m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline void check_cone(const MomentCone& c)
{
    if (c.winding == 0 && c.r1 == c.r2)
        throw ToricError(ErrorCode::DegenerateCone,
                         "cone has zero total angle (winding 0, equal rays)");
}

/// Total angle delta = t2 - t1 of the cone.
inline ExactAngle delta(const MomentCone& c)
{
    check_cone(c);
    return ExactAngle{angle_between(c.r1, c.r2).dir, c.winding};
}

/**
 * SL(2,Z) action on cones. Orientation-preserving maps lift to maps of the
 * universal cover commuting with full turns, so the winding is untouched.
 */
inline MomentCone apply(const UnimodularMap& m, const MomentCone& c)
{
    if (det(m) != 1)
        throw ToricError(ErrorCode::NotUnimodular, "determinant must be +1");
    return MomentCone{apply(m, c.r1), apply(m, c.r2), c.winding};
}

/**
 * Canonical form under the SL(2,Z) action, with a witness map.
 *
 * The first ray is sent to (1,0) by an extended-gcd rotation; the residual
 * shear freedom (the full stabilizer of the ray (1,0)) is then spent putting
 * the second ray (l,k) into the window 0 <= l < |k|, or into {(1,0),(-1,0)}
 * when k = 0. Two cones are SL(2,Z)-equivalent iff their canonical forms are
 * identical.
 */
inline std::pair<MomentCone, UnimodularMap> normalize(const MomentCone& c)
{
    check_cone(c);
    // rotation part: rows (a,b),(-q,p) with a*p + b*q = 1 for r1 = (p,q)
    Int p = c.r1.x, q = c.r1.y;
    Int a, b;
    {
        // extended gcd of (p,q); gcd is 1 since r1 is primitive
        Int old_r = p, r = q;
        Int old_s = 1, s = 0;
        Int old_t = 0, t = 1;
        while (r != 0) {
            Int quot = old_r / r; // truncated division is fine here
            std::tie(old_r, r) = std::make_tuple(r, Int(old_r - quot * r));
            std::tie(old_s, s) = std::make_tuple(s, Int(old_s - quot * s));
            std::tie(old_t, t) = std::make_tuple(t, Int(old_t - quot * t));
        }
        if (old_r < 0) {
            old_s = -old_s;
            old_t = -old_t;
        }
        a = old_s;
        b = old_t;
    }
    UnimodularMap m{a, b, -q, p};
    Direction r2 = apply(m, c.r2);
    if (r2.y != 0) {
        Int k = r2.y;
        Int absk = boost::multiprecision::abs(k);
        Int l = r2.x % absk;
        if (l < 0)
            l += absk;
        Int t = (l - r2.x) / k;
        m = compose(UnimodularMap{1, t, 0, 1}, m);
        r2 = Direction{l, k};
    }
    MomentCone canon{Direction{1, 0}, r2, c.winding};
    return {canon, m};
}

/// Half-Lutz twist: adds pi to the total angle.
inline MomentCone half_lutz(const MomentCone& c)
{
    check_cone(c);
    ExactAngle frac = angle_between(c.r1, c.r2);
    Int winding = c.winding;
    if (quadrant(frac.dir) >= 2) // fractional part already in [pi,2pi)
        winding += 1;
    return MomentCone{c.r1, -c.r2, winding};
}

/// Full Lutz twist: adds 2pi to the total angle.
inline MomentCone full_lutz(const MomentCone& c)
{
    check_cone(c);
    return MomentCone{c.r1, c.r2, c.winding + 1};
}

inline bool toric_equivalent(const MomentCone& c1, const MomentCone& c2)
{
    return normalize(c1).first == normalize(c2).first;
}

} // namespace toric

#endif // TORIC_CONE_HPP
