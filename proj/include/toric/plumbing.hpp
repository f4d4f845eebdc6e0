#ifndef TORIC_PLUMBING_HPP
#define TORIC_PLUMBING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "toric/classify.hpp"
#include "toric/cone.hpp"

namespace toric {

/**
 * A linear plumbing of disk bundles over spheres, given by the chain of
 * self-intersection numbers (s_1,...,s_n). At least one entry must be
 * non-negative for the concave boundary construction to apply.
 */
struct Plumbing {
    std::vector<Int> chain;

    friend bool operator==(const Plumbing&, const Plumbing&) = default;
};

/**
 * One L-shape piece of the decomposed moment image, labelled by a pair
 * (a,b) with a >= 0 or b >= 0; its rays are (-1,a) and (b,-1).
 */
struct LShape {
    Int a;
    Int b;

    friend bool operator==(const LShape&, const LShape&) = default;
};

inline Plumbing validate(const std::vector<Int>& chain)
{
    if (chain.size() < 2)
        throw ToricError(ErrorCode::TooShort,
                         "plumbing chain needs at least two spheres");
    bool has_pivot = false;
    for (const Int& s : chain)
        if (s >= 0)
            has_pivot = true;
    if (!has_pivot)
        throw ToricError(ErrorCode::NoPivot,
                         "chain has no non-negative self-intersection number");
    return Plumbing{chain};
}

/**
 * Decompose with a forced pivot pair index i (1-based, pairing s_i with
 * s_{i+1}); exposed for the pivot-independence checks.
 */
inline std::vector<LShape> decompose_with_pivot(const Plumbing& p, std::size_t i)
{
    const auto& s = p.chain;
    std::size_t n = s.size();
    if (i < 1 || i >= n)
        throw ToricError(ErrorCode::BadInput, "pivot index out of range");
    if (s[i - 1] < 0 && s[i] < 0)
        throw ToricError(ErrorCode::NoPivot, "pivot pair has no non-negative entry");
    std::vector<LShape> pieces;
    pieces.reserve(n - 1);
    for (std::size_t j = 1; j < i; ++j)
        pieces.push_back(LShape{s[j - 1], 0});
    pieces.push_back(LShape{s[i - 1], s[i]});
    for (std::size_t j = i + 1; j < n; ++j)
        pieces.push_back(LShape{0, s[j]});
    return pieces;
}

/**
 * Decompose the chain into the n-1 L-shapes
 * (s_1,0),...,(s_{i-1},0),(s_i,s_{i+1}),(0,s_{i+2}),...,(0,s_n), with the
 * pivot i the smallest index carrying a non-negative entry (pulled back to
 * n-1 when it falls on the last sphere, since the pivot labels a pair).
 */
inline std::vector<LShape> decompose(const Plumbing& p)
{
    const auto& s = p.chain;
    std::size_t n = s.size();
    std::size_t pivot = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (s[j] >= 0) {
            pivot = j + 1;
            break;
        }
    if (pivot == 0)
        throw ToricError(ErrorCode::NoPivot, "no non-negative entry");
    if (pivot == n)
        pivot = n - 1;
    return decompose_with_pivot(p, pivot);
}

/// The gluing matrix A_j with rows (-s,-1),(1,0).
inline UnimodularMap gluing_matrix(const Int& s)
{
    return UnimodularMap{-s, -1, 1, 0};
}

/**
 * The n boundary rays of the glued moment image, in order: the first ray of
 * the first L-shape, then each piece's second ray pushed through the
 * accumulated gluing matrices. Consecutive pieces share a ray, so the fan
 * has exactly n entries; the first is (-1,s_1) and the last is
 * A_2...A_{n-1}(s_n,-1).
 */
inline std::vector<Direction> fan_rays(const Plumbing& p)
{
    auto pieces = decompose(p);
    std::vector<Direction> rays;
    rays.reserve(pieces.size() + 1);
    UnimodularMap t = identity_map();
    rays.push_back(Direction{-1, pieces[0].a});
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j > 0)
            t = compose(t, gluing_matrix(p.chain[j]));
        rays.push_back(apply(t, Direction{pieces[j].b, Int(-1)}));
    }
    return rays;
}

/**
 * Moment cone of the concave boundary. The rays are the first and last fan
 * rays; the total angle is accumulated piece by piece along the fan (each
 * step turns by an angle in (0,2pi)), because the ray pair alone cannot see
 * multiples of 2pi.
 */
inline MomentCone cone_of_plumbing(const Plumbing& p)
{
    auto rays = fan_rays(p);
    ExactAngle total = angle_between(rays[0], rays[1]);
    for (std::size_t j = 2; j < rays.size(); ++j)
        total = angle_add(total, angle_between(rays[j - 1], rays[j]));
    return MomentCone{rays.front(), rays.back(), total.winding};
}

/**
 * Expansion of k/l as s_1 - 1/(s_2 - 1/(... - 1/s_n)) with s_1 >= 0 and
 * s_j <= -2 for j >= 2. The l = 1 case emits (k-1,-1) so the output is
 * always a valid chain of length >= 2.
 */
inline std::vector<Int> continued_fraction_expand(const Int& k, const Int& l)
{
    if (k < 1 || l < 1 || boost::multiprecision::gcd(k, l) != 1)
        throw ToricError(ErrorCode::BadInput,
                         "need k >= 1, l >= 1 and gcd(k,l) = 1");
    if (l == 1)
        return {k - 1, Int(-1)};
    std::vector<Int> chain;
    chain.push_back(k / l);
    // invariant: the remaining tail equals num/den with 0 < den < num
    Int num = l;
    Int den = k % l;
    while (true) {
        if (num % den == 0) {
            chain.push_back(-num / den);
            break;
        }
        chain.push_back(-(num / den) - 1);
        Int next_den = den - num % den;
        num = den;
        den = next_den;
    }
    return chain;
}

inline Rational continued_fraction_eval(const std::vector<Int>& chain)
{
    if (chain.empty())
        throw ToricError(ErrorCode::BadInput, "empty chain");
    Rational value = chain.back();
    for (std::size_t j = chain.size() - 1; j-- > 0;) {
        if (value == 0)
            throw ToricError(ErrorCode::DivisionByZero,
                             "continued-fraction tail evaluates to 0");
        value = Rational(chain[j]) - 1 / value;
    }
    return value;
}

/**
 * Inverse of cone_of_plumbing up to toric equivalence: strip half-turns
 * until the remaining angle lies in (0,pi], realize the stripped cone as a
 * base plumbing ((0,0,0) at pi, (0,0) at pi/2, continued fraction below),
 * then append two zeros per stripped half-turn.
 */
inline Plumbing plumbing_of_cone(const MomentCone& c)
{
    check_cone(c);
    FracCategory cat = frac_category(c);
    Int m; // number of half-turns stripped
    switch (cat) {
        case FracCategory::Acute:
        case FracCategory::Pi:
            m = 2 * c.winding;
            break;
        case FracCategory::Zero:
            m = 2 * c.winding - 1; // winding >= 1 here, else degenerate
            break;
        case FracCategory::Reflex:
        default:
            m = 2 * c.winding + 1;
            break;
    }
    Direction d0 = (m % 2 == 0) ? c.r2 : -c.r2;

    std::vector<Int> base;
    if (d0 == -c.r1) {
        base = {Int(0), Int(0), Int(0)}; // stripped angle is exactly pi
    } else {
        // stripped angle in (0,pi); shear reduction puts it in (0,pi/2]
        MomentCone canon = normalize(MomentCone{c.r1, d0, 0}).first;
        Int l = canon.r2.x;
        Int k = canon.r2.y;
        if (l == 0)
            base = {Int(0), Int(0)}; // second ray (0,1), quarter turn
        else
            base = continued_fraction_expand(k, l);
    }
    for (Int j = 0; j < 2 * m; ++j)
        base.push_back(0);
    return validate(base);
}

/**
 * Blow-up of the intersection point of spheres i and i+1 (1-based):
 * (...,s_i,s_{i+1},...) -> (...,s_i-1,-1,s_{i+1}-1,...). The boundary
 * classification is unchanged, but the move can destroy the pivot
 * condition, which is reported rather than silently accepted.
 */
inline Plumbing blow_up(const Plumbing& p, std::size_t i)
{
    std::size_t n = p.chain.size();
    if (i < 1 || i >= n)
        throw ToricError(ErrorCode::BadInput, "blow-up index out of range");
    std::vector<Int> chain = p.chain;
    chain[i - 1] -= 1;
    chain[i] -= 1;
    chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(i), Int(-1));
    return validate(chain);
}

} // namespace toric

#endif // TORIC_PLUMBING_HPP
