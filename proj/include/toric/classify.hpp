#ifndef TORIC_CLASSIFY_HPP
#define TORIC_CLASSIFY_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/**
 * Canonical label of the underlying lens space L(k,l):
 * k = 0 means S^1 x S^2 (l = 1), k = 1 means S^3 (l = 0), and for k >= 2
 * l is the minimum of the 4-element orbit {l, k-l, l^-1, k-l^-1} mod k.
 */
struct LensLabel {
    Int k;
    Int l;

    friend bool operator==(const LensLabel&, const LensLabel&) = default;
};

enum class ContactClass {
    Tight,
    OvertwistedFull, // xi_1: full-Lutz class
    OvertwistedHalf, // xi_2: half-Lutz class
};

struct ClassificationResult {
    LensLabel lens;
    ContactClass contact;
    std::vector<Int> h1; // nontrivial invariant factors, 0 encodes Z

    friend bool operator==(const ClassificationResult&,
                           const ClassificationResult&) = default;
};

// ---------------------------------------------------------------------------
// Smith normal form

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
    IntMatrix u; // unimodular, rows
    IntMatrix d; // diagonal, d1 | d2 | ..., di >= 0
    IntMatrix v; // unimodular, columns
};

inline IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    r[i][j] += a[i][t] * b[t][j];
    return r;
}

/**
 * Smith normal form by elementary row/column reduction with
 * smallest-nonzero-pivot selection. Maintains D = U * A * V throughout;
 * U and V are products of elementary matrices, hence det +-1.
 */
inline SmithResult smith_normal_form(const IntMatrix& a)
{
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix d = a;
    IntMatrix u = identity_matrix(rows);
    IntMatrix v = identity_matrix(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& e : d[i]) e = -e;
        for (auto& e : u[i]) e = -e;
    };

    std::size_t t = 0;
    std::size_t bound = std::min(rows, cols);
    while (t < bound) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d[i][j] != 0 &&
                    (best == 0 || boost::multiprecision::abs(d[i][j]) <
                                      boost::multiprecision::abs(best))) {
                    best = d[i][j];
                    pi = i;
                    pj = j;
                }
        if (best == 0)
            break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (d[i][t] != 0) {
                Int q = d[i][t] / d[t][t];
                add_row(i, t, -q);
                if (d[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (d[t][j] != 0) {
                Int q = d[t][j] / d[t][t];
                add_col(j, t, -q);
                if (d[t][j] != 0) clean = false;
            }
        if (!clean)
            continue; // remainders left behind: pick a smaller pivot

        // enforce divisibility: fold a bad entry into the pivot row
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols && divisible; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    add_row(t, i, 1);
                    divisible = false;
                }
        if (!divisible)
            continue;

        if (d[t][t] < 0)
            negate_row(t);
        ++t;
    }
    return SmithResult{u, d, v};
}

// ---------------------------------------------------------------------------
// Lens-space recognition

inline Int mod_inverse(Int a, const Int& k)
{
    Int old_r = a % k, r = k;
    if (old_r < 0) old_r += k;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, Int(old_r - q * r));
        std::tie(old_s, s) = std::make_tuple(s, Int(old_s - q * s));
    }
    Int inv = old_s % k;
    if (inv < 0) inv += k;
    return inv;
}

/// The Reidemeister orbit {+-l^{+-1} mod k}, as residues in [0,k).
inline std::set<Int> reidemeister_orbit(const Int& k, const Int& l)
{
    Int lm = l % k;
    if (lm < 0) lm += k;
    Int inv = mod_inverse(lm, k);
    return {lm, (k - lm) % k, inv, (k - inv) % k};
}

inline bool reidemeister_equivalent(Int k, Int l, Int k2, Int l2)
{
    if (k < 0) k = -k;
    if (k2 < 0) k2 = -k2;
    if (boost::multiprecision::gcd(k, boost::multiprecision::abs(l)) != 1 ||
        boost::multiprecision::gcd(k2, boost::multiprecision::abs(l2)) != 1)
        throw ToricError(ErrorCode::NotCoprime, "lens parameters must be coprime");
    if (k != k2)
        return false;
    if (k == 0 || k == 1)
        return true;
    Int l2m = l2 % k;
    if (l2m < 0) l2m += k;
    return reidemeister_orbit(k, l).count(l2m) > 0;
}

inline LensLabel lens_of_cone(const MomentCone& c)
{
    MomentCone canon = normalize(c).first;
    Int l = canon.r2.x;
    Int k = canon.r2.y;
    if (k == 0)
        return LensLabel{0, 1};
    if (k < 0)
        k = -k; // unoriented diffeomorphism type
    if (k == 1)
        return LensLabel{1, 0};
    auto orbit = reidemeister_orbit(k, l);
    return LensLabel{k, *orbit.begin()};
}

// ---------------------------------------------------------------------------
// Contact class and homology

/**
 * Category of the fractional part a of delta, decided exactly from the rays:
 * a = 0 iff r2 is r1 (same sense), a = pi iff opposite, a in (0,pi) iff
 * cross(r1,r2) > 0, a in (pi,2pi) iff cross < 0.
 */
enum class FracCategory { Zero, Acute, Pi, Reflex }; // 0, (0,pi), pi, (pi,2pi)

inline FracCategory frac_category(const MomentCone& c)
{
    if (c.r1 == c.r2) return FracCategory::Zero;
    if (c.r1 == -c.r2) return FracCategory::Pi;
    return cross(c.r1, c.r2) > 0 ? FracCategory::Acute : FracCategory::Reflex;
}

/**
 * Tight iff delta <= pi; one full turn or more with fractional part in (0,pi]
 * gives the full-Lutz class xi_1; everything else (fractional part zero with
 * a turn, or fractional part in (pi,2pi)) gives the half-Lutz class xi_2.
 * The boundary delta = 2pi*n lands in xi_2: it is the half-Lutz twist of the
 * tight structure on S^1 x S^2 at delta = pi.
 */
inline ContactClass contact_class(const MomentCone& c)
{
    check_cone(c);
    FracCategory cat = frac_category(c);
    bool frac_in_zero_pi = (cat == FracCategory::Acute || cat == FracCategory::Pi);
    if (frac_in_zero_pi)
        return c.winding == 0 ? ContactClass::Tight : ContactClass::OvertwistedFull;
    return ContactClass::OvertwistedHalf;
}

/**
 * H_1 of the boundary lens space as nontrivial invariant factors of the
 * relation matrix with columns (0,1) and (k,-l), where (l,k) is the second
 * ray of the normalized cone.
 */
inline std::vector<Int> first_homology(const MomentCone& c)
{
    MomentCone canon = normalize(c).first;
    Int l = canon.r2.x;
    Int k = canon.r2.y;
    IntMatrix rel = {{Int(0), k}, {Int(1), -l}};
    SmithResult snf = smith_normal_form(rel);
    std::vector<Int> factors;
    for (std::size_t i = 0; i < 2; ++i)
        if (snf.d[i][i] != 1)
            factors.push_back(snf.d[i][i]); // 0 encodes a free Z factor
    return factors;
}

/**
 * Whether the transversal orbit class (the generator e1 of H_1) is nonzero,
 * i.e. whether d_2 alone separates the two overtwisted classes. False
 * exactly on S^3, where the theta invariant is needed instead.
 */
inline bool d2_distinguishes(const MomentCone& c)
{
    MomentCone canon = normalize(c).first;
    return boost::multiprecision::abs(canon.r2.y) != 1;
}

inline ClassificationResult classify(const MomentCone& c)
{
    return ClassificationResult{lens_of_cone(c), contact_class(c),
                                first_homology(c)};
}

} // namespace toric

#endif // TORIC_CLASSIFY_HPP
