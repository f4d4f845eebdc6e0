#ifndef TORIC_FOURMANIFOLD_HPP
#define TORIC_FOURMANIFOLD_HPP

#include <optional>
#include <vector>

#include "toric/plumbing.hpp"

namespace toric {

/**
 * Intersection form of the plumbing 4-manifold: symmetric, and tridiagonal
 * with unit off-diagonal when built from a linear plumbing.
 */
struct IntersectionForm {
    IntMatrix entries;

    std::size_t size() const { return entries.size(); }

    friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;
};

inline IntersectionForm intersection_form(const Plumbing& p)
{
    std::size_t n = p.chain.size();
    IntMatrix q(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        q[i][i] = p.chain[i];
        if (i + 1 < n) {
            q[i][i + 1] = 1;
            q[i + 1][i] = 1;
        }
    }
    return IntersectionForm{q};
}

/**
 * Exact signature (#positive - #negative eigenvalues) by congruence
 * diagonalization over the rationals. A zero diagonal entry with a nonzero
 * off-diagonal partner is cured by adding the partner row and column, which
 * is a congruence; the resulting hyperbolic pair contributes 0.
 */
inline Int signature(const IntersectionForm& q)
{
    std::size_t n = q.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Rational(q.entries[i][j]);

    auto swap_sym = [&](std::size_t i, std::size_t j) {
        std::swap(m[i], m[j]);
        for (auto& row : m)
            std::swap(row[i], row[j]);
    };
    auto add_sym = [&](std::size_t dst, std::size_t src, const Rational& f) {
        for (std::size_t t = 0; t < n; ++t)
            m[dst][t] += f * m[src][t];
        for (std::size_t t = 0; t < n; ++t)
            m[t][dst] += f * m[t][src];
    };

    Int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            for (; j < n; ++j)
                if (m[j][j] != 0)
                    break;
            if (j < n) {
                swap_sym(k, j);
            } else {
                for (j = k + 1; j < n; ++j)
                    if (m[k][j] != 0)
                        break;
                if (j == n)
                    continue; // row k is zero: rank-deficient direction
                add_sym(k, j, 1); // diag j is zero here, so m[k][k] = 2*m[k][j]
            }
        }
        Rational pivot = m[k][k];
        sig += pivot > 0 ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i)
            if (m[i][k] != 0)
                add_sym(i, k, -m[i][k] / pivot);
    }
    return sig;
}

/// chi = 1 + n for a plumbing of n spheres (one 0-cell, n 2-cells).
inline Int euler_characteristic(const Plumbing& p)
{
    return Int(p.chain.size()) + 1;
}

/**
 * Solve the square rational system q * a = d by Gaussian elimination,
 * setting free variables to 0. Returns nothing when inconsistent.
 */
inline std::optional<std::vector<Rational>>
solve_linear(const IntMatrix& q, const std::vector<Int>& d)
{
    std::size_t n = q.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = Rational(q[i][j]);
        aug[i][n] = Rational(d[i]);
    }
    std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && aug[piv][col] == 0)
            ++piv;
        if (piv == n)
            continue; // free column
        std::swap(aug[rank], aug[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || aug[i][col] == 0)
                continue;
            Rational f = aug[i][col] / aug[rank][col];
            for (std::size_t j = col; j <= n; ++j)
                aug[i][j] -= f * aug[rank][j];
        }
        pivot_of_col[col] = static_cast<std::ptrdiff_t>(rank);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (aug[i][n] != 0)
            return std::nullopt;
    std::vector<Rational> a(n, Rational(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] >= 0) {
            std::size_t r = static_cast<std::size_t>(pivot_of_col[col]);
            a[col] = aug[r][n] / aug[r][col];
        }
    return a;
}

/**
 * PD(c_1) in sphere-class coordinates, from the adjunction values
 * <c_1,[C_j]> = 2 - 2g + [C_j]^2 = 2 + s_j. When the form is singular but
 * the system is consistent, free variables are set to 0; the square a^T d
 * does not depend on that choice.
 */
inline std::vector<Rational> c1_pd(const Plumbing& p)
{
    IntersectionForm q = intersection_form(p);
    std::vector<Int> d;
    d.reserve(p.chain.size());
    for (const Int& s : p.chain)
        d.push_back(2 + s);
    auto a = solve_linear(q.entries, d);
    if (!a)
        throw ToricError(ErrorCode::NoTorsionC1,
                         "adjunction system inconsistent: c_1 is not torsion "
                         "on the boundary");
    return *a;
}

inline Rational c1_square(const Plumbing& p)
{
    auto a = c1_pd(p);
    Rational sq = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        sq += a[j] * Rational(2 + p.chain[j]);
    return sq;
}

/// Gompf's theta of the boundary plane field: (PD c_1)^2 - 2chi - 3sigma.
inline Rational theta(const Plumbing& p)
{
    Rational sq = c1_square(p);
    Int chi = euler_characteristic(p);
    Int sig = signature(intersection_form(p));
    return sq - 2 * Rational(chi) - 3 * Rational(sig);
}

/**
 * d_3 difference (theta(p1) - theta(p2)) / 4 of the two boundary contact
 * structures; a nonzero value certifies they are non-homotopic plane fields.
 * The boundaries must be the same lens space.
 */
inline Rational d3_difference(const Plumbing& p1, const Plumbing& p2)
{
    LensLabel l1 = lens_of_cone(cone_of_plumbing(p1));
    LensLabel l2 = lens_of_cone(cone_of_plumbing(p2));
    if (!(l1 == l2))
        throw ToricError(ErrorCode::LensMismatch,
                         "boundary lens spaces differ");
    return (theta(p1) - theta(p2)) / 4;
}

} // namespace toric

#endif // TORIC_FOURMANIFOLD_HPP
