#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "test_helpers.hpp"
#include "toric/classify.hpp"

using namespace toric;
using toric::testing::Rng;

namespace {

const MomentCone kSphere{Direction{1, 0}, Direction{0, 1}, 0};
const MomentCone kS1xS2{Direction{1, 0}, Direction{-1, 0}, 0};

IntMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m, long bound)
{
    IntMatrix a(n, std::vector<Int>(m));
    for (auto& row : a)
        for (auto& e : row)
            e = testing::random_int(rng, -bound, bound);
    return a;
}

Int det_of(const IntMatrix& a)
{
    std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t t = 0; t < n; ++t)
                if (t != j)
                    row.push_back(a[i][t]);
            minor.push_back(row);
        }
        Int term = a[0][j] * det_of(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

/// gcd of all k x k minors; d1*...*dk of the Smith form must equal it.
Int determinantal_divisor(const IntMatrix& a, std::size_t k)
{
    std::size_t n = a.size(), m = a[0].size();
    Int g = 0;
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t, std::vector<std::vector<std::size_t>>&)>
        gen = [&](std::size_t start, std::size_t total,
                  std::vector<std::vector<std::size_t>>& out) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < total; ++i) {
                cur.push_back(i);
                gen(i + 1, total, out);
                cur.pop_back();
            }
        };
    gen(0, n, row_sets);
    gen(0, m, col_sets);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            IntMatrix sub(k, std::vector<Int>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub[i][j] = a[rs[i]][cs[j]];
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det_of(sub)));
        }
    return g;
}

void check_smith(const IntMatrix& a)
{
    SmithResult s = smith_normal_form(a);
    std::size_t n = a.size(), m = a[0].size();
    CHECK(matmul(matmul(s.u, a), s.v) == s.d);
    CHECK(boost::multiprecision::abs(det_of(s.u)) == 1);
    CHECK(boost::multiprecision::abs(det_of(s.v)) == 1);
    std::size_t bound = std::min(n, m);
    for (std::size_t i = 0; i < bound; ++i) {
        CHECK(s.d[i][i] >= 0);
        if (i + 1 < bound && s.d[i][i] != 0)
            CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
        if (s.d[i][i] == 0 && i + 1 < bound)
            CHECK(s.d[i + 1][i + 1] == 0);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j)
                CHECK(s.d[i][j] == 0);
    // determinantal-divisor oracle: prod(d1..dk) = gcd of k x k minors
    Int prod = 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        prod *= s.d[k - 1][k - 1];
        CHECK(prod == determinantal_divisor(a, k));
    }
}

} // namespace

TEST_CASE("smith_normal_form on pinned matrices")
{
    SmithResult s = smith_normal_form({{Int(2), Int(0)}, {Int(0), Int(3)}});
    CHECK(s.d == IntMatrix{{Int(1), Int(0)}, {Int(0), Int(6)}});
    check_smith({{Int(2), Int(0)}, {Int(0), Int(3)}});

    SmithResult id = smith_normal_form({{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(id.d == identity_matrix(2));

    // relation matrix of L(k,l): columns (0,1) and (k,-l)
    for (long k = 0; k <= 9; ++k) {
        SmithResult rel = smith_normal_form({{Int(0), Int(k)}, {Int(1), Int(-1)}});
        CHECK(rel.d == IntMatrix{{Int(1), Int(0)}, {Int(0), Int(k)}});
    }
}

TEST_CASE("smith_normal_form on random matrices")
{
    Rng rng(9001);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        std::size_t m = 2 + static_cast<std::size_t>((trial / 2) % 2);
        check_smith(random_matrix(rng, n, m, 20));
    }
}

TEST_CASE("lens_of_cone recognizes S^3, S^1 x S^2 and L(3,1)")
{
    CHECK(lens_of_cone(kSphere) == LensLabel{1, 0});
    CHECK(lens_of_cone(kS1xS2) == LensLabel{0, 1});
    CHECK(lens_of_cone(MomentCone{Direction{1, 0}, Direction{2, 3}, 0}) ==
          LensLabel{3, 1});
}

TEST_CASE("reidemeister_equivalent pinned cases")
{
    CHECK_FALSE(reidemeister_equivalent(7, 1, 7, 2));
    CHECK(reidemeister_equivalent(7, 2, 7, 4)); // 2*4 = 8 = 1 mod 7
    for (long k = 2; k <= 12; ++k)
        for (long l = 1; l < k; ++l)
            if (boost::multiprecision::gcd(Int(k), Int(l)) == 1)
                CHECK(reidemeister_equivalent(k, l, k, k - l));
    CHECK_THROWS_AS(reidemeister_equivalent(6, 2, 6, 1), ToricError);
}

TEST_CASE("reidemeister_equivalent is an equivalence relation for k <= 30")
{
    for (long k = 2; k <= 30; ++k) {
        std::vector<long> units;
        for (long l = 1; l < k; ++l)
            if (boost::multiprecision::gcd(Int(k), Int(l)) == 1)
                units.push_back(l);
        for (long a : units) {
            CHECK(reidemeister_equivalent(k, a, k, a));
            for (long b : units) {
                bool ab = reidemeister_equivalent(k, a, k, b);
                CHECK(ab == reidemeister_equivalent(k, b, k, a));
                // brute-force orbit {+-a^{+-1} mod k}
                std::set<Int> orbit = reidemeister_orbit(Int(k), Int(a));
                CHECK(ab == (orbit.count(Int(b)) > 0));
            }
        }
    }
}

TEST_CASE("contact_class pinned cases")
{
    CHECK(contact_class(kSphere) == ContactClass::Tight);
    CHECK(contact_class(MomentCone{Direction{1, 0}, Direction{0, 1}, 1}) ==
          ContactClass::OvertwistedFull);
    CHECK(contact_class(MomentCone{Direction{1, 0}, Direction{0, -1}, 0}) ==
          ContactClass::OvertwistedHalf);
    CHECK(contact_class(MomentCone{Direction{1, 0}, Direction{1, 0}, 1}) ==
          ContactClass::OvertwistedHalf);
    CHECK(contact_class(kS1xS2) == ContactClass::Tight);
}

TEST_CASE("tight iff delta <= pi")
{
    Rng rng(9002);
    ExactAngle pi{Direction{-1, 0}, 0};
    for (int i = 0; i < 500; ++i) {
        MomentCone c = testing::random_cone(rng, 20, 2);
        bool tight = contact_class(c) == ContactClass::Tight;
        bool below = angle_compare(delta(c), pi) != std::strong_ordering::greater;
        CHECK(tight == below);
    }
}

TEST_CASE("classify pinned cases")
{
    ClassificationResult r =
        classify(MomentCone{Direction{1, 0}, Direction{2, 3}, 0});
    CHECK(r.lens == LensLabel{3, 1});
    CHECK(r.contact == ContactClass::Tight);
    CHECK(r.h1 == std::vector<Int>{3});

    ClassificationResult s = classify(kS1xS2);
    CHECK(s.lens == LensLabel{0, 1});
    CHECK(s.contact == ContactClass::Tight);
    CHECK(s.h1 == std::vector<Int>{0});

    ClassificationResult t =
        classify(MomentCone{Direction{1, 0}, Direction{1, 0}, 2});
    CHECK(t.lens == LensLabel{0, 1});
    CHECK(t.contact == ContactClass::OvertwistedHalf);
    CHECK(t.h1 == std::vector<Int>{0});
}

TEST_CASE("classify is an SL(2,Z) invariant")
{
    Rng rng(9003);
    for (int i = 0; i < 300; ++i) {
        MomentCone c = testing::random_cone(rng, 20, 2);
        UnimodularMap m = testing::random_unimodular(rng);
        CHECK(classify(c) == classify(apply(m, c)));
    }
}

TEST_CASE("Lutz moves and classify")
{
    Rng rng(9004);
    for (int i = 0; i < 300; ++i) {
        MomentCone c = testing::random_cone(rng, 20, 2);
        ClassificationResult base = classify(c);
        ClassificationResult half = classify(half_lutz(c));
        ClassificationResult full = classify(full_lutz(c));
        CHECK(half.lens == base.lens);
        CHECK(full.lens == base.lens);
        CHECK(half.contact != ContactClass::Tight);
        CHECK(full.contact != ContactClass::Tight);
        if (base.contact == ContactClass::Tight)
            CHECK(full.contact == ContactClass::OvertwistedFull);
        CHECK(classify(half_lutz(half_lutz(c))) == full);
    }
}

TEST_CASE("first_homology pinned cases")
{
    CHECK(first_homology(kSphere).empty());
    CHECK(first_homology(MomentCone{Direction{1, 0}, Direction{1, 3}, 0}) ==
          std::vector<Int>{3});
    CHECK(first_homology(kS1xS2) == std::vector<Int>{0});
}

TEST_CASE("d2_distinguishes fails exactly on S^3")
{
    CHECK(d2_distinguishes(kS1xS2));
    CHECK(d2_distinguishes(MomentCone{Direction{1, 0}, Direction{2, 3}, 0}));
    CHECK_FALSE(d2_distinguishes(kSphere));
}
