#include <doctest.h>

#include "freedist/errors.hpp"
#include "freedist/spinorial.hpp"

#include <random>

using namespace freedist;

namespace {

ExactScalar random_scalar(std::mt19937& rng, bool with_sqrt2 = false)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    ExactScalar x = ExactScalar::rational(num(rng), den(rng));
    if (with_sqrt2) x += ExactScalar::rational(num(rng), den(rng)) * ExactScalar::sqrt2();
    return x;
}

ScalarMatrix random_skew(std::size_t n, std::mt19937& rng, bool with_sqrt2)
{
    ScalarMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_scalar(rng, with_sqrt2);
            m(j, i) = -m(i, j);
        }
    return m;
}

TangentVector random_tangent(int l, std::mt19937& rng)
{
    TangentVector v(tangent_dimension(l));
    for (auto& x : v) x = random_scalar(rng);
    return v;
}

ScalarMatrix product(const ScalarMatrix& a, const ScalarMatrix& b)
{
    ScalarMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

// s^t as the skew matrix s t^T - t s^T.
ScalarMatrix wedge(const std::vector<ExactScalar>& s, const std::vector<ExactScalar>& t)
{
    ScalarMatrix m(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) m(i, j) = s[i] * t[j] - t[i] * s[j];
    return m;
}

ExactScalar quadratic(const ScalarMatrix& b, const TangentVector& v)
{
    ExactScalar q;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) q += b(i, j) * v[i] * v[j];
    return q;
}

}  // namespace

TEST_CASE("tangent vectors and skew matrices")
{
    TangentVector e1(6);
    e1[0] = ExactScalar(1);
    ScalarMatrix m = tangent_to_skew(3, e1);
    CHECK(m(0, 1) == ExactScalar::inv_sqrt2());
    CHECK(m(1, 0) == -ExactScalar::inv_sqrt2());
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) nonzero += !m(i, j).is_zero();
    CHECK(nonzero == 2);
    CHECK(tangent_to_skew(3, TangentVector(6)) == ScalarMatrix(4));

    TangentVector e23(6);
    e23[5] = ExactScalar(1);
    CHECK(tangent_to_skew(3, e23)(2, 3) == ExactScalar(1));
    CHECK(tangent_to_skew(3, e23)(3, 2) == ExactScalar(-1));

    std::mt19937 rng(11);
    for (int l = 3; l <= 6; ++l) {
        CHECK(tangent_dimension(l) == static_cast<std::size_t>(l + l * (l - 1) / 2));
        TangentVector a = random_tangent(l, rng), b = random_tangent(l, rng), sum(a.size());
        const ExactScalar c = random_scalar(rng, true);
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + c * b[i];
        ScalarMatrix ma = tangent_to_skew(l, a), mb = tangent_to_skew(l, b), ms = tangent_to_skew(l, sum);
        CHECK(ma.is_skew());
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j) CHECK(ms(i, j) == ma(i, j) + c * mb(i, j));
        CHECK(skew_to_tangent(ma) == a);
        CHECK(skew_to_tangent(tangent_to_skew(l, a, false), false) == a);
        ScalarMatrix r = random_skew(static_cast<std::size_t>(l) + 1, rng, true);
        CHECK(tangent_to_skew(l, skew_to_tangent(r)) == r);
    }
}

TEST_CASE("pfaffian values")
{
    ScalarMatrix two(2);
    two(0, 1) = ExactScalar(7);
    two(1, 0) = ExactScalar(-7);
    CHECK(pfaffian(two) == ExactScalar(7));
    CHECK(pfaffian(ScalarMatrix(0)) == ExactScalar(1));

    // Pf of the 4x4 matrix is m01 m23 - m02 m13 + m03 m12.
    std::mt19937 rng(2);
    ScalarMatrix m = random_skew(4, rng, true);
    CHECK(pfaffian(m) == m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2));

    TangentVector v(6);
    v[0] = ExactScalar(1);
    v[5] = ExactScalar(1);
    CHECK(pfaffian(tangent_to_skew(3, v)) == ExactScalar::inv_sqrt2());
    CHECK_FALSE(null_cone_member(3, v));

    CHECK_THROWS_AS(pfaffian(ScalarMatrix(3)), Unsupported);
    CHECK_THROWS_AS(null_cone_member(4, TangentVector(10)), Unsupported);
}

TEST_CASE("pfaffian squared equals determinant")
{
    std::mt19937 rng(23);
    for (std::size_t n : {2u, 4u, 6u, 8u})
        for (int trial = 0; trial < 10; ++trial) {
            ScalarMatrix m = random_skew(n, rng, trial % 2 == 1);
            const ExactScalar pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
        }
    for (std::size_t n : {3u, 5u}) CHECK(determinant(random_skew(n, rng, true)).is_zero());
}

TEST_CASE("decomposable vectors lie on the cone")
{
    std::mt19937 rng(31);
    for (std::size_t n : {4u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<ExactScalar> s(n), t(n);
            for (auto& x : s) x = random_scalar(rng, true);
            for (auto& x : t) x = random_scalar(rng, true);
            ScalarMatrix m = wedge(s, t);
            CHECK(pfaffian(m).is_zero());
            const int l = static_cast<int>(n) - 1;
            CHECK(null_cone_member(l, skew_to_tangent(m)));
        }
    }
    CHECK(null_cone_member(3, TangentVector(6)));
    // Pure g_{-1} vectors give s0 ^ t.
    for (int trial = 0; trial < 5; ++trial) {
        TangentVector v(tangent_dimension(5));
        for (int i = 0; i < 5; ++i) v[static_cast<std::size_t>(i)] = random_scalar(rng);
        CHECK(null_cone_member(5, v));
    }
}

TEST_CASE("cone membership is invariant under rescaling")
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        TangentVector v = random_tangent(3, rng);
        if (trial % 2 == 0) v[0] = ExactScalar(0), v[1] = ExactScalar(0), v[2] = ExactScalar(0);
        const bool member = null_cone_member(3, v);
        TangentVector w = v;
        for (auto& x : w) x *= ExactScalar(-3) + ExactScalar::sqrt2();
        CHECK(null_cone_member(3, w) == member);
        CHECK(pfaffian(tangent_to_skew(3, v, false)).is_zero() == member);
    }
}

TEST_CASE("quadratic form of the l = 3 Pfaffian")
{
    ScalarMatrix b = pfaffian_quadratic_form(3);
    CHECK(b.is_symmetric());
    // Hyperbolic pairs (v^1, v^[23]), (v^2, v^[13]), (v^3, v^[12]).
    ScalarMatrix expected(6);
    const ExactScalar h = ExactScalar::inv_sqrt2();
    expected(0, 5) = expected(5, 0) = h;
    expected(1, 4) = expected(4, 1) = -h;
    expected(2, 3) = expected(3, 2) = h;
    CHECK(b == expected);
    CHECK(signature(b) == Signature{3, 3, 0});
    // B^2 = I/2 and tr B = 0 force eigenvalues +-1/sqrt2 in equal numbers.
    ScalarMatrix half(6);
    for (std::size_t i = 0; i < 6; ++i) half(i, i) = ExactScalar::rational(1, 2);
    CHECK(product(b, b) == half);

    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        TangentVector v = random_tangent(3, rng);
        CHECK(quadratic(b, v) == ExactScalar(2) * pfaffian(tangent_to_skew(3, v)));
        TangentVector low(6);
        for (int i = 0; i < 3; ++i) low[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
        CHECK(quadratic(b, low).is_zero());
    }
    CHECK_THROWS_AS(pfaffian_quadratic_form(5), Unsupported);
}

TEST_CASE("signature by congruence")
{
    ScalarMatrix d(4);
    d(0, 0) = ExactScalar(2);
    d(1, 1) = ExactScalar(-1);
    d(2, 2) = ExactScalar::sqrt2() - ExactScalar(2);
    CHECK(signature(d) == Signature{1, 2, 1});
    ScalarMatrix hyperbolic(2);
    hyperbolic(0, 1) = hyperbolic(1, 0) = ExactScalar(1);
    CHECK(signature(hyperbolic) == Signature{1, 1, 0});
    CHECK(signature(ScalarMatrix(3)) == Signature{0, 0, 3});
}

TEST_CASE("inclusion table")
{
    auto rows = list_inclusions();
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].model == "Q5");
    CHECK(rows[2].geometry.find("6-dimensional") != std::string::npos);
    CHECK(rows[2].geometry.find("Bryant") != std::string::npos);
    CHECK(list_inclusions(4)[2].geometry.find("(4,10)") != std::string::npos);
}
