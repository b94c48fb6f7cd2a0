#include <doctest.h>

#include "freedist/errors.hpp"
#include "freedist/polynomial.hpp"

#include <random>

using namespace freedist;

namespace {

Polynomial random_polynomial(std::mt19937& rng, const Chart& chart, int terms, int max_exp)
{
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<std::size_t> var(0, chart.dimension() - 1);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial m = Polynomial::constant(chart, ExactScalar(mpq_class(coef(rng)), mpq_class(coef(rng) % 2)));
        for (int f = 0; f < 2; ++f) m *= Polynomial::variable(chart, chart.coordinate(var(rng))).pow(exp(rng));
        p += m;
    }
    return p;
}

std::map<Coordinate, ExactScalar> random_point(std::mt19937& rng, const Chart& chart)
{
    std::uniform_int_distribution<long> v(-4, 4);
    std::map<Coordinate, ExactScalar> pt;
    for (std::size_t c = 0; c < chart.dimension(); ++c) pt[chart.coordinate(c)] = ExactScalar(v(rng));
    return pt;
}

}  // namespace

TEST_CASE("chart enumeration")
{
    Chart chart(4);
    CHECK(chart.dimension() == 10);
    CHECK(chart.index_of(Coordinate::x(3)) == 2);
    CHECK(chart.index_of(Coordinate::y(1, 2)) == 4);
    CHECK(chart.index_of(Coordinate::y(3, 4)) == 9);
    for (std::size_t c = 0; c < chart.dimension(); ++c) CHECK(chart.index_of(chart.coordinate(c)) == c);
    CHECK_THROWS_AS(chart.index_of(Coordinate::x(5)), MissingCoordinate);
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 rng(21);
    Chart chart(3);
    for (int n = 0; n < 60; ++n) {
        Polynomial p = random_polynomial(rng, chart, 4, 2);
        Polynomial q = random_polynomial(rng, chart, 3, 2);
        auto pt = random_point(rng, chart);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("derivative obeys Leibniz and matches difference of powers")
{
    std::mt19937 rng(22);
    Chart chart(3);
    for (int n = 0; n < 60; ++n) {
        Polynomial p = random_polynomial(rng, chart, 4, 3);
        Polynomial q = random_polynomial(rng, chart, 3, 3);
        for (std::size_t c = 0; c < chart.dimension(); ++c)
            CHECK((p * q).derivative(c) == p.derivative(c) * q + p * q.derivative(c));
    }
    Polynomial x = Polynomial::variable(chart, Coordinate::x(1));
    CHECK(x.pow(5).derivative(Coordinate::x(1)) == x.pow(4) * ExactScalar(5));
}

TEST_CASE("exact division inverts multiplication")
{
    std::mt19937 rng(23);
    Chart chart(3);
    for (int n = 0; n < 40; ++n) {
        Polynomial p = random_polynomial(rng, chart, 3, 2);
        Polynomial q = random_polynomial(rng, chart, 3, 2);
        if (q.is_zero()) continue;
        CHECK((p * q).exact_divide(q) == p);
    }
    Polynomial x = Polynomial::variable(chart, Coordinate::x(1));
    Polynomial y = Polynomial::variable(chart, Coordinate::x(2));
    CHECK_THROWS_AS(x.exact_divide(y), InvariantViolation);
}

TEST_CASE("mixing charts is an error but constants are chart-free")
{
    Polynomial a = Polynomial::variable(Chart(3), Coordinate::x(1));
    Polynomial b = Polynomial::variable(Chart(4), Coordinate::x(1));
    CHECK_THROWS_AS(a + b, ChartMismatch);
    CHECK((a + Polynomial(2)).chart().l() == 3);
    CHECK(Polynomial(3) == Polynomial::constant(Chart(4), 3));
}

TEST_CASE("missing coordinate on evaluation")
{
    Polynomial a = Polynomial::variable(Chart(3), Coordinate::y(1, 3));
    CHECK_THROWS_AS(a.evaluate({}), MissingCoordinate);
}
