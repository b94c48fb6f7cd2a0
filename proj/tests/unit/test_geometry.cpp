#include <doctest.h>

#include "freedist/errors.hpp"
#include "freedist/frame.hpp"
#include "freedist/parser.hpp"
#include "support/frames.hpp"

#include <random>

using namespace freedist;

namespace {

DifferentialForm dx(const Chart& chart, const Coordinate& c)
{
    return DifferentialForm::coordinate_differential(chart, chart.index_of(c));
}

// Rebuilds d theta^a from the structure functions plus the mandated theta^r ^ theta^s term.
DifferentialForm reconstruct(const Frame& frame, const Coframe& coframe, const StructureFunctions& f, std::size_t a)
{
    const std::size_t l = static_cast<std::size_t>(frame.l());
    DifferentialForm out(frame.chart(), 2);
    for (std::size_t b = 0; b < frame.size(); ++b)
        for (std::size_t c = b + 1; c < frame.size(); ++c) {
            Polynomial coeff = f(a, b, c);
            if (c < l && a >= l && frame.pairs().index(static_cast<int>(b) + 1, static_cast<int>(c) + 1) == a - l)
                coeff += Polynomial(1);
            if (!coeff.is_zero()) out += coeff * wedge(coframe[b], coframe[c]);
        }
    return out;
}

void check_frame_identities(const Frame& frame)
{
    Coframe theta = dual_coframe(frame);
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t b = 0; b < frame.size(); ++b)
            REQUIRE(theta[a].evaluate({frame.fields()[b]}) == Polynomial(a == b ? 1 : 0));
    StructureFunctions f = structure_functions(frame, theta);
    for (std::size_t a = 0; a < frame.size(); ++a) {
        DifferentialForm dtheta = theta[a].exterior_derivative();
        CHECK(reconstruct(frame, theta, f, a) == dtheta);
        CHECK(dtheta.exterior_derivative().is_zero());
        // Bracket route: d theta(X, Y) = -theta([X, Y]) for coordinate-free fields.
        for (std::size_t b = 0; b < frame.size(); ++b)
            for (std::size_t c = b + 1; c < frame.size(); ++c)
                if (c >= static_cast<std::size_t>(frame.l()))
                    CHECK(f(a, b, c) == -theta[a].evaluate({lie_bracket(frame.fields()[b], frame.fields()[c])}));
    }
}

}  // namespace

TEST_CASE("adjugate of random polynomial matrices")
{
    std::mt19937 rng(41);
    Chart chart(2);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> var(0, chart.dimension() - 1);
    for (int n = 0; n < 20; ++n) {
        PolyMatrix m(4, std::vector<Polynomial>(4));
        for (auto& row : m)
            for (auto& e : row) {
                e = Polynomial::constant(chart, coef(rng));
                if (coef(rng) > 0) e += Polynomial::variable(chart, chart.coordinate(var(rng))) * ExactScalar(coef(rng));
            }
        auto [det, adj] = determinant_and_adjugate(m);
        if (det.is_zero()) continue;
        PolyMatrix prod = multiply(m, adj);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(prod[i][j] == (i == j ? det : Polynomial()));
    }
}

TEST_CASE("flat model frame and coframe")
{
    for (int l = 3; l <= 5; ++l) {
        Frame frame = build_frame(testsupport::flat_distribution(l));
        const Chart& chart = frame.chart();
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k)
                CHECK(frame.pair(j, k) == -VectorField::coordinate_field(chart, Coordinate::y(j, k)));
        Coframe theta = dual_coframe(frame);
        for (int i = 1; i <= l; ++i) CHECK(theta[single_slot(i)] == dx(chart, Coordinate::x(i)));
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k) {
                DifferentialForm expected = dx(chart, Coordinate::y(j, k));
                expected += Polynomial::variable(chart, Coordinate::x(k)) * dx(chart, Coordinate::x(j));
                CHECK(theta[frame.pair_slot(j, k)] == Polynomial(-1) * expected);
            }
        StructureFunctions f = structure_functions(frame, theta);
        CHECK(f.entries().empty());
        check_frame_identities(frame);
    }
}

TEST_CASE("shifted flat frame has a single structure function")
{
    for (int l = 4; l <= 6; ++l) {
        Frame frame = build_frame(testsupport::armstrong_distribution(l));
        Coframe theta = dual_coframe(frame);
        StructureFunctions f = structure_functions(frame, theta);
        REQUIRE(f.entries().size() == 1);
        CHECK(f.single_pair(frame.pair_slot(3, 4), 1, 1, 2) == Polynomial(1));
        CHECK(f.single_pair(frame.pair_slot(3, 4), 1, 2, 1) == Polynomial(-1));
        if (l <= 5) check_frame_identities(frame);
    }
}

TEST_CASE("random unimodular frames satisfy the structure identities")
{
    std::mt19937 rng(42);
    for (int n = 0; n < 6; ++n) {
        Frame frame = build_frame(testsupport::parse_fields(testsupport::random_field_text(4, rng)));
        CHECK(check_nondegenerate(frame));
        check_frame_identities(frame);
    }
}

TEST_CASE("degenerate and unsupported frames")
{
    Chart chart(3);
    std::vector<VectorField> coords;
    for (int i = 1; i <= 3; ++i) coords.push_back(VectorField::coordinate_field(chart, Coordinate::x(i)));
    CHECK_FALSE(check_nondegenerate(Frame(coords)));
    CHECK_THROWS_AS(build_frame(coords), DegenerateFrame);

    Chart c2(2);
    std::vector<VectorField> vanishing{parse_vector_field("Dx1", c2), parse_vector_field("Dx2 + 1/2*x1^2*Dy[1,2]", c2)};
    CHECK_THROWS_AS(build_frame(vanishing), DegenerateFrame);
    CHECK_THROWS_AS(build_frame(vanishing, {{Coordinate::x(1), ExactScalar(1)}}), UnsupportedFrame);
    std::vector<VectorField> varying{parse_vector_field("Dx1", c2), parse_vector_field("Dx2 + (x1 + 1/2*x1^2)*Dy[1,2]", c2)};
    CHECK_THROWS_AS(build_frame(varying), UnsupportedFrame);
}

TEST_CASE("exterior derivative squares to zero on random forms")
{
    std::mt19937 rng(43);
    Chart chart(3);
    std::uniform_int_distribution<std::size_t> var(0, chart.dimension() - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int n = 0; n < 30; ++n) {
        DifferentialForm w(chart, 1);
        for (int t = 0; t < 4; ++t) {
            Polynomial p = Polynomial::constant(chart, coef(rng)) * Polynomial::variable(chart, chart.coordinate(var(rng))) *
                           Polynomial::variable(chart, chart.coordinate(var(rng)));
            w.add({var(rng)}, p);
        }
        CHECK(w.exterior_derivative().exterior_derivative().is_zero());
    }
}
