#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <doctest.h>

#include "foldnet/geometry.hpp"

using namespace foldnet;

TEST_CASE("regular_polygon basic shapes") {
    const ConvexPolygon square = regular_polygon(1);
    REQUIRE(square.size() == 4);
    CHECK(square.vertices()[0].x == 0.0);
    CHECK(square.vertices()[0].y == 1.0);
    CHECK(square.vertices()[1].x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(square.vertices()[1].y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(square.vertices()[2].y == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(square.vertices()[3].x == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(regular_polygon(2).size() == 8);
    const ConvexPolygon p3 = regular_polygon(3);
    CHECK(p3.size() == 16);
    // adjacent-vertex central angle 22.5 degrees
    const Point2 a = p3.vertices()[0];
    const Point2 b = p3.vertices()[1];
    const double angle = std::acos(a.x * b.x + a.y * b.y);
    CHECK(angle == doctest::Approx(2.0 * std::numbers::pi / 16.0).epsilon(1e-12));

    for (const Point2& v : p3.vertices()) {
        CHECK(std::hypot(v.x, v.y) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(regular_polygon(0), std::invalid_argument);
    CHECK_THROWS_AS(regular_polygon(25), std::invalid_argument);
}

TEST_CASE("classify_point") {
    const ProblemInstance p1(1);
    CHECK(p1.classify_point({0.0, 0.0}) == Label::Plus);
    CHECK(p1.classify_point({0.0, 1.001}) == Label::Minus);
    CHECK(p1.classify_point({0.5, 0.5}) == Label::Boundary);

    const ProblemInstance p4(4);
    CHECK(p4.classify_point({0.0, 0.0}) == Label::Plus);
    CHECK(p4.classify_point({0.0, 1.001}) == Label::Minus);
    CHECK(p4.classify_point({0.0, 1.0}) == Label::Boundary);
}

TEST_CASE("classify_point oracle consistency on random points") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int m = 1; m <= 10; ++m) {
        const ProblemInstance problem(m);
        const double inradius = problem.inradius();
        for (int i = 0; i < 10000; ++i) {
            const Point2 p{coord(rng), coord(rng)};
            const double r = std::hypot(p.x, p.y);
            const Label label = problem.classify_point(p);
            if (r > 1.0 + 1e-9) CHECK(label == Label::Minus);
            if (r < inradius - 1e-9) CHECK(label == Label::Plus);
        }
    }
}

TEST_CASE("point_side") {
    const Line x0 = Line::from_coefficients(1, 0, 0);
    CHECK(point_side(x0, {1, 0}) == Side::Positive);
    CHECK(point_side(x0, {0, 7}) == Side::On);
    const Line diag = Line::from_coefficients(1, 1, -1);
    CHECK(point_side(diag, {0, 0}) == Side::Negative);
}

TEST_CASE("clip_by_line") {
    const ConvexPolygon square = ConvexPolygon::axis_aligned_box(0, 0, 1, 1);

    SUBCASE("symmetric bisection") {
        const ClipResult r = clip_by_line(square, Line::from_coefficients(1, 0, -0.5));
        REQUIRE(r.positive.has_value());
        REQUIRE(r.negative.has_value());
        CHECK(r.positive->area() == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.negative->area() == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("non-intersecting line") {
        const ClipResult r = clip_by_line(square, Line::from_coefficients(1, 0, -5.0));
        CHECK(!r.positive.has_value());
        REQUIRE(r.negative.has_value());
        CHECK(r.negative->area() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("diamond split along y=0") {
        // shoelace on the m=1 square gives total area 2
        const ClipResult r = clip_by_line(regular_polygon(1), Line::from_coefficients(0, 1, 0));
        REQUIRE(r.positive.has_value());
        REQUIRE(r.negative.has_value());
        CHECK(r.positive->area() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.negative->area() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("clip partition and idempotence properties") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const ConvexPolygon octagon = regular_polygon(2);
    for (int trial = 0; trial < 200; ++trial) {
        double a = unit(rng), b = unit(rng);
        if (std::hypot(a, b) < 1e-3) continue;
        const Line line = Line::from_coefficients(a, b, 0.4 * unit(rng));
        const ClipResult r = clip_by_line(octagon, line);
        double total = 0.0;
        if (r.positive) total += r.positive->area();
        if (r.negative) total += r.negative->area();
        CHECK(total == doctest::Approx(octagon.area()).epsilon(1e-9));

        if (r.positive) {
            const ClipResult again = clip_by_line(*r.positive, line);
            REQUIRE(again.positive.has_value());
            CHECK(!again.negative.has_value());
            CHECK(again.positive->area() == doctest::Approx(r.positive->area()).epsilon(1e-9));
        }
    }
}

TEST_CASE("v_even_prime") {
    const ProblemInstance p1(1);
    const std::vector<Point2> w1 = p1.v_even_prime(0.01);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].x == doctest::Approx(0.0));
    CHECK(w1[0].y == doctest::Approx(1.01));
    CHECK(w1[1].y == doctest::Approx(-1.01));

    CHECK(ProblemInstance(3).v_even_prime(0.05).size() == 8);

    const ProblemInstance p2(2);
    for (const Point2& p : p2.v_even_prime(0.001)) {
        CHECK(p2.classify_point(p) == Label::Minus);
    }
    CHECK_THROWS_AS(p1.v_even_prime(0.0), std::invalid_argument);
    CHECK_THROWS_AS(p1.v_even_prime(0.2), std::invalid_argument);

    // pairwise distinct, all outside, for a range of m
    for (int m = 1; m <= 6; ++m) {
        const ProblemInstance problem(m);
        const std::vector<Point2> pts = problem.v_even_prime(0.01);
        CHECK(pts.size() == (std::size_t{1} << m));
        std::set<std::pair<double, double>> distinct;
        for (const Point2& p : pts) {
            distinct.insert({p.x, p.y});
            CHECK(problem.classify_point(p) == Label::Minus);
        }
        CHECK(distinct.size() == pts.size());
    }
}

TEST_CASE("chord_crosses_boundary") {
    const ProblemInstance p1(1);
    CHECK(p1.chord_crosses_boundary({0, 1.01}, {0, -1.01}));
    CHECK(!p1.chord_crosses_boundary({3, 3}, {4, 4}));

    const ProblemInstance p2(2);
    const std::vector<Point2> w = p2.v_even_prime(0.01);
    CHECK(p2.chord_crosses_boundary(w[0], w[1]));
    // tangent-ish segment far outside never crosses
    CHECK(!p2.chord_crosses_boundary({-2, 1.5}, {2, 1.5}));
}
