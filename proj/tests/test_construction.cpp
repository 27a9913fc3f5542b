#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "foldnet/construction.hpp"
#include "foldnet/geometry.hpp"

using namespace foldnet;

namespace {

Point2 apply_stages(const std::vector<Stage>& stages, const Point2& p) {
    const std::vector<double> v = evaluate_stages(stages, p);
    REQUIRE(v.size() == 2);
    return {v[0], v[1]};
}

}  // namespace

TEST_CASE("fold plan angles halve") {
    const FoldPlan plan = FoldPlan::for_problem(4);
    REQUIRE(plan.rotation_angles.size() == 4);
    CHECK(plan.rotation_angles[0] == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
    for (std::size_t k = 1; k < plan.rotation_angles.size(); ++k) {
        CHECK(plan.rotation_angles[k] ==
              doctest::Approx(plan.rotation_angles[k - 1] / 2).epsilon(1e-15));
    }
}

TEST_CASE("make_fold_xy maps to first quadrant") {
    const std::vector<Stage> fold = make_fold_xy();
    const Point2 a = apply_stages(fold, {-3, 2});
    CHECK(a.x == 3.0);
    CHECK(a.y == 2.0);
    const Point2 b = apply_stages(fold, {0, 0});
    CHECK(b.x == 0.0);
    CHECK(b.y == 0.0);
    const Point2 c = apply_stages(fold, {5, -5});
    CHECK(c.x == 5.0);
    CHECK(c.y == 5.0);
}

TEST_CASE("make_fold_x folds across the x axis") {
    const std::vector<Stage> fold = make_fold_x();
    const Point2 a = apply_stages(fold, {2, -5});
    CHECK(a.x == 2.0);
    CHECK(a.y == 5.0);
    const Point2 b = apply_stages(fold, {2, 5});
    CHECK(b.x == 2.0);
    CHECK(b.y == 5.0);
    // negative x is clamped by the ReLU: the x >= 0 precondition matters
    const Point2 c = apply_stages(fold, {-1, 1});
    CHECK(c.x == 0.0);
    CHECK(c.y == 1.0);
}

TEST_CASE("make_rotation is orthogonal") {
    const std::vector<Stage> ident{make_rotation(0.0)};
    const Point2 p = apply_stages(ident, {0.3, -0.7});
    CHECK(p.x == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(-0.7).epsilon(1e-15));

    const std::vector<Stage> quarter{make_rotation(std::numbers::pi / 2)};
    const Point2 q = apply_stages(quarter, {1, 0});
    CHECK(std::hypot(q.x, q.y) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(q.x) < 1e-12);

    const std::vector<Stage> inverse{make_rotation(0.37), make_rotation(-0.37)};
    const Point2 r = apply_stages(inverse, {0.9, 0.1});
    CHECK(r.x == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(r.y == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("derive_top") {
    for (int m = 1; m <= 12; ++m) {
        const StagedNetwork net = build_network(m);
        CHECK(net.evaluate_pre_sign({0, 0}) > 0.0);
        CHECK(net.evaluate_pre_sign({0, 1.001}) <= 0.0);
        CHECK(net.head().c != 0.0);
    }
}

TEST_CASE("build_network structure") {
    CHECK_THROWS_AS(build_network(0), std::invalid_argument);
    CHECK_THROWS_AS(build_network(17), std::invalid_argument);
    const MlpNetwork m1 = collapse(build_network(1));
    CHECK(m1.relu_depth() == 2);

    const FoldPlan plan = FoldPlan::for_problem(3);
    CHECK(plan.rotation_angles ==
          std::vector<double>{std::numbers::pi / 4, std::numbers::pi / 8, std::numbers::pi / 16});
}

TEST_CASE("prefix maps the unit circle into the unit circle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    for (int m : {1, 3, 6}) {
        const std::vector<Stage> prefix = build_prefix(m);
        for (int i = 0; i < 1000; ++i) {
            const double t = angle(rng);
            const Point2 image = apply_stages(prefix, {std::cos(t), std::sin(t)});
            CHECK(std::abs(std::hypot(image.x, image.y) - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("quadrant invariant after folds") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const std::vector<Stage> prefix = build_prefix(4);
    // after foldXY (first 3 stages) both coordinates are >= 0; after every
    // later foldX block the second coordinate is >= 0
    for (int i = 0; i < 500; ++i) {
        const Point2 p{coord(rng), coord(rng)};
        const std::vector<Stage> head3(prefix.begin(), prefix.begin() + 3);
        const Point2 q = apply_stages(head3, p);
        CHECK(q.x >= 0.0);
        CHECK(q.y >= 0.0);
        for (std::size_t end = 7; end <= prefix.size(); end += 4) {
            const std::vector<Stage> sub(prefix.begin(), prefix.begin() + end);
            CHECK(apply_stages(sub, p).y >= 0.0);
        }
    }
}

TEST_CASE("network is even in each coordinate") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int m : {1, 2, 5}) {
        const MlpNetwork net = collapse(build_network(m));
        for (int i = 0; i < 1000; ++i) {
            const Point2 p{coord(rng), coord(rng)};
            const double v = net.evaluate_pre_sign(p);
            CHECK(std::abs(net.evaluate_pre_sign({-p.x, p.y}) - v) <= 1e-9);
            CHECK(std::abs(net.evaluate_pre_sign({p.x, -p.y}) - v) <= 1e-9);
        }
    }
}

TEST_CASE("zero error against the oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const ProblemInstance problem(5);
    const MlpNetwork net = collapse(build_network(5));
    int mismatches = 0;
    for (int i = 0; i < 100000; ++i) {
        const Point2 p{coord(rng), coord(rng)};
        const Label truth = problem.classify_point(p);
        if (truth == Label::Boundary || problem.boundary_distance(p) < 1e-6) continue;
        if (net.classify(p) != static_cast<int>(truth)) ++mismatches;
    }
    CHECK(mismatches == 0);
}
