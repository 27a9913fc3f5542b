#include "foldnet/construction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "foldnet/geometry.hpp"

namespace foldnet {

namespace {

AffineLayer linear(std::size_t rows, std::size_t cols, std::vector<double> w) {
    return AffineLayer(Matrix(rows, cols, std::move(w)), std::vector<double>(rows, 0.0));
}

Stage rotation_stage(double theta, int sign) {
    const double c = std::cos(theta);
    const double s = std::sin(theta) * static_cast<double>(sign);
    // sign=+1: clockwise; sign=-1: the paper's printed (counterclockwise) matrix.
    return linear(2, 2, {c, s, -s, c});
}

std::vector<Stage> build_prefix_with_sign(int m, int sign) {
    std::vector<Stage> stages = make_fold_xy();
    for (int k = 0; k < m; ++k) {
        const double theta = std::numbers::pi / std::pow(2.0, k + 2);
        stages.push_back(rotation_stage(theta, sign));
        std::vector<Stage> fx = make_fold_x();
        stages.insert(stages.end(), fx.begin(), fx.end());
    }
    return stages;
}

StagedNetwork build_with_sign(int m, int sign) {
    std::vector<Stage> prefix = build_prefix_with_sign(m, sign);
    OutputHead head = derive_top(m, prefix);
    return StagedNetwork(std::move(prefix), head);
}

// Grid error count of a candidate network against the ground-truth oracle,
// skipping the boundary band.
int grid_mismatches(const StagedNetwork& net, int m, int resolution) {
    const ProblemInstance problem(m);
    int mismatches = 0;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const Point2 p{-2.0 + 4.0 * (i + 0.5) / resolution,
                           -2.0 + 4.0 * (j + 0.5) / resolution};
            const Label truth = problem.classify_point(p);
            if (truth == Label::Boundary || problem.boundary_distance(p) < 1e-6) continue;
            const int got = net.evaluate_pre_sign(p) > 0.0 ? 1 : -1;
            if (got != static_cast<int>(truth)) ++mismatches;
        }
    }
    return mismatches;
}

}  // namespace

FoldPlan FoldPlan::for_problem(int m) {
    if (m < 1) throw std::invalid_argument("FoldPlan: m must be positive");
    FoldPlan plan{m, {}};
    plan.rotation_angles.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        plan.rotation_angles.push_back(std::numbers::pi / std::pow(2.0, k + 2));
    }
    return plan;
}

std::vector<Stage> make_fold_xy() {
    return {linear(4, 2, {-1, 0, 1, 0, 0, 1, 0, -1}),
            ReluStage{},
            linear(2, 4, {1, 1, 0, 0, 0, 0, 1, 1})};
}

std::vector<Stage> make_fold_x() {
    return {linear(3, 2, {1, 0, 0, 1, 0, -1}),
            ReluStage{},
            linear(2, 3, {1, 0, 0, 0, 1, 1})};
}

int resolved_rotation_sign() {
    static const int sign = [] {
        for (int s : {+1, -1}) {
            if (grid_mismatches(build_with_sign(2, s), 2, 100) == 0) return s;
        }
        throw std::runtime_error("neither rotation sense reproduces the oracle");
    }();
    return sign;
}

Stage make_rotation(double theta) {
    return rotation_stage(theta, resolved_rotation_sign());
}

OutputHead derive_top(int m, const std::vector<Stage>& prefix) {
    const ConvexPolygon poly = regular_polygon(m);
    const std::vector<Point2>& vs = poly.vertices();
    // Edge from (0,1) to its first-quadrant neighbor; the endpoints fold
    // onto each other across the edge midpoint, so the endpoint image and
    // the midpoint image span the final decision line.
    const Point2 top_vertex = vs[0];
    const Point2 neighbor = vs[vs.size() - 1];
    const Point2 mid{0.5 * (top_vertex.x + neighbor.x), 0.5 * (top_vertex.y + neighbor.y)};
    const std::vector<double> iu = evaluate_stages(prefix, top_vertex);
    const std::vector<double> iv = evaluate_stages(prefix, mid);
    const Point2 u{iu[0], iu[1]};
    const Point2 v{iv[0], iv[1]};
    if (std::hypot(u.x - v.x, u.y - v.y) < 1e-9) {
        throw std::runtime_error("derive_top: degenerate edge image");
    }
    Line line = Line::through(u, v);
    // The origin is a fixed point of every bias-free stage; it must land on
    // the +1 side.
    if (line.c < 0.0) line = Line{-line.a, -line.b, -line.c};
    if (line.c == 0.0) {
        throw std::runtime_error("derive_top: decision line passes through the origin");
    }
    return OutputHead{line.a, line.b, line.c};
}

std::vector<Stage> build_prefix(int m) {
    if (m < 1 || m > 16) {
        throw std::invalid_argument("build_network: m must be in [1, 16]");
    }
    return build_prefix_with_sign(m, resolved_rotation_sign());
}

StagedNetwork build_network(int m) {
    std::vector<Stage> prefix = build_prefix(m);
    OutputHead head = derive_top(m, prefix);
    return StagedNetwork(std::move(prefix), head);
}

}  // namespace foldnet
