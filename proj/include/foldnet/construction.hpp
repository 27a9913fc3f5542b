#pragma once

#include <vector>

#include "foldnet/network.hpp"

namespace foldnet {

/// Rotation angles for the fold construction: pi/4, pi/8, ..., pi/2^(m+1).
struct FoldPlan {
    int m;
    std::vector<double> rotation_angles;

    static FoldPlan for_problem(int m);
};

/// (x, y) -> (|x|, |y|): linear 4x2, ReLU, linear 2x4.
std::vector<Stage> make_fold_xy();

/// (x, y) -> (x, |y|) for x >= 0: linear 3x2, ReLU, linear 2x3.
std::vector<Stage> make_fold_x();

/// Clockwise rotation by theta (sign convention resolved empirically, see
/// resolved_rotation_sign).
Stage make_rotation(double theta);

/// +1 or -1; the sense that makes the m=2 construction match the
/// ground-truth oracle on a grid. Resolved once, then cached.
int resolved_rotation_sign();

/// Derives the head line by pushing one endpoint and the midpoint of the
/// surviving polygon edge (the first-quadrant edge at (0,1)) through the
/// fold/rotate prefix, oriented so the origin classifies +1.
OutputHead derive_top(int m, const std::vector<Stage>& prefix);

/// Stage sequence for f_m, without the head: foldXY, then m rounds of
/// rotate + foldX with halving angles.
std::vector<Stage> build_prefix(int m);

StagedNetwork build_network(int m);

}  // namespace foldnet
