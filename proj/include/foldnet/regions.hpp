#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "foldnet/geometry.hpp"
#include "foldnet/network.hpp"

namespace foldnet {

/// One linear response region: the polygon, the activation pattern on its
/// interior, the last-layer output as an affine function of the raw input,
/// and the head value likewise.
struct Region {
    ConvexPolygon polygon;
    ActivationPattern pattern;
    AffineLayer restricted_map;          // 2x2 + bias, raw input -> pre-head values
    double pre_sign_a, pre_sign_b, pre_sign_c;  // head value = a*x + b*y + c
};

/// Full partition of a bounding box into linear response regions,
/// canonically ordered (pattern bits, then centroid).
class Decomposition {
public:
    Decomposition(MlpNetwork net, ConvexPolygon bbox, std::vector<Region> regions);

    const MlpNetwork& net() const { return net_; }
    const ConvexPolygon& bbox() const { return bbox_; }
    const std::vector<Region>& regions() const { return regions_; }

    /// Index of the first region (canonical order) containing p.
    std::size_t region_of_point(const Point2& p, double tol = kGeomTol) const;

private:
    MlpNetwork net_;
    ConvexPolygon bbox_;
    std::vector<Region> regions_;
};

/// Thrown when a refinement would exceed the region budget.
struct RegionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kRegionBudget = 1'000'000;

/// Layer-wise convex refinement: splits the box by each neuron's zero line
/// restricted to the current region, layer by layer.
Decomposition enumerate_regions(const MlpNetwork& net, const ConvexPolygon& bbox,
                                std::size_t budget = kRegionBudget);

/// 1 + n(n+1)/2: maximal cell count of an arrangement of n lines.
long long line_arrangement_max_regions(long long n);

/// w^(2d); throws std::domain_error on 64-bit overflow.
long long region_upper_bound(int w, int d);

/// Number of distinct activation patterns on a resolution x resolution grid
/// over the box; a brute-force lower bound on the true region count.
long long grid_pattern_count(const MlpNetwork& net, const ConvexPolygon& bbox, int resolution);

}  // namespace foldnet
