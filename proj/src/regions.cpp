#include "foldnet/regions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

namespace foldnet {

namespace {

AffineLayer identity_map() {
    Matrix w(2, 2);
    w.at(0, 0) = w.at(1, 1) = 1.0;
    return AffineLayer(std::move(w), {0.0, 0.0});
}

struct WorkRegion {
    ConvexPolygon polygon;
    ActivationPattern pattern;
    AffineLayer map;  // raw input -> current layer input
};

// Applies the per-region ReLU mask: rows with bit 0 become zero.
AffineLayer mask_rows(const AffineLayer& pre, const std::vector<std::uint8_t>& bits) {
    AffineLayer out = pre;
    for (std::size_t r = 0; r < out.out_dim(); ++r) {
        if (!bits[r]) {
            out.bias[r] = 0.0;
            for (std::size_t c = 0; c < out.in_dim(); ++c) {
                out.weights.at(r, c) = 0.0;
            }
        }
    }
    return out;
}

}  // namespace

Decomposition::Decomposition(MlpNetwork net, ConvexPolygon bbox, std::vector<Region> regions)
    : net_(std::move(net)), bbox_(std::move(bbox)), regions_(std::move(regions)) {}

std::size_t Decomposition::region_of_point(const Point2& p, double tol) const {
    if (!bbox_.contains(p, tol)) {
        throw std::domain_error("region_of_point: point outside bounding box");
    }
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        if (regions_[i].polygon.contains(p, tol)) return i;
    }
    throw std::runtime_error("region_of_point: no region contains the point");
}

Decomposition enumerate_regions(const MlpNetwork& net, const ConvexPolygon& bbox,
                                std::size_t budget) {
    constexpr double kOnEps = 1e-12;
    std::vector<WorkRegion> current;
    current.push_back({bbox, {}, identity_map()});

    const std::vector<AffineLayer>& layers = net.layers();
    const std::size_t relu_layers = net.relu_depth();

    for (std::size_t li = 0; li < relu_layers; ++li) {
        std::vector<WorkRegion> next;
        for (WorkRegion& region : current) {
            const AffineLayer pre = compose(layers[li], region.map);
            const std::size_t width = pre.out_dim();

            struct Piece {
                ConvexPolygon polygon;
                std::vector<std::uint8_t> bits;
            };
            std::vector<Piece> pieces;
            pieces.push_back({region.polygon, {}});

            for (std::size_t neuron = 0; neuron < width; ++neuron) {
                const double a = pre.weights.at(neuron, 0);
                const double b = pre.weights.at(neuron, 1);
                const double c = pre.bias[neuron];
                std::vector<Piece> split;
                split.reserve(pieces.size());
                if (std::hypot(a, b) < kNormTol) {
                    // Constant pre-activation over the whole region.
                    const std::uint8_t bit = c > 0.0 ? 1 : 0;
                    for (Piece& piece : pieces) {
                        piece.bits.push_back(bit);
                        split.push_back(std::move(piece));
                    }
                    pieces = std::move(split);
                    continue;
                }
                const Line line = Line::from_coefficients(a, b, c);
                for (Piece& piece : pieces) {
                    double lo = std::numeric_limits<double>::infinity();
                    double hi = -lo;
                    for (const Point2& v : piece.polygon.vertices()) {
                        const double s = line.signed_value(v);
                        lo = std::min(lo, s);
                        hi = std::max(hi, s);
                    }
                    if (lo >= -kOnEps || hi <= kOnEps) {
                        // Line misses the piece interior: no split.
                        piece.bits.push_back(line.signed_value(piece.polygon.centroid()) > 0.0 ? 1 : 0);
                        split.push_back(std::move(piece));
                        continue;
                    }
                    ClipResult clipped = clip_by_line(piece.polygon, line);
                    if (clipped.positive) {
                        Piece pos{std::move(*clipped.positive), piece.bits};
                        pos.bits.push_back(1);
                        split.push_back(std::move(pos));
                    }
                    if (clipped.negative) {
                        Piece neg{std::move(*clipped.negative), std::move(piece.bits)};
                        neg.bits.push_back(0);
                        split.push_back(std::move(neg));
                    }
                }
                pieces = std::move(split);
                if (next.size() + pieces.size() > budget) {
                    throw RegionBudgetExceeded("region budget exceeded during refinement");
                }
            }

            for (Piece& piece : pieces) {
                WorkRegion w{std::move(piece.polygon), region.pattern, mask_rows(pre, piece.bits)};
                w.pattern.bits.push_back(std::move(piece.bits));
                next.push_back(std::move(w));
            }
        }
        current = std::move(next);
        if (current.size() > budget) {
            throw RegionBudgetExceeded("region budget exceeded");
        }
    }

    const OutputHead& head = net.head();
    std::vector<Region> regions;
    regions.reserve(current.size());
    for (WorkRegion& w : current) {
        const AffineLayer restricted =
            layers.empty() ? w.map : compose(layers.back(), w.map);
        const double a = head.a * restricted.weights.at(0, 0) + head.b * restricted.weights.at(1, 0);
        const double b = head.a * restricted.weights.at(0, 1) + head.b * restricted.weights.at(1, 1);
        const double c = head.a * restricted.bias[0] + head.b * restricted.bias[1] + head.c;
        regions.push_back({std::move(w.polygon), std::move(w.pattern), restricted, a, b, c});
    }

    std::sort(regions.begin(), regions.end(), [](const Region& lhs, const Region& rhs) {
        if (lhs.pattern.bits != rhs.pattern.bits) return lhs.pattern.bits < rhs.pattern.bits;
        const Point2 lc = lhs.polygon.centroid();
        const Point2 rc = rhs.polygon.centroid();
        return std::tie(lc.x, lc.y) < std::tie(rc.x, rc.y);
    });
    return Decomposition(net, bbox, std::move(regions));
}

long long line_arrangement_max_regions(long long n) {
    if (n < 0) throw std::domain_error("line_arrangement_max_regions: n must be >= 0");
    return 1 + n * (n + 1) / 2;
}

long long region_upper_bound(int w, int d) {
    if (w < 1 || d < 1) throw std::domain_error("region_upper_bound: w, d must be >= 1");
    long long result = 1;
    for (int i = 0; i < 2 * d; ++i) {
        if (result > std::numeric_limits<long long>::max() / w) {
            throw std::domain_error("region_upper_bound: w^(2d) overflows 64 bits");
        }
        result *= w;
    }
    return result;
}

long long grid_pattern_count(const MlpNetwork& net, const ConvexPolygon& bbox, int resolution) {
    if (resolution < 8) throw std::domain_error("grid_pattern_count: resolution must be >= 8");
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    for (const Point2& v : bbox.vertices()) {
        x0 = std::min(x0, v.x);
        y0 = std::min(y0, v.y);
        x1 = std::max(x1, v.x);
        y1 = std::max(y1, v.y);
    }
    std::set<ActivationPattern> seen;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const Point2 p{x0 + (x1 - x0) * (i + 0.5) / resolution,
                           y0 + (y1 - y0) * (j + 0.5) / resolution};
            seen.insert(net.activation_pattern(p));
        }
    }
    return static_cast<long long>(seen.size());
}

}  // namespace foldnet
