#include "foldnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace foldnet {

namespace {

bool finite_point(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const Point2& p, const Point2& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

}  // namespace

Line Line::from_coefficients(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > kNormTol)) {
        throw std::invalid_argument("line normal is (0, 0)");
    }
    return Line{a / n, b / n, c / n};
}

Line Line::through(const Point2& p, const Point2& q) {
    // Normal points to the left of the direction p -> q.
    const double a = -(q.y - p.y);
    const double b = q.x - p.x;
    const double c = -(a * p.x + b * p.y);
    return from_coefficients(a, b, c);
}

Side point_side(const Line& line, const Point2& p, double tol) {
    const double v = line.signed_value(p);
    if (std::abs(v) <= tol) return Side::On;
    return v > 0 ? Side::Positive : Side::Negative;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw std::invalid_argument("convex polygon needs at least 3 vertices");
    }
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!finite_point(vertices_[i])) {
            throw std::invalid_argument("non-finite polygon vertex");
        }
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const Point2& c = vertices_[(i + 2) % n];
        if (dist(a, b) < kNormTol) {
            throw std::invalid_argument("duplicate consecutive polygon vertices");
        }
        if (cross(a, b, c) < -kNormTol) {
            throw std::invalid_argument("polygon is not counterclockwise convex");
        }
    }
}

double ConvexPolygon::area() const {
    double s = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

Point2 ConvexPolygon::centroid() const {
    const std::size_t n = vertices_.size();
    double cx = 0.0, cy = 0.0, s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const double w = a.x * b.y - b.x * a.y;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
        s += w;
    }
    if (std::abs(s) < 1e-300) {
        // Degenerate sliver: fall back to the vertex mean.
        cx = cy = 0.0;
        for (const Point2& v : vertices_) {
            cx += v.x;
            cy += v.y;
        }
        return {cx / static_cast<double>(n), cy / static_cast<double>(n)};
    }
    return {cx / (3.0 * s), cy / (3.0 * s)};
}

bool ConvexPolygon::contains(const Point2& p, double tol) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const double len = dist(a, b);
        if (cross(a, b, p) < -tol * len) return false;
    }
    return true;
}

ConvexPolygon ConvexPolygon::axis_aligned_box(double x0, double y0, double x1, double y1) {
    if (!(x0 < x1 && y0 < y1)) {
        throw std::invalid_argument("degenerate bounding box");
    }
    return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

namespace {

// Builds one half-plane part of a clip. `flip` selects the negative side.
std::optional<ConvexPolygon> clip_side(const ConvexPolygon& poly, const Line& line, bool flip) {
    constexpr double kOnEps = 1e-12;
    const std::vector<Point2>& vs = poly.vertices();
    const std::size_t n = vs.size();
    std::vector<double> val(n);
    for (std::size_t i = 0; i < n; ++i) {
        val[i] = line.signed_value(vs[i]) * (flip ? -1.0 : 1.0);
    }
    std::vector<Point2> out;
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (val[i] >= -kOnEps) out.push_back(vs[i]);
        if ((val[i] > kOnEps && val[j] < -kOnEps) || (val[i] < -kOnEps && val[j] > kOnEps)) {
            const double t = val[i] / (val[i] - val[j]);
            out.push_back({vs[i].x + t * (vs[j].x - vs[i].x), vs[i].y + t * (vs[j].y - vs[i].y)});
        }
    }
    // Cleanup: merge near-duplicate vertices, drop collinear / noise-reflex
    // middle vertices so the ConvexPolygon invariants hold.
    auto cleanup = [](std::vector<Point2>& v) {
        bool changed = true;
        while (changed && v.size() >= 3) {
            changed = false;
            for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
                const std::size_t j = (i + 1) % v.size();
                if (dist(v[i], v[j]) < kNormTol) {
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
            }
            for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
                const std::size_t h = (i + v.size() - 1) % v.size();
                const std::size_t j = (i + 1) % v.size();
                if (cross(v[h], v[i], v[j]) < 1e-15) {
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            }
        }
    };
    cleanup(out);
    if (out.size() < 3) return std::nullopt;
    ConvexPolygon part(std::move(out));
    if (part.area() < kAreaTol) return std::nullopt;
    return part;
}

}  // namespace

ClipResult clip_by_line(const ConvexPolygon& poly, const Line& line) {
    return ClipResult{clip_side(poly, line, false), clip_side(poly, line, true)};
}

ConvexPolygon regular_polygon(int m) {
    if (m < 1 || m > 24) {
        throw std::invalid_argument("regular_polygon: m must be in [1, 24]");
    }
    const std::size_t n = std::size_t{1} << (m + 1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<Point2> vs(n);
    vs[0] = {0.0, 1.0};
    for (std::size_t k = 1; k < n; ++k) {
        const double ang = std::numbers::pi / 2.0 + static_cast<double>(k) * step;
        vs[k] = {std::cos(ang), std::sin(ang)};
    }
    return ConvexPolygon(std::move(vs));
}

ProblemInstance::ProblemInstance(int m) : m_(m), polygon_(regular_polygon(m)) {}

double ProblemInstance::inradius() const {
    const double n = static_cast<double>(std::size_t{1} << (m_ + 1));
    return std::cos(std::numbers::pi / n);
}

namespace {

// Sector index of p: the edge between vertices k and k+1 (angles measured
// from the (0,1) vertex, counterclockwise).
std::size_t sector_of(const Point2& p, std::size_t n) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    double rel = std::atan2(p.y, p.x) - std::numbers::pi / 2.0;
    rel = std::fmod(rel, 2.0 * std::numbers::pi);
    if (rel < 0) rel += 2.0 * std::numbers::pi;
    std::size_t k = static_cast<std::size_t>(rel / step);
    if (k >= n) k = n - 1;
    return k;
}

}  // namespace

double ProblemInstance::boundary_distance(const Point2& p) const {
    const std::vector<Point2>& vs = polygon_.vertices();
    const std::size_t n = vs.size();
    if (p.x == 0.0 && p.y == 0.0) return inradius();
    const std::size_t k = sector_of(p, n);
    double best = std::numeric_limits<double>::infinity();
    // The closest edge is the sector edge or one of its near neighbors.
    for (std::size_t off = n - 2; off <= n + 2; ++off) {
        const std::size_t i = (k + off) % n;
        best = std::min(best, segment_distance(p, vs[i], vs[(i + 1) % n]));
    }
    return best;
}

Label ProblemInstance::classify_point(const Point2& p, double boundary_tol) const {
    if (!finite_point(p)) {
        throw std::invalid_argument("classify_point: non-finite point");
    }
    if (boundary_distance(p) <= boundary_tol) return Label::Boundary;
    if (p.x == 0.0 && p.y == 0.0) return Label::Plus;
    const double r = std::hypot(p.x, p.y);
    if (r > 1.0) return Label::Minus;
    if (r < inradius()) return Label::Plus;
    const std::vector<Point2>& vs = polygon_.vertices();
    const std::size_t n = vs.size();
    const std::size_t k = sector_of(p, n);
    return cross(vs[k], vs[(k + 1) % n], p) > 0 ? Label::Plus : Label::Minus;
}

std::vector<Point2> ProblemInstance::v_even_prime(double epsilon) const {
    if (!(epsilon > 0.0 && epsilon <= 0.1)) {
        throw std::invalid_argument("v_even_prime: epsilon must be in (0, 0.1]");
    }
    const std::vector<Point2>& vs = polygon_.vertices();
    std::vector<Point2> out;
    out.reserve(vs.size() / 2);
    for (std::size_t i = 0; i < vs.size(); i += 2) {
        out.push_back({vs[i].x * (1.0 + epsilon), vs[i].y * (1.0 + epsilon)});
    }
    return out;
}

bool ProblemInstance::chord_crosses_boundary(const Point2& p, const Point2& q) const {
    if (dist(p, q) < kNormTol) {
        throw std::invalid_argument("chord endpoints coincide");
    }
    // Clip the segment parameter t in [0,1] against every inward half-plane;
    // a surviving open interval means the chord dips inside P_m.
    const std::vector<Point2>& vs = polygon_.vertices();
    const std::size_t n = vs.size();
    double t0 = 0.0, t1 = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Line edge = Line::through(vs[i], vs[(i + 1) % n]);
        const double fp = edge.signed_value(p);
        const double fq = edge.signed_value(q);
        const double d = fq - fp;
        if (std::abs(d) < 1e-300) {
            if (fp <= 0.0) return false;
            continue;
        }
        const double t = -fp / d;
        if (d > 0) {
            t0 = std::max(t0, t);
        } else {
            t1 = std::min(t1, t);
        }
        if (t0 >= t1) return false;
    }
    if (t1 - t0 < 1e-12) return false;
    const double tm = 0.5 * (t0 + t1);
    const Point2 mid{p.x + tm * (q.x - p.x), p.y + tm * (q.y - p.y)};
    return classify_point(mid) == Label::Plus;
}

}  // namespace foldnet
