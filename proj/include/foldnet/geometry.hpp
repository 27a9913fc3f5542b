#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace foldnet {

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kAreaTol = 1e-18;
inline constexpr double kNormTol = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

enum class Label : int { Minus = -1, Boundary = 0, Plus = 1 };

enum class Side : int { Negative = -1, On = 0, Positive = 1 };

/// Oriented line a*x + b*y + c = 0, stored with a^2 + b^2 = 1.
/// The positive side is where a*x + b*y + c > 0.
struct Line {
    double a, b, c;

    static Line from_coefficients(double a, double b, double c);
    static Line through(const Point2& p, const Point2& q);

    double signed_value(const Point2& p) const { return a * p.x + b * p.y + c; }
};

Side point_side(const Line& line, const Point2& p, double tol = kGeomTol);

/// Convex polygon, vertices in counterclockwise order.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double area() const;
    Point2 centroid() const;
    bool contains(const Point2& p, double tol = kGeomTol) const;

    static ConvexPolygon axis_aligned_box(double x0, double y0, double x1, double y1);

private:
    std::vector<Point2> vertices_;
};

struct ClipResult {
    std::optional<ConvexPolygon> positive;
    std::optional<ConvexPolygon> negative;
};

/// Splits a convex polygon by an oriented line. Parts with area below
/// kAreaTol (or fewer than 3 distinct vertices) come back absent.
ClipResult clip_by_line(const ConvexPolygon& poly, const Line& line);

/// The pair (m, P_m): a regular polygon with 2^(m+1) edges inscribed in
/// the unit circle, one vertex at (0, 1).
class ProblemInstance {
public:
    explicit ProblemInstance(int m);

    int m() const { return m_; }
    const ConvexPolygon& polygon() const { return polygon_; }
    std::size_t edge_count() const { return polygon_.size(); }
    double inradius() const;

    /// Ground-truth classifier f_m. Points within kGeomTol of an edge get
    /// the Boundary label.
    Label classify_point(const Point2& p, double boundary_tol = kGeomTol) const;

    /// Distance from p to the polygon boundary (exploits regularity, O(1)).
    double boundary_distance(const Point2& p) const;

    /// Every second vertex, pushed radially out by epsilon. 2^m points,
    /// all strictly outside P_m.
    std::vector<Point2> v_even_prime(double epsilon) const;

    /// True iff the open segment (p, q) passes strictly inside P_m.
    bool chord_crosses_boundary(const Point2& p, const Point2& q) const;

private:
    int m_;
    ConvexPolygon polygon_;
};

ConvexPolygon regular_polygon(int m);

}  // namespace foldnet
