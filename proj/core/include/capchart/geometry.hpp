#pragma once

#include <array>
#include <span>
#include <vector>

namespace capchart {

// Per-feeder real power injections, per-unit. Valid transfers are balanced:
// p[0] + p[1] + p[2] = 0 (Kirchhoff), enforced to 1e-12 where it matters.
struct PowerTransfer {
    std::array<double, 3> p{0.0, 0.0, 0.0};
};

// Point in the orthonormal frame spanning the balance plane sum(p) = 0:
//   px_hat = (1, 0, -1)/sqrt(2),  py_hat = (-1, 2, -1)/sqrt(6).
// The same struct doubles as a plain 2-D point where the frame is implied
// by context (e.g. nominal (p1, p2) coordinates).
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

// Boundary of a capability region: CCW vertex loop, first vertex not
// repeated at the end. Degenerate values (fewer than 3 distinct vertices,
// or zero signed area) are legal and stand for zero-area capability sets.
struct ChartPolygon {
    std::vector<PlanePoint> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

// Vertices closer than this (Euclidean, pu) are considered coincident.
inline constexpr double kVertexTol = 1e-12;

// Balance tolerance on sum(p).
inline constexpr double kBalanceTol = 1e-12;

/// (x, y) = (p . px_hat, p . py_hat). Throws std::invalid_argument when the
/// transfer is unbalanced beyond 1e-12.
PlanePoint nominal_to_plane(const PowerTransfer& p);

/// p = x * px_hat + y * py_hat. Exactly balanced by construction;
/// round-trips with nominal_to_plane to 1e-12.
PowerTransfer plane_to_nominal(const PlanePoint& q);

/// Nonnegative shoelace area. Degenerate polygons give 0. Throws
/// std::invalid_argument on a properly self-intersecting vertex loop;
/// detection is a tolerance-based segment-crossing test, adequate for the
/// convex and star-shaped polygons this library produces but not a general
/// exact predicate.
double polygon_area(const ChartPolygon& poly);

/// Signed shoelace area (positive for CCW). No validation.
double signed_area(const ChartPolygon& poly);

/// Copy with orientation normalised to CCW (signed area >= 0).
ChartPolygon ensure_ccw(ChartPolygon poly);

/// Keeps the part of `poly` on the left of the directed line a -> b
/// (one Sutherland-Hodgman pass). Convexity is preserved.
ChartPolygon clip_halfplane(const ChartPolygon& poly, const PlanePoint& a,
                            const PlanePoint& b);

/// Intersection of two convex polygons, CCW, possibly degenerate or empty.
/// Throws std::invalid_argument when either input is non-convex.
ChartPolygon clip_convex(const ChartPolygon& subject, const ChartPolygon& clip);

/// True when every consecutive edge pair turns left or is collinear
/// (cross products >= -tol after CCW normalisation). Degenerate polygons
/// count as convex.
bool is_convex_polygon(const ChartPolygon& poly, double tol = kVertexTol);

/// Point membership for a convex CCW polygon, boundary inclusive within tol.
bool point_in_convex(const ChartPolygon& poly, const PlanePoint& pt,
                     double tol = 1e-9);

/// Area of the union of convex polygons via inclusion-exclusion over all
/// nonempty subsets, each subset intersected with clip_convex. Members with
/// zero area are dropped first (they never contribute area); at most 16
/// polygons may remain, otherwise std::invalid_argument.
double union_area(std::span<const ChartPolygon> polys);

/// Boundary polygon of the union of convex polygons that each contain the
/// origin. The union is star-shaped about the origin; the boundary is
/// recovered with an angular sweep over all vertex and edge-crossing events,
/// taking the outermost polygon on each angular interval. If every member is
/// degenerate the first member is returned unchanged (the union has zero
/// area and no simple-polygon boundary). Throws std::invalid_argument when a
/// non-degenerate member does not contain the origin.
ChartPolygon union_boundary(std::span<const ChartPolygon> polys);

} // namespace capchart
