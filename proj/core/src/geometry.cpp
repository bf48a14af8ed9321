#include "capchart/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace capchart {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
const double kSqrt6 = kSqrt2 * kSqrt3;

double cross(const PlanePoint& u, const PlanePoint& v) {
    return u.x * v.y - u.y * v.x;
}

PlanePoint sub(const PlanePoint& a, const PlanePoint& b) {
    return {a.x - b.x, a.y - b.y};
}

double dist2(const PlanePoint& a, const PlanePoint& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Merge consecutive vertices (including the wrap pair) closer than kVertexTol.
std::vector<PlanePoint> dedup(const std::vector<PlanePoint>& in) {
    std::vector<PlanePoint> out;
    out.reserve(in.size());
    for (const auto& v : in) {
        if (out.empty() || dist2(out.back(), v) > kVertexTol * kVertexTol) {
            out.push_back(v);
        }
    }
    while (out.size() >= 2 && dist2(out.front(), out.back()) <= kVertexTol * kVertexTol) {
        out.pop_back();
    }
    return out;
}

// Intersection of the segment s -> e with the infinite line a -> b.
// Callers only invoke this when s and e straddle the line, so the
// denominator is well conditioned; the midpoint fallback is for safety.
PlanePoint line_intersection(const PlanePoint& s, const PlanePoint& e,
                             const PlanePoint& a, const PlanePoint& b) {
    const PlanePoint r = sub(e, s);
    const PlanePoint d = sub(b, a);
    const double denom = cross(r, d);
    if (std::abs(denom) < 1e-300) {
        return {0.5 * (s.x + e.x), 0.5 * (s.y + e.y)};
    }
    const double t = cross(sub(a, s), d) / denom;
    return {s.x + t * r.x, s.y + t * r.y};
}

// Proper (transversal) crossing between non-adjacent edges; touching and
// collinear overlap are not flagged.
bool segments_cross(const PlanePoint& a, const PlanePoint& b,
                    const PlanePoint& c, const PlanePoint& d) {
    constexpr double eps = 1e-12;
    const auto straddles = [](double s1, double s2) {
        return (s1 > eps && s2 < -eps) || (s1 < -eps && s2 > eps);
    };
    const double d1 = cross(sub(b, a), sub(c, a));
    const double d2 = cross(sub(b, a), sub(d, a));
    const double d3 = cross(sub(d, c), sub(a, c));
    const double d4 = cross(sub(d, c), sub(b, c));
    return straddles(d1, d2) && straddles(d3, d4);
}

// Distance from the origin to the boundary of a convex CCW polygon along
// direction (cos th, sin th). The polygon must contain the origin; the exit
// distance is the minimum over the supporting half-planes hit by the ray.
double radial_distance(const ChartPolygon& poly, double cos_th, double sin_th) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& a = v[i];
        const PlanePoint& b = v[(i + 1) % n];
        // Outward normal of a CCW edge.
        const double nx = b.y - a.y;
        const double ny = a.x - b.x;
        const double h = nx * a.x + ny * a.y;  // >= 0 when origin inside
        const double denom = nx * cos_th + ny * sin_th;
        if (denom > 1e-300) {
            r = std::min(r, std::max(0.0, h / denom));
        }
    }
    return r;
}

// Intersection point of two segments if they cross transversally (endpoints
// included); collinear overlaps are skipped, their endpoints are already
// sweep events.
bool segment_intersection(const PlanePoint& p1, const PlanePoint& p2,
                          const PlanePoint& q1, const PlanePoint& q2,
                          PlanePoint& out) {
    const PlanePoint r = sub(p2, p1);
    const PlanePoint s = sub(q2, q1);
    const double denom = cross(r, s);
    if (std::abs(denom) < 1e-15) return false;
    const PlanePoint qp = sub(q1, p1);
    const double t = cross(qp, s) / denom;
    const double u = cross(qp, r) / denom;
    constexpr double eps = 1e-12;
    if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) return false;
    out = {p1.x + t * r.x, p1.y + t * r.y};
    return true;
}

void validate_convex(const ChartPolygon& poly, const char* who) {
    if (!is_convex_polygon(poly)) {
        std::ostringstream msg;
        msg << who << ": polygon is not convex";
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

PlanePoint nominal_to_plane(const PowerTransfer& p) {
    const double sum = p.p[0] + p.p[1] + p.p[2];
    if (!(std::abs(sum) <= kBalanceTol)) {
        std::ostringstream msg;
        msg << "power transfer violates sum(p) = 0: sum = " << sum;
        throw std::invalid_argument(msg.str());
    }
    return {(p.p[0] - p.p[2]) / kSqrt2, (-p.p[0] + 2.0 * p.p[1] - p.p[2]) / kSqrt6};
}

PowerTransfer plane_to_nominal(const PlanePoint& q) {
    const double a = q.x / kSqrt2;
    const double b = q.y / kSqrt6;
    return {{a - b, 2.0 * b, -a - b}};
}

double signed_area(const ChartPolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& p = v[i];
        const PlanePoint& q = v[(i + 1) % n];
        a += cross(p, q);
    }
    return 0.5 * a;
}

double polygon_area(const ChartPolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n >= 4) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                // Skip adjacent edges (shared endpoint), including the wrap pair.
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;
                if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
                    throw std::invalid_argument("polygon_area: self-intersecting polygon");
                }
            }
        }
    }
    return std::abs(signed_area(poly));
}

ChartPolygon ensure_ccw(ChartPolygon poly) {
    if (signed_area(poly) < 0.0) {
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    }
    return poly;
}

ChartPolygon clip_halfplane(const ChartPolygon& poly, const PlanePoint& a,
                            const PlanePoint& b) {
    constexpr double eps = kVertexTol;
    const auto& in = poly.vertices;
    if (in.empty()) return {};
    const PlanePoint dir = sub(b, a);

    std::vector<PlanePoint> out;
    out.reserve(in.size() + 2);
    PlanePoint s = in.back();
    double s_side = cross(dir, sub(s, a));
    for (const PlanePoint& e : in) {
        const double e_side = cross(dir, sub(e, a));
        const bool e_in = e_side >= -eps;
        const bool s_in = s_side >= -eps;
        if (e_in) {
            if (!s_in) out.push_back(line_intersection(s, e, a, b));
            out.push_back(e);
        } else if (s_in) {
            out.push_back(line_intersection(s, e, a, b));
        }
        s = e;
        s_side = e_side;
    }
    return {dedup(out)};
}

ChartPolygon clip_convex(const ChartPolygon& subject, const ChartPolygon& clip) {
    validate_convex(subject, "clip_convex(subject)");
    validate_convex(clip, "clip_convex(clip)");

    if (clip.vertices.empty() || subject.vertices.empty()) return {};
    if (clip.vertices.size() == 1) {
        return point_in_convex(ensure_ccw(subject), clip.vertices[0], kVertexTol)
                   ? clip
                   : ChartPolygon{};
    }

    ChartPolygon result = ensure_ccw(subject);
    const ChartPolygon c = ensure_ccw(clip);
    const std::size_t n = c.vertices.size();
    for (std::size_t i = 0; i < n && !result.vertices.empty(); ++i) {
        result = clip_halfplane(result, c.vertices[i], c.vertices[(i + 1) % n]);
    }
    return ensure_ccw(std::move(result));
}

bool is_convex_polygon(const ChartPolygon& poly, double tol) {
    const ChartPolygon ccw = ensure_ccw(poly);
    const auto v = dedup(ccw.vertices);
    const std::size_t n = v.size();
    if (n < 4) return true;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint e1 = sub(v[(i + 1) % n], v[i]);
        const PlanePoint e2 = sub(v[(i + 2) % n], v[(i + 1) % n]);
        if (cross(e1, e2) < -tol) return false;
    }
    return true;
}

bool point_in_convex(const ChartPolygon& poly, const PlanePoint& pt, double tol) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n == 0) return false;
    if (n == 1) return dist2(v[0], pt) <= tol * tol;
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(sub(v[(i + 1) % n], v[i]), sub(pt, v[i])) < -tol) return false;
    }
    return true;
}

double union_area(std::span<const ChartPolygon> polys) {
    std::vector<const ChartPolygon*> live;
    for (const auto& p : polys) {
        validate_convex(p, "union_area");
        if (std::abs(signed_area(p)) > 1e-15) live.push_back(&p);
    }
    const std::size_t n = live.size();
    if (n == 0) return 0.0;
    if (n > 16) {
        throw std::invalid_argument("union_area: more than 16 overlapping polygons");
    }

    double total = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        ChartPolygon inter;
        bool first = true;
        for (std::size_t i = 0; i < n && (first || !inter.vertices.empty()); ++i) {
            if (!(mask & (1u << i))) continue;
            if (first) {
                inter = ensure_ccw(*live[i]);
                first = false;
            } else {
                inter = clip_convex(inter, *live[i]);
            }
        }
        const double a = polygon_area(inter);
        total += (std::popcount(mask) % 2 == 1) ? a : -a;
    }
    return std::max(0.0, total);
}

ChartPolygon union_boundary(std::span<const ChartPolygon> polys) {
    std::vector<ChartPolygon> live;
    for (const auto& p : polys) {
        validate_convex(p, "union_boundary");
        if (std::abs(signed_area(p)) > 1e-15) live.push_back(ensure_ccw(p));
    }
    if (live.empty()) {
        return polys.empty() ? ChartPolygon{} : polys.front();
    }
    for (const auto& p : live) {
        if (!point_in_convex(p, {0.0, 0.0}, 1e-9)) {
            throw std::invalid_argument("union_boundary: polygon does not contain the origin");
        }
    }

    // Sweep events: every vertex angle plus every crossing between edges of
    // distinct polygons. Between consecutive events the outermost boundary
    // is a single straight edge of a single polygon.
    std::vector<double> angles;
    for (const auto& p : live) {
        for (const auto& v : p.vertices) angles.push_back(std::atan2(v.y, v.x));
    }
    for (std::size_t i = 0; i < live.size(); ++i) {
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            const auto& vi = live[i].vertices;
            const auto& vj = live[j].vertices;
            for (std::size_t a = 0; a < vi.size(); ++a) {
                for (std::size_t b = 0; b < vj.size(); ++b) {
                    PlanePoint q;
                    if (segment_intersection(vi[a], vi[(a + 1) % vi.size()],
                                             vj[b], vj[(b + 1) % vj.size()], q)) {
                        angles.push_back(std::atan2(q.y, q.x));
                    }
                }
            }
        }
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return b - a < 1e-13; }),
                 angles.end());

    std::vector<PlanePoint> verts;
    verts.reserve(angles.size());
    for (double th : angles) {
        const double c = std::cos(th);
        const double s = std::sin(th);
        double r = 0.0;
        for (const auto& p : live) r = std::max(r, radial_distance(p, c, s));
        verts.push_back({r * c, r * s});
    }

    // Drop coincident and collinear vertices; hidden sweep events land in
    // the interior of straight envelope edges.
    verts = dedup(verts);
    if (verts.size() >= 3) {
        std::vector<PlanePoint> cleaned;
        cleaned.reserve(verts.size());
        const std::size_t n = verts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const PlanePoint& prev = verts[(i + n - 1) % n];
            const PlanePoint& cur = verts[i];
            const PlanePoint& next = verts[(i + 1) % n];
            if (std::abs(cross(sub(cur, prev), sub(next, cur))) > kVertexTol) {
                cleaned.push_back(cur);
            }
        }
        if (cleaned.size() >= 3) verts = std::move(cleaned);
    }
    return ensure_ccw(ChartPolygon{std::move(verts)});
}

} // namespace capchart
