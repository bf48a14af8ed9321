#include "capchart/capability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace capchart {

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kFeasibleTol = 1e-12;

void require_feasible(const ConverterSizing& s, const char* op) {
    if (!s.feasible) {
        std::ostringstream msg;
        msg << op << ": sizing outside the characterised domain, alpha1 = "
            << s.alpha[0] << " violates alpha1 <= 1/2";
        throw std::domain_error(msg.str());
    }
}

// Region { |p1| <= c1, |p2| <= c2, |p1 + p2| <= c3 } as a CCW polygon in
// nominal (p1, p2) coordinates: a capacity box clipped by the third-feeder
// slab.
ChartPolygon capacity_region_nominal(const std::array<double, 3>& c) {
    ChartPolygon box{{{-c[0], -c[1]}, {c[0], -c[1]}, {c[0], c[1]}, {-c[0], c[1]}}};
    // p1 + p2 <= c3: left of the line through (c3, 0) with direction (-1, 1).
    ChartPolygon poly = clip_halfplane(box, {c[2], 0.0}, {c[2] - 1.0, 1.0});
    // p1 + p2 >= -c3.
    poly = clip_halfplane(poly, {-c[2], 0.0}, {-c[2] + 1.0, -1.0});
    return poly;
}

ChartPolygon to_plane(const ChartPolygon& nominal) {
    ChartPolygon out;
    out.vertices.reserve(nominal.vertices.size());
    for (const auto& v : nominal.vertices) {
        const double p3 = -(v.x + v.y);
        out.vertices.push_back(nominal_to_plane({{v.x, v.y, p3}}));
    }
    return ensure_ccw(std::move(out));
}

std::vector<ChartPolygon> permutation_polygons(const ConverterSizing& s) {
    std::vector<ChartPolygon> polys;
    polys.reserve(6);
    for (const auto& config : enumerate_configurations()) {
        if (config.is_permutation()) {
            polys.push_back(configuration_polygon(config, s));
        }
    }
    return polys;
}

// Boundary crossing of the ray from the origin through `pt` with a
// star-shaped CCW polygon; used to verify chart containment.
double star_radial(const ChartPolygon& poly, double cos_th, double sin_th) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& a = v[i];
        const PlanePoint& b = v[(i + 1) % n];
        const double ex = b.x - a.x;
        const double ey = b.y - a.y;
        const double denom = ex * sin_th - ey * cos_th;
        if (std::abs(denom) < 1e-15) continue;
        const double u = (a.x * sin_th - a.y * cos_th) / -denom;
        if (u < -1e-12 || u > 1.0 + 1e-12) continue;
        const double t = (a.x + u * ex) * cos_th + (a.y + u * ey) * sin_th;
        best = std::max(best, t);
    }
    return best;
}

} // namespace

std::array<std::array<int, 3>, 3> MuxConfiguration::matrix() const {
    std::array<std::array<int, 3>, 3> b{};
    for (int converter = 0; converter < 3; ++converter) {
        b[static_cast<std::size_t>(feeder_of[static_cast<std::size_t>(converter)])]
         [static_cast<std::size_t>(converter)] = 1;
    }
    return b;
}

ConverterSizing canonicalize(const std::array<double, 3>& raw) {
    double sum = 0.0;
    for (double a : raw) {
        if (!std::isfinite(a) || a < 0.0) {
            std::ostringstream msg;
            msg << "converter rating must be finite and >= 0, got " << a;
            throw std::invalid_argument(msg.str());
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        std::ostringstream msg;
        msg << "converter ratings must sum to 1 within 1e-9, got sum = " << sum;
        throw std::invalid_argument(msg.str());
    }

    ConverterSizing s;
    s.alpha = raw;
    for (double& a : s.alpha) a /= sum;
    std::sort(s.alpha.begin(), s.alpha.end(), std::greater<>());
    s.feasible = s.alpha[0] <= 0.5 + kFeasibleTol;
    return s;
}

std::vector<MuxConfiguration> enumerate_configurations() {
    std::vector<MuxConfiguration> configs;
    configs.reserve(27);
    for (int f0 = 0; f0 < 3; ++f0) {
        for (int f1 = 0; f1 < 3; ++f1) {
            for (int f2 = 0; f2 < 3; ++f2) {
                configs.push_back({{f0, f1, f2}});
            }
        }
    }
    return configs;
}

std::array<double, 3> feeder_capacity(const MuxConfiguration& config,
                                      const ConverterSizing& sizing) {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    for (std::size_t converter = 0; converter < 3; ++converter) {
        c[static_cast<std::size_t>(config.feeder_of[converter])] += sizing.alpha[converter];
    }
    return c;
}

ChartPolygon configuration_polygon(const MuxConfiguration& config,
                                   const ConverterSizing& sizing) {
    return to_plane(capacity_region_nominal(feeder_capacity(config, sizing)));
}

ChartPolygon chart(const ConverterSizing& sizing) {
    require_feasible(sizing, "chart");
    const auto polys = permutation_polygons(sizing);
    ChartPolygon boundary = union_boundary(polys);

    // Every configuration polygon must sit inside the union.
    if (std::abs(signed_area(boundary)) > 1e-12) {
        for (const auto& poly : polys) {
            for (const auto& v : poly.vertices) {
                const double r = std::hypot(v.x, v.y);
                if (r < 1e-12) continue;
                const double envelope = star_radial(boundary, v.x / r, v.y / r);
                if (r > envelope + 1e-9) {
                    throw std::logic_error("chart: union boundary lost a configuration vertex");
                }
            }
        }
    }
    return boundary;
}

std::optional<MuxConfiguration> contains(const ConverterSizing& sizing,
                                         const PowerTransfer& p) {
    const double sum = p.p[0] + p.p[1] + p.p[2];
    if (std::abs(sum) > kBalanceTol) {
        std::ostringstream msg;
        msg << "power transfer violates sum(p) = 0: sum = " << sum;
        throw std::invalid_argument(msg.str());
    }
    for (const auto& config : enumerate_configurations()) {
        const auto c = feeder_capacity(config, sizing);
        if (std::abs(p.p[0]) <= c[0] + kFeasibleTol &&
            std::abs(p.p[1]) <= c[1] + kFeasibleTol &&
            std::abs(p.p[2]) <= c[2] + kFeasibleTol) {
            return config;
        }
    }
    return std::nullopt;
}

RegionDecomposition region_decomposition(const ConverterSizing& sizing) {
    require_feasible(sizing, "region_decomposition");
    const double a1 = sizing.alpha[0];
    const double a2 = sizing.alpha[1];
    const double a3 = sizing.alpha[2];

    RegionDecomposition d;
    d.beta1 = std::min(a3, 0.5 * a1);
    d.beta2 = std::max(a1 - a3, 0.5 * a1);
    d.delta_beta = a2 - d.beta2;
    d.r1 = 0.5 * d.beta1 * d.beta1;
    d.r2 = d.beta1 * (d.beta2 - d.beta1);
    d.r3 = d.delta_beta * (d.beta1 - 0.5 * d.delta_beta);
    return d;
}

double cca_closed_form(const ConverterSizing& sizing) {
    const RegionDecomposition d = region_decomposition(sizing);
    return 12.0 * std::numbers::sqrt3 * (d.r1 + d.r2 + d.r3);
}

double cca_from_chart(const ConverterSizing& sizing) {
    require_feasible(sizing, "cca_from_chart");
    return union_area(permutation_polygons(sizing));
}

double max_power_transfer(const ConverterSizing& sizing) {
    return std::min(sizing.alpha[0], 1.0 - sizing.alpha[0]);
}

bool is_convex_chart(const ConverterSizing& sizing) {
    const ChartPolygon boundary = chart(sizing);
    if (std::abs(signed_area(boundary)) <= 1e-12) return false;
    return is_convex_polygon(boundary, 1e-9);
}

ChartPolygon perfect_boundary() {
    ChartPolygon nominal{{{0.5, 0.0},
                          {0.0, 0.5},
                          {-0.5, 0.5},
                          {-0.5, 0.0},
                          {0.0, -0.5},
                          {0.5, -0.5}}};
    return to_plane(nominal);
}

} // namespace capchart
