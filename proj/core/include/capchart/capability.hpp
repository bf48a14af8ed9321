#pragma once

#include <array>
#include <optional>
#include <vector>

#include "capchart/geometry.hpp"

namespace capchart {

// Converter ratings in per-unit (total installed capacity = 1), stored in
// canonical descending order. `feasible` marks membership of the sizing
// triangle
//     alpha1 <= 1/2,   alpha1 >= alpha2,   alpha1 + 2*alpha2 >= 1,
// the domain on which the closed-form chart area is characterised. Build
// values through canonicalize().
struct ConverterSizing {
    std::array<double, 3> alpha{0.0, 0.0, 0.0};
    bool feasible = false;
};

// State of the three feeder-selector multiplexers: converter i feeds feeder
// feeder_of[i] (0-based). Equivalent to the binary matrix B whose column i
// has a single 1 in row feeder_of[i]; every column sums to 1 by construction.
struct MuxConfiguration {
    std::array<int, 3> feeder_of{0, 0, 0};

    bool is_permutation() const {
        return feeder_of[0] != feeder_of[1] && feeder_of[0] != feeder_of[2] &&
               feeder_of[1] != feeder_of[2];
    }
    std::array<std::array<int, 3>, 3> matrix() const;
};

// Half-arm decomposition of the chart in nominal (p1, p2) coordinates.
// One half-arm (the lower half of the first-quadrant arm) splits into a
// triangle r1, a rectangle r2 and a trapezoid r3 whose extents are governed
// by beta1, beta2 and delta_beta; the twelve half-arms are congruent.
struct RegionDecomposition {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double delta_beta = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

/// Validates (entries >= 0, sum = 1 within 1e-9), renormalises to sum
/// exactly 1, sorts descending and flags feasibility. Throws
/// std::invalid_argument on malformed input; an infeasible sizing
/// (alpha1 > 1/2) is returned with feasible = false, not rejected.
ConverterSizing canonicalize(const std::array<double, 3>& raw);

/// All 27 multiplexer states, in a fixed order: the feeder choice of
/// converter 0 varies slowest, converter 2 fastest, feeders ascending.
/// Exactly 6 of them are permutations.
std::vector<MuxConfiguration> enumerate_configurations();

/// Capacity connected to each feeder, B * alpha.
std::array<double, 3> feeder_capacity(const MuxConfiguration& config,
                                      const ConverterSizing& sizing);

/// The convex region { p : |p| <= B*alpha, sum(p) = 0 } as a CCW polygon in
/// plane coordinates. Degenerate (zero area) whenever some feeder capacity
/// is zero.
ChartPolygon configuration_polygon(const MuxConfiguration& config,
                                   const ConverterSizing& sizing);

/// Capability chart boundary: the union of the 6 permutation-configuration
/// polygons (the other 21 configurations zero a feeder capacity and are
/// area-degenerate). CCW, star-shaped about the origin, with the 12-fold
/// dihedral symmetry of feeder permutation and sign flip. For sizings with
/// a zero smallest rating every configuration polygon is a segment and the
/// first one is returned (zero-area chart). Throws std::domain_error for
/// infeasible sizings.
ChartPolygon chart(const ConverterSizing& sizing);

/// First multiplexer state (in enumeration order) that realises the
/// transfer, i.e. |p| <= B*alpha elementwise (tolerance 1e-12), or nullopt.
std::optional<MuxConfiguration> contains(const ConverterSizing& sizing,
                                         const PowerTransfer& p);

/// Half-arm quantities:
///   beta1 = min(alpha3, alpha1/2)        beta2 = max(alpha1 - alpha3, alpha1/2)
///   delta_beta = alpha2 - beta2
///   r1 = beta1^2/2   r2 = beta1*(beta2 - beta1)   r3 = delta_beta*(beta1 - delta_beta/2)
/// Throws std::domain_error for infeasible sizings.
RegionDecomposition region_decomposition(const ConverterSizing& sizing);

/// Closed-form capability chart area, 12*sqrt(3)*(r1 + r2 + r3).
double cca_closed_form(const ConverterSizing& sizing);

/// Chart area evaluated geometrically: inclusion-exclusion over the 6
/// permutation polygons (union_area). Agrees with cca_closed_form to 1e-9.
double cca_from_chart(const ConverterSizing& sizing);

/// Largest single-feeder transfer, min(alpha1, 1 - alpha1). Defined for any
/// canonical sizing; equals alpha1 on the feasible triangle.
double max_power_transfer(const ConverterSizing& sizing);

/// True when the chart boundary has no reflex vertex (cross products
/// >= -1e-9; collinear edges count as convex). Zero-area charts are not
/// convex regions and return false.
bool is_convex_chart(const ConverterSizing& sizing);

/// Envelope of all physical designs: the hexagon { |p_i| <= 1/2, sum(p) = 0 }
/// in plane coordinates, area 3*sqrt(3)/4.
ChartPolygon perfect_boundary();

} // namespace capchart
