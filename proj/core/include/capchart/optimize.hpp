#pragma once

#include <vector>

#include "capchart/capability.hpp"

namespace capchart {

enum class Constraint {
    unconstrained,  // largest chart area over the whole sizing triangle
    mpt,            // alpha1 pinned to 1/2 (maximum power transfer 0.5 pu)
    convex,         // largest area whose chart is convex, along alpha1 = alpha2
};

struct OptimizationResult {
    ConverterSizing alpha;
    double cca = 0.0;
    Constraint constraint = Constraint::unconstrained;
    double grid_step = 0.0;  // grid step, or the bisection tolerance for convex
};

struct HeatmapCell {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double cca = 0.0;
};

// Chart area sampled over the sizing triangle on the lattice
// (i*step, j*step); cells ordered lexicographically by (alpha1, alpha2).
struct HeatmapGrid {
    double step = 0.0;
    std::vector<HeatmapCell> cells;
};

/// Grid search over the sizing triangle at resolution `step`, then local
/// refinement by 12 grid halvings around the incumbent (monotone, ties
/// resolved toward the lexicographically smallest sizing). Deterministic.
/// Requires 0 < step <= 0.01.
OptimizationResult optimize_unconstrained(double step);

/// Same search restricted to alpha1 = 1/2, alpha2 in [1/4, 1/2].
/// Requires 0 < step <= 0.01.
OptimizationResult optimize_mpt(double step);

/// Largest t in [1/3, 1/2] with a convex chart along alpha = (t, t, 1 - 2t),
/// found by bisection to `tol` after a linear pre-scan (step 1e-3) validates
/// that convexity holds on a prefix and fails beyond it; if the scan sees
/// multiple crossings the scan result is returned instead. Requires
/// 0 < tol <= 1e-3.
OptimizationResult optimize_convex(double tol);

/// Chart area at every lattice point of the sizing triangle.
/// Requires 0 < step <= 0.02. The maximum cell is the same sizing as
/// optimize_unconstrained's incumbent before refinement.
HeatmapGrid heatmap(double step);

} // namespace capchart
