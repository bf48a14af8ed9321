#pragma once

#include <array>
#include <cstdint>

namespace capchart {

struct MonteCarloEstimate {
    double area = 0.0;       // pu^2, plane frame
    double std_error = 0.0;  // binomial standard error, same scaling
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Membership test for the capability set in nominal (p1, p2) coordinates:
/// some assignment of the three converters to feeders covers |p| <= B*alpha.
/// Reimplements the existential check directly over all 27 assignments,
/// sharing no code with the polygon construction.
bool in_capability_set(const std::array<double, 3>& alpha, double p1, double p2);

/// Monte Carlo estimate of the capability chart area. Samples (p1, p2)
/// uniformly from [-1/2, 1/2]^2 (which contains the capability set for any
/// sizing), counts hits with in_capability_set, and scales the hit fraction
/// by sqrt(3) to convert the nominal-frame area to the plane frame.
/// Deterministic for a fixed seed: mt19937_64 with the draw mapping
/// described in the README, p1 drawn before p2. Accepts any sizing with
/// nonnegative entries summing to 1 within 1e-9, including sizings outside
/// the feasible triangle.
MonteCarloEstimate cca_montecarlo(const std::array<double, 3>& alpha,
                                  std::uint64_t samples, std::uint64_t seed);

} // namespace capchart
