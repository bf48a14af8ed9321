#include "capchart/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace capchart {

namespace {

struct CapacityTable {
    // Feeder capacities (c1, c2, c3) for each of the 27 assignments.
    std::vector<std::array<double, 3>> rows;

    explicit CapacityTable(const std::array<double, 3>& alpha) {
        rows.reserve(27);
        for (int f0 = 0; f0 < 3; ++f0) {
            for (int f1 = 0; f1 < 3; ++f1) {
                for (int f2 = 0; f2 < 3; ++f2) {
                    std::array<double, 3> c{0.0, 0.0, 0.0};
                    c[static_cast<std::size_t>(f0)] += alpha[0];
                    c[static_cast<std::size_t>(f1)] += alpha[1];
                    c[static_cast<std::size_t>(f2)] += alpha[2];
                    rows.push_back(c);
                }
            }
        }
    }

    bool contains(double p1, double p2) const {
        const double a1 = std::abs(p1);
        const double a2 = std::abs(p2);
        const double a3 = std::abs(p1 + p2);  // p3 = -(p1 + p2)
        for (const auto& c : rows) {
            if (a1 <= c[0] && a2 <= c[1] && a3 <= c[2]) return true;
        }
        return false;
    }
};

void validate_alpha(const std::array<double, 3>& alpha) {
    double sum = 0.0;
    for (double a : alpha) {
        if (!std::isfinite(a) || a < 0.0) {
            std::ostringstream msg;
            msg << "converter rating must be finite and >= 0, got " << a;
            throw std::invalid_argument(msg.str());
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "converter ratings must sum to 1 within 1e-9, got sum = " << sum;
        throw std::invalid_argument(msg.str());
    }
}

// Top 53 bits of the engine output, mapped to [0, 1). Fully specified, so
// estimates are reproducible independent of the standard library's
// distribution implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

bool in_capability_set(const std::array<double, 3>& alpha, double p1, double p2) {
    validate_alpha(alpha);
    return CapacityTable(alpha).contains(p1, p2);
}

MonteCarloEstimate cca_montecarlo(const std::array<double, 3>& alpha,
                                  std::uint64_t samples, std::uint64_t seed) {
    validate_alpha(alpha);
    if (samples == 0) {
        throw std::invalid_argument("cca_montecarlo: samples must be >= 1");
    }

    const CapacityTable table(alpha);
    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double p1 = uniform01(rng) - 0.5;
        const double p2 = uniform01(rng) - 0.5;
        if (table.contains(p1, p2)) ++hits;
    }

    // Box area is 1, so the hit fraction is the nominal-frame area estimate;
    // the plane-frame area is a factor sqrt(3) larger.
    const double n = static_cast<double>(samples);
    const double frac = static_cast<double>(hits) / n;
    MonteCarloEstimate est;
    est.area = frac * std::numbers::sqrt3;
    est.std_error = std::sqrt(frac * (1.0 - frac) / n) * std::numbers::sqrt3;
    est.samples = samples;
    est.seed = seed;
    return est;
}

} // namespace capchart
