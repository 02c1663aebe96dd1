#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace anschat {

// Gaussian-kernel density estimate: the cluster's points with one isotropic
// bandwidth. Immutable after fit.
struct KdeModel {
    std::vector<std::vector<double>> points;
    double bandwidth = 1.0;
    std::size_t dim = 0;
};

struct BandwidthConfig {
    int grid_size = 10;
    int folds = 3;
    double grid_lo_factor = 0.1;
    double grid_hi_factor = 10.0;
    std::uint64_t rng_seed = 0;
    double log_floor = -1e12;  // held-out log-density clamp during CV
};

// Stores points and bandwidth; validates shape.
KdeModel fit_kde(std::vector<std::vector<double>> points, double bandwidth);

// Normalized Gaussian mixture density at x:
//   (1 / (|Y| (2 pi s^2)^(d/2))) * sum_y exp(-||x - y||^2 / (2 s^2))
double density(const KdeModel& model, std::span<const double> x);

// log(density) via log-sum-exp, clamped below at `floor`.
double log_density(const KdeModel& model, std::span<const double> x, double floor = -1e12);

// Silverman's rule-of-thumb reference bandwidth: mean per-dimension sample
// standard deviation times (4 / ((d + 2) n))^(1 / (d + 4)), floored at 1e-6.
double silverman_bandwidth(const std::vector<std::vector<double>>& points);

// Log-spaced grid of `grid_size` bandwidths spanning
// [lo_factor * sigma_ref, hi_factor * sigma_ref].
std::vector<double> bandwidth_grid(double sigma_ref, const BandwidthConfig& config);

// Deterministic fold labels in {0..folds-1}: indices are shuffled by the
// seeded generator and dealt round-robin.
std::vector<int> cv_fold_assignment(std::size_t n, int folds, std::uint64_t seed);

// Cross-validated bandwidth selection: maximizes the mean held-out
// log-density over the grid; ties go to the smaller bandwidth.
double select_bandwidth(const std::vector<std::vector<double>>& points,
                        const BandwidthConfig& config);

}  // namespace anschat
