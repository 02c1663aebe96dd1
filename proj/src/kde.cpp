#include "anschat/kde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "anschat/errors.hpp"
#include "anschat/rng.hpp"

namespace anschat {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

// log of the Gaussian mixture normalization: -log n - (d/2) log(2 pi s^2)
double log_norm_constant(std::size_t n, std::size_t dim, double bandwidth) {
    return -std::log(static_cast<double>(n)) -
           0.5 * static_cast<double>(dim) * std::log(2.0 * std::numbers::pi * bandwidth * bandwidth);
}

}  // namespace

KdeModel fit_kde(std::vector<std::vector<double>> points, double bandwidth) {
    if (points.empty()) throw EmptyCluster("fit_kde: no points");
    if (!(bandwidth > 0.0)) throw NonPositiveBandwidth("fit_kde: bandwidth must be positive");
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw DimensionMismatch("fit_kde: points have mixed dimensions");
    }
    return KdeModel{std::move(points), bandwidth, dim};
}

double density(const KdeModel& model, std::span<const double> x) {
    if (x.size() != model.dim) throw DimensionMismatch("density: wrong query dimension");
    const double inv_two_s2 = 1.0 / (2.0 * model.bandwidth * model.bandwidth);
    double acc = 0.0;
    for (const auto& y : model.points) {
        acc += std::exp(-squared_distance(x, y) * inv_two_s2);
    }
    const double norm = static_cast<double>(model.points.size()) *
                        std::pow(2.0 * std::numbers::pi * model.bandwidth * model.bandwidth,
                                 0.5 * static_cast<double>(model.dim));
    return acc / norm;
}

double log_density(const KdeModel& model, std::span<const double> x, double floor) {
    if (x.size() != model.dim) throw DimensionMismatch("log_density: wrong query dimension");
    const double inv_two_s2 = 1.0 / (2.0 * model.bandwidth * model.bandwidth);
    double max_exp = -std::numeric_limits<double>::infinity();
    std::vector<double> exponents;
    exponents.reserve(model.points.size());
    for (const auto& y : model.points) {
        const double e = -squared_distance(x, y) * inv_two_s2;
        exponents.push_back(e);
        max_exp = std::max(max_exp, e);
    }
    double acc = 0.0;
    for (const double e : exponents) acc += std::exp(e - max_exp);
    const double value =
        max_exp + std::log(acc) + log_norm_constant(model.points.size(), model.dim, model.bandwidth);
    return std::max(value, floor);
}

double silverman_bandwidth(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw EmptyCluster("silverman_bandwidth: no points");
    const std::size_t n = points.size();
    const std::size_t dim = points.front().size();
    double mean_sd = 0.0;
    if (n > 1) {
        for (std::size_t d = 0; d < dim; ++d) {
            double mean = 0.0;
            for (const auto& p : points) mean += p[d];
            mean /= static_cast<double>(n);
            double ss = 0.0;
            for (const auto& p : points) {
                const double diff = p[d] - mean;
                ss += diff * diff;
            }
            mean_sd += std::sqrt(ss / static_cast<double>(n - 1));
        }
        mean_sd /= static_cast<double>(dim);
    }
    const double factor = std::pow(
        4.0 / (static_cast<double>(dim + 2) * static_cast<double>(n)),
        1.0 / static_cast<double>(dim + 4));
    return std::max(mean_sd * factor, 1e-6);
}

std::vector<double> bandwidth_grid(double sigma_ref, const BandwidthConfig& config) {
    if (config.grid_size < 1) throw PreconditionError("bandwidth_grid: grid_size must be >= 1");
    if (!(config.grid_lo_factor > 0.0) || !(config.grid_lo_factor < config.grid_hi_factor)) {
        throw PreconditionError("bandwidth_grid: need 0 < lo_factor < hi_factor");
    }
    const double lo = std::log(config.grid_lo_factor * sigma_ref);
    const double hi = std::log(config.grid_hi_factor * sigma_ref);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(config.grid_size));
    if (config.grid_size == 1) {
        grid.push_back(std::exp(lo));
        return grid;
    }
    const double step = (hi - lo) / static_cast<double>(config.grid_size - 1);
    for (int i = 0; i < config.grid_size; ++i) {
        grid.push_back(std::exp(lo + step * static_cast<double>(i)));
    }
    return grid;
}

std::vector<int> cv_fold_assignment(std::size_t n, int folds, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng::Engine engine(seed);
    engine.shuffle(order);
    std::vector<int> fold(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        fold[order[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
    }
    return fold;
}

double select_bandwidth(const std::vector<std::vector<double>>& points,
                        const BandwidthConfig& config) {
    const std::size_t n = points.size();
    if (config.folds < 2) throw PreconditionError("select_bandwidth: folds must be >= 2");
    if (n < static_cast<std::size_t>(config.folds)) {
        throw TooFewPoints("select_bandwidth: fewer points than folds");
    }
    const std::size_t dim = points.front().size();
    for (const auto& p : points) {
        if (p.size() != dim) throw DimensionMismatch("select_bandwidth: mixed dimensions");
    }

    const std::vector<double> grid = bandwidth_grid(silverman_bandwidth(points), config);
    if (grid.size() == 1) return grid.front();

    const std::vector<int> fold = cv_fold_assignment(n, config.folds, config.rng_seed);

    // Pairwise squared distances are bandwidth-independent; compute them once.
    std::vector<std::vector<double>> d2(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double d = squared_distance(points[i], points[k]);
            d2[i][k] = d;
            d2[k][i] = d;
        }
    }
    std::vector<std::size_t> train_count(static_cast<std::size_t>(config.folds), 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int f = 0; f < config.folds; ++f) {
            if (fold[i] != f) ++train_count[static_cast<std::size_t>(f)];
        }
    }

    double best_bw = grid.front();
    double best_score = -std::numeric_limits<double>::infinity();
    std::vector<double> exponents;
    exponents.reserve(n);
    for (const double bw : grid) {
        const double inv_two_s2 = 1.0 / (2.0 * bw * bw);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            exponents.clear();
            double max_exp = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < n; ++k) {
                if (fold[k] == fold[i]) continue;
                const double e = -d2[i][k] * inv_two_s2;
                exponents.push_back(e);
                max_exp = std::max(max_exp, e);
            }
            double acc = 0.0;
            for (const double e : exponents) acc += std::exp(e - max_exp);
            const double ll =
                max_exp + std::log(acc) +
                log_norm_constant(train_count[static_cast<std::size_t>(fold[i])], dim, bw);
            total += std::max(ll, config.log_floor);
        }
        const double score = total / static_cast<double>(n);
        if (score > best_score) {
            best_score = score;
            best_bw = bw;
        }
    }
    return best_bw;
}

}  // namespace anschat
