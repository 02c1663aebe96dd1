#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace anschat::rng {

// Deterministic random source. mt19937_64 output is fixed by the standard;
// the distribution transforms below are written out explicitly so results do
// not depend on the standard library's (unspecified) distribution algorithms.
class Engine {
public:
    explicit Engine(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0, n). n must be > 0.
    std::size_t uniform_below(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = gen_();
            if (x >= threshold) return static_cast<std::size_t>(x % bound);
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Exponential with the given mean, via inverse CDF.
    double exponential(double mean) {
        return -mean * std::log(1.0 - uniform01());
    }

    // Number of Bernoulli(p) trials until first success; support {1, 2, ...}.
    long geometric_trials(double p) {
        if (p >= 1.0) return 1;
        const double u = uniform01();
        const double k = std::floor(std::log(1.0 - u) / std::log(1.0 - p));
        if (!(k >= 0.0) || k > 1e15) return 1 + static_cast<long>(1e15);
        return 1 + static_cast<long>(k);
    }

    // Index drawn from a discrete distribution given by `probs`.
    std::size_t categorical(std::span<const double> probs) {
        const double u = uniform01();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return i;
        }
        return probs.empty() ? 0 : probs.size() - 1;
    }

    // Fisher-Yates shuffle using uniform_below.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_below(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace anschat::rng
