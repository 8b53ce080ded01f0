#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace riskstrat {

// All sampling goes through this wrapper instead of <random> distributions.
// std::mt19937_64 output is pinned by the standard, but the distribution
// classes are implementation-defined, which would break the reproducibility
// contract across toolchains. The transforms below are fixed algorithms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// splitmix64-style combiner; use to derive independent streams from a
    /// master seed, e.g. mix(master, trial_index).
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Box-Muller without caching so the draw count per call is fixed.
    double normal(double mean, double stddev) {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

    double exponential(double mean) {
        double u = uniform01();
        while (u <= 0.0) u = uniform01();
        return -mean * std::log(u);
    }

    /// Knuth multiplication method; adequate for the report-length scale of
    /// means used here.
    int poisson(double mean) {
        const double limit = std::exp(-mean);
        double p = 1.0;
        int k = 0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    /// Draw an index from cumulative weights (strictly increasing, last = total).
    std::size_t categorical(const std::vector<double>& cumulative) {
        const double total = cumulative.back();
        const double x = uniform01() * total;
        std::size_t lo = 0, hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cumulative[mid] > x) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return lo;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n), in draw order.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k && i < n; ++i) {
            const std::size_t j = static_cast<std::size_t>(below(static_cast<std::uint64_t>(n - i))) + static_cast<std::size_t>(i);
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return out;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace riskstrat
