#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snnfc {

// ---------------------------------------------------------------------------
// Error categories
// ---------------------------------------------------------------------------

/// Shape/dimension violations and malformed structural input.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite state values detected during simulation.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spike-encoding preconditions violated (e.g. rate * dt > 1).
struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (bad values, unknown keys, unusable files).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Deterministic RNG
//
// mt19937_64 has a standard-pinned sequence; the std:: distributions do not,
// so the draw transforms are written out here. Every stream is derived from
// (base seed, tag, index) so independent streams never alias.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derive an independent stream seed from a base seed, a purpose tag and an index.
inline std::uint64_t mix_seed(std::uint64_t base, std::string_view tag, std::uint64_t index = 0) {
    return splitmix64(splitmix64(base ^ fnv1a64(tag)) + index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via the polar method.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        have_cached_ = true;
        return u * f;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t integer(std::uint64_t bound) {
        // rejection below the largest multiple of bound keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

/// In-place Fisher-Yates with a pinned draw sequence (std::shuffle is
/// implementation-defined across standard libraries).
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.integer(i));
        std::swap(items[i - 1], items[j]);
    }
}

// ---------------------------------------------------------------------------
// Small statistics helpers
// ---------------------------------------------------------------------------

inline double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

/// Linear-interpolation quantile (the common "type 7" definition).
inline double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const double pos = q * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] + frac * (xs[hi] - xs[lo]);
}

inline double median(const std::vector<double>& xs) { return quantile(xs, 0.5); }

}  // namespace snnfc
