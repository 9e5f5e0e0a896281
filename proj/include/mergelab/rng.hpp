#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>
#include <vector>

namespace mergelab {

/// Deterministic 64-bit generator. Unlike <random> distributions, every
/// draw is specified bit-for-bit, so seeded runs reproduce across
/// compilers and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t bounded(std::uint64_t bound) {
        // Multiply-shift map of the full 64-bit range onto [0, bound).
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Two draws per call, no cached state.
    double gaussian() {
        double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
    return g.next();
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

/// Fisher-Yates prefix sample of `count` distinct indices from
/// [0, population), optionally excluding one index.
inline std::vector<std::size_t> sample_without_replacement(
    SplitMix64& rng, std::size_t population, std::size_t count,
    std::size_t exclude = std::numeric_limits<std::size_t>::max()) {
    std::vector<std::size_t> candidates;
    candidates.reserve(population);
    for (std::size_t i = 0; i < population; ++i) {
        if (i != exclude) candidates.push_back(i);
    }
    if (count > candidates.size()) count = candidates.size();
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(
                                rng.bounded(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(count);
    return candidates;
}

inline std::vector<std::size_t> shuffled_indices(SplitMix64& rng, std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace mergelab
