#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "mixdiff/vecmat.hpp"

namespace mixdiff {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const void* bytes, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

/// Counter-based stream derivation: every (root, purpose, counter) triple names
/// an independent stream, so adding one experiment never perturbs another's draws.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view purpose,
                                 std::uint64_t counter = 0) {
    return splitmix64(splitmix64(root ^ fnv1a64(purpose)) + counter);
}

/// Seeded generator for normal/uniform draws. Deterministic for a fixed build;
/// never shared across threads - each consumer derives its own stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }

    double uniform() { return uniform_(engine_); } // [0, 1)

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    Vec normal_vec(std::size_t d) {
        Vec v(d);
        for (auto& x : v) x = normal();
        return v;
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline Rng make_stream(std::uint64_t root, std::string_view purpose, std::uint64_t counter = 0) {
    return Rng(derive_seed(root, purpose, counter));
}

} // namespace mixdiff
