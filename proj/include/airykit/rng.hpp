// Counter-based random number generation.
//
// Every draw is a pure function of (seed, stream, code, part) built from the
// SplitMix64 finalizer, so parallel and serial sampling produce identical
// results and a field extended to a finer lattice keeps the draws of the
// modes it already had. `stream` is the sample index within a harness run,
// `code` identifies the lattice site (zig-zag encoded mode numbers).
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "airykit/common.hpp"

namespace airykit {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Signed integer -> even/odd natural, preserving |k| ordering.
inline std::uint64_t zigzag(std::int64_t k) {
    return k >= 0 ? 2ULL * static_cast<std::uint64_t>(k)
                  : 2ULL * static_cast<std::uint64_t>(-k) - 1ULL;
}

/// Pack a (spatial mode, temporal mode) pair into one site code.
inline std::uint64_t site_code(std::int64_t k, std::int64_t m) {
    return (zigzag(k) << 24) ^ zigzag(m);
}

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(detail::mix64(detail::mix64(seed) ^
                             (0xA24BAED4963EE407ULL * (stream + 1)))) {}

    /// Uniform in (0,1), strictly away from the endpoints.
    double uniform(std::uint64_t code, std::uint64_t part) const {
        const std::uint64_t x =
            detail::mix64(key_ ^ (0x9FB21C651E98DF25ULL * (2 * code + part + 1)));
        return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Independent standard normal pair for one lattice site (Box-Muller).
    std::pair<double, double> gaussian_pair(std::uint64_t code) const {
        const double u1 = uniform(code, 0);
        const double u2 = uniform(code, 1);
        const double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }

    cplx gaussian_complex(std::uint64_t code) const {
        auto [a, b] = gaussian_pair(code);
        return cplx(a, b) / std::sqrt(2.0);
    }

  private:
    std::uint64_t key_;
};

}  // namespace airykit
