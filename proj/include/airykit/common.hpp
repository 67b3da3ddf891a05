// Shared aliases and small utilities used across the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace airykit {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Japanese bracket <x> = sqrt(1 + x^2).
inline double bracket(double x) { return std::sqrt(1.0 + x * x); }

/// Number of worker threads used by parallel loops (settable via CLI --threads).
inline int thread_count_impl(int set = -1) {
    static int n = []() {
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }();
    if (set > 0) n = set;
    return n;
}

inline int thread_count() { return thread_count_impl(); }
inline void set_thread_count(int n) { thread_count_impl(n); }

/// Chunked parallel loop over [begin, end). Each index is processed exactly
/// once; partitioning is deterministic but execution order is not, so bodies
/// must write to disjoint slots if they produce output.
inline void parallel_for(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t, std::int64_t)>& body) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    int nw = thread_count();
    if (nw <= 1 || total == 1) {
        body(begin, end);
        return;
    }
    nw = static_cast<int>(std::min<std::int64_t>(nw, total));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    const std::int64_t chunk = (total + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const std::int64_t lo = begin + w * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

/// Linear-interpolation quantile of an unsorted sample list, q in [0,1].
inline double quantile(std::vector<double> v, double q) {
    if (v.empty()) throw std::invalid_argument("quantile: empty sample list");
    std::sort(v.begin(), v.end());
    if (q <= 0) return v.front();
    if (q >= 1) return v.back();
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

}  // namespace airykit
