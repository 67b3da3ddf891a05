// Discrete torus grids.
//
// Spatial torus [0, L) with n modes; frequencies xi_k = 2*pi*k/L for
// k in {-n/2, ..., n/2-1}, stored ascending. Time window [0, T) with n_t
// samples; dual frequencies tau_m = 2*pi*m/T on the same ascending layout.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "airykit/common.hpp"

namespace airykit {

struct SpatialGrid {
    int n = 0;
    double length = 0.0;

    /// Lattice spacing 2*pi/L.
    double dxi() const { return 2.0 * kPi / length; }
    /// Grid spacing in physical space.
    double dx() const { return length / n; }
    int min_mode() const { return -n / 2; }
    int max_mode() const { return n / 2 - 1; }
    /// Frequency of mode k.
    double xi(int k) const { return dxi() * k; }
    /// Array index of mode k (ascending layout).
    int index_of(int k) const { return k + n / 2; }
    int mode_of(int i) const { return i - n / 2; }
    double xi_at(int i) const { return xi(mode_of(i)); }

    std::vector<double> frequencies() const {
        std::vector<double> f(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = xi_at(i);
        return f;
    }

    bool operator==(const SpatialGrid& o) const {
        return n == o.n && length == o.length;
    }
};

inline SpatialGrid make_spatial_grid(int n, double length) {
    if (n < 8) throw std::invalid_argument("make_spatial_grid: n must be >= 8");
    if (n % 2 != 0) throw std::invalid_argument("make_spatial_grid: n must be even");
    if (!(length > 0.0)) throw std::invalid_argument("make_spatial_grid: length must be > 0");
    return SpatialGrid{n, length};
}

struct TimeWindow {
    int n_t = 0;
    double t_span = 0.0;

    double dt() const { return t_span / n_t; }
    double dtau() const { return 2.0 * kPi / t_span; }
    int min_mode() const { return -n_t / 2; }
    int max_mode() const { return n_t / 2 - 1; }
    double tau(int m) const { return dtau() * m; }
    int index_of(int m) const { return m + n_t / 2; }
    int mode_of(int i) const { return i - n_t / 2; }
    double tau_at(int i) const { return tau(mode_of(i)); }
    double time_at(int j) const { return dt() * j; }

    std::vector<double> times() const {
        std::vector<double> t(static_cast<std::size_t>(n_t));
        for (int j = 0; j < n_t; ++j) t[static_cast<std::size_t>(j)] = time_at(j);
        return t;
    }

    bool operator==(const TimeWindow& o) const {
        return n_t == o.n_t && t_span == o.t_span;
    }
};

inline TimeWindow make_time_window(int n_t, double t_span) {
    if (n_t < 2 || n_t % 2 != 0)
        throw std::invalid_argument("make_time_window: n_t must be even and >= 2");
    if (!(t_span > 0.0)) throw std::invalid_argument("make_time_window: t_span must be > 0");
    return TimeWindow{n_t, t_span};
}

}  // namespace airykit
