// Spectral fields: the universal carrier for every operator in the library.
//
// Coefficients are Fourier-series amplitudes, u(x) = sum_k c_k e^{i xi_k x},
// stored ascending in k. A space-time field uses the product lattice with
// u(x,t) = sum_{k,m} c[k][m] e^{i(xi_k x + tau_m t)}, row-major in k. With
// this convention e^{i 3 x} on L = 2*pi has coefficient 1 at xi = 3, and
// Parseval reads  int |u|^2 dx = L * sum |c_k|^2  exactly.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "airykit/grid.hpp"

namespace airykit {

struct SpectralField {
    SpatialGrid grid;
    std::vector<cplx> coef;  // index i <-> mode i - n/2
    bool real_valued = false;

    SpectralField() = default;
    explicit SpectralField(const SpatialGrid& g, bool real = false)
        : grid(g), coef(static_cast<std::size_t>(g.n), cplx{0.0, 0.0}), real_valued(real) {}

    cplx& at_mode(int k) { return coef[static_cast<std::size_t>(grid.index_of(k))]; }
    const cplx& at_mode(int k) const {
        return coef[static_cast<std::size_t>(grid.index_of(k))];
    }

    /// Max |c(-k) - conj(c(k))| over paired modes, relative to max |c|.
    double conjugate_symmetry_defect() const {
        double mx = 0.0, defect = 0.0;
        for (const auto& c : coef) mx = std::max(mx, std::abs(c));
        if (mx == 0.0) return 0.0;
        for (int k = 1; k <= grid.n / 2 - 1; ++k)
            defect = std::max(defect, std::abs(at_mode(-k) - std::conj(at_mode(k))));
        defect = std::max(defect, std::abs(at_mode(0).imag()));
        defect = std::max(defect, std::abs(at_mode(grid.min_mode()).imag()));
        return defect / mx;
    }
};

struct SpaceTimeField {
    SpatialGrid grid;
    TimeWindow window;
    std::vector<cplx> coef;  // row-major: coef[k_index * n_t + m_index]

    SpaceTimeField() = default;
    SpaceTimeField(const SpatialGrid& g, const TimeWindow& w)
        : grid(g),
          window(w),
          coef(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(w.n_t),
               cplx{0.0, 0.0}) {}

    std::size_t idx(int ki, int mi) const {
        return static_cast<std::size_t>(ki) * static_cast<std::size_t>(window.n_t) +
               static_cast<std::size_t>(mi);
    }
    cplx& at(int ki, int mi) { return coef[idx(ki, mi)]; }
    const cplx& at(int ki, int mi) const { return coef[idx(ki, mi)]; }
};

inline void require_same_grid(const SpectralField& a, const SpectralField& b,
                              const char* who) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace airykit
