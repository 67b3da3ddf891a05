#include "airykit/multipliers.hpp"

#include <cmath>

namespace airykit {

namespace {

SpectralField apply(const SpectralField& u, const std::function<cplx(double)>& symbol,
                    bool keeps_real) {
    SpectralField out(u.grid, u.real_valued && keeps_real);
    for (int i = 0; i < u.grid.n; ++i)
        out.coef[static_cast<std::size_t>(i)] =
            symbol(u.grid.xi_at(i)) * u.coef[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

SpectralField bessel_potential(const SpectralField& u, double s) {
    return apply(u, [s](double xi) { return cplx(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); },
                 true);
}

SpectralField riesz_potential(const SpectralField& u, double s) {
    if (s < 0.0) {
        double mx = 0.0;
        for (const auto& c : u.coef) mx = std::max(mx, std::abs(c));
        if (std::abs(u.at_mode(0)) > 1e-12 * std::max(mx, 1.0))
            throw std::invalid_argument(
                "riesz_potential: negative order requires a mean-free field");
    }
    return apply(u,
                 [s](double xi) {
                     if (xi == 0.0) return cplx(0.0, 0.0);
                     return cplx(std::pow(std::abs(xi), s), 0.0);
                 },
                 true);
}

SpectralField airy_propagate(const SpectralField& u, double t) {
    return apply(u,
                 [t](double xi) {
                     const double phase = xi * xi * xi * t;
                     return cplx(std::cos(phase), std::sin(phase));
                 },
                 true);  // e^{i xi^3 t} has odd phase in xi: conjugate symmetry survives
}

SpectralField spatial_derivative(const SpectralField& u) {
    return apply(u, [](double xi) { return cplx(0.0, xi); }, true);
}

SpectralField low_projection(const SpectralField& u, double cutoff) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("low_projection: cutoff must be > 0");
    return apply(u, [cutoff](double xi) { return cplx(std::abs(xi) <= cutoff ? 1.0 : 0.0, 0.0); },
                 true);
}

SpectralField high_projection(const SpectralField& u, double cutoff) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("high_projection: cutoff must be > 0");
    return apply(u, [cutoff](double xi) { return cplx(std::abs(xi) <= cutoff ? 0.0 : 1.0, 0.0); },
                 true);
}

SpaceTimeField apply_spatial_multiplier(const SpaceTimeField& u,
                                        const std::function<double(double)>& symbol) {
    SpaceTimeField out(u.grid, u.window);
    for (int i = 0; i < u.grid.n; ++i) {
        const double w = symbol(u.grid.xi_at(i));
        for (int mi = 0; mi < u.window.n_t; ++mi) out.at(i, mi) = w * u.at(i, mi);
    }
    return out;
}

}  // namespace airykit
