// Fourier multiplier operators: Bessel/Riesz potentials, the Airy propagator,
// spatial derivative and sharp frequency projections. All act diagonally on
// the coefficient lattice; real-symbol multipliers preserve conjugate
// symmetry.
#pragma once

#include <functional>

#include "airykit/field.hpp"

namespace airykit {

/// Multiplier <xi>^s = (1 + xi^2)^{s/2}.
SpectralField bessel_potential(const SpectralField& u, double s);

/// Multiplier |xi|^s. The xi = 0 coefficient is set to zero for s > 0; for
/// s < 0 the input must be mean-free (the discrete symbol is singular there).
SpectralField riesz_potential(const SpectralField& u, double s);

/// Free Airy flow: coefficient at xi multiplied by e^{i xi^3 t}.
SpectralField airy_propagate(const SpectralField& u, double t);

/// Multiplier i*xi; annihilates the mean.
SpectralField spatial_derivative(const SpectralField& u);

/// Sharp projections p (|xi| <= cutoff) and P = Id - p.
SpectralField low_projection(const SpectralField& u, double cutoff);
SpectralField high_projection(const SpectralField& u, double cutoff);

/// Generic real-symbol multiplier on the spatial variable of a space-time
/// field (applied slice-independently in frequency).
SpaceTimeField apply_spatial_multiplier(const SpaceTimeField& u,
                                        const std::function<double(double)>& symbol);

}  // namespace airykit
