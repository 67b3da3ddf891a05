// FFTW-backed transforms between physical samples and ascending-mode
// amplitude coefficients.
//
// Forward divides by the lattice size so a pure mode e^{i xi_k x} maps to
// coefficient 1 at mode k; the inverse is the plain synthesis sum. Plans are
// cached per size behind a mutex (the FFTW planner is not thread-safe);
// execution on caller buffers is concurrent.
#pragma once

#include <vector>

#include "airykit/field.hpp"

namespace airykit {

/// samples (physical, size n) -> coefficients (ascending modes).
SpectralField forward_transform(const SpatialGrid& grid, const std::vector<cplx>& samples,
                                bool real_valued = false);

/// coefficients -> physical samples at x_j = j L / n.
std::vector<cplx> inverse_transform(const SpectralField& field);

/// coefficients -> samples on a finer grid with pad_n >= n points (zero-padded
/// spectrum, same torus). Used for alias-free products.
std::vector<cplx> inverse_transform_padded(const SpectralField& field, int pad_n);

/// samples on a pad_n grid -> coefficients restricted to the band of `grid`.
SpectralField forward_transform_restrict(const SpatialGrid& grid,
                                         const std::vector<cplx>& padded_samples,
                                         bool real_valued = false);

/// Space-time analogues (2D transforms on the product torus).
SpaceTimeField forward_transform_2d(const SpatialGrid& grid, const TimeWindow& window,
                                    const std::vector<cplx>& samples);
std::vector<cplx> inverse_transform_2d(const SpaceTimeField& field);

/// Unscaled 1D FFT helpers on raw buffers (fft-standard bin order).
/// forward computes sum_j x_j e^{-2 pi i j b / n}; backward the conjugate sum.
void fft_raw(std::vector<cplx>& data, bool forward);

/// Synthesize only the time dependence: out[j * n + i] = sum_m c[i][m]
/// e^{i tau_m t_j}. Entries remain spatial coefficients (ascending modes),
/// grouped slice-major — the natural input for per-slice convolutions.
std::vector<cplx> time_slices_of(const SpaceTimeField& field);

/// Inverse of time_slices_of (slice-major spatial coefficients in).
SpaceTimeField field_from_time_slices(const SpatialGrid& grid, const TimeWindow& window,
                                      const std::vector<cplx>& slices);

}  // namespace airykit
