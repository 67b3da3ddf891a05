// The bilinear difference-symbol operator
//   F_x I_-^s(f,g)(xi) = sum_{xi1+xi2=xi} |xi1-xi2|^s f^(xi1) g^(xi2),
// computed as a direct lattice convolution (exact, alias-free by
// construction). The output lives on a 2n grid so every convolution mode is
// representable. Symbol convention at xi1 = xi2: |0|^0 = 1 (ordinary
// product), |0|^s = 0 for s > 0; negative s skips the zero-difference pairs.
#pragma once

#include "airykit/field.hpp"

namespace airykit {

SpectralField bilinear_riesz_minus(const SpectralField& f, const SpectralField& g, double s);

/// Workspace for repeated |xi1-xi2|^{1/2} convolutions of evolving spectra.
/// Holds SoA copies of the input spectra, the reversed weight line and the
/// output accumulator. `convolve_norm2` returns
///   L * sum_xi |xi| * |sum_* |xi1-xi2|^{1/2} a(xi1) b(xi2)|^2
/// for the current contents of a/b, i.e. the squared L^2_x norm of
/// I^{1/2} I_-^{1/2}(a, b) over the full 2n output band.
class BilinearSliceKernel {
  public:
    explicit BilinearSliceKernel(const SpatialGrid& grid);

    void load(const SpectralField& f, const SpectralField& g);
    /// Advance both loaded spectra by the Airy phase over dt (in-place).
    void advance_phase(double dt);
    /// Recompute the loaded spectra as the exact propagation of the original
    /// inputs to absolute time t (resets accumulated phase rounding).
    void set_time(double t);

    double convolve_norm2();

  private:
    SpatialGrid grid_;
    int n_ = 0;
    std::vector<double> ar_, ai_, br_, bi_;      // current spectra (SoA)
    std::vector<double> a0r_, a0i_, b0r_, b0i_;  // originals
    std::vector<double> wrev_;                   // sqrt(h|mu|), reversed line
    std::vector<double> outw_;                   // L * |xi_out|
    std::vector<double> or_, oi_;                // output accumulator
    std::vector<double> xi3_;                    // xi^3 per mode
};

}  // namespace airykit
