#include "airykit/bilinear.hpp"

#include <cmath>

namespace airykit {

namespace {
inline double diff_symbol(double mu, double s) {
    if (mu == 0.0) return s == 0.0 ? 1.0 : 0.0;
    return std::pow(std::abs(mu), s);
}
}  // namespace

SpectralField bilinear_riesz_minus(const SpectralField& f, const SpectralField& g, double s) {
    require_same_grid(f, g, "bilinear_riesz_minus");
    const int n = f.grid.n;
    const double h = f.grid.dxi();
    SpatialGrid out_grid = make_spatial_grid(2 * n, f.grid.length);
    SpectralField out(out_grid, f.real_valued && g.real_valued && s >= 0.0);
    // modes of f,g: k - n/2; output mode k1+k2 in [-n, n-2], all representable
    for (int i1 = 0; i1 < n; ++i1) {
        const cplx a = f.coef[static_cast<std::size_t>(i1)];
        if (a == cplx(0.0, 0.0)) continue;
        const int k1 = i1 - n / 2;
        for (int i2 = 0; i2 < n; ++i2) {
            const int k2 = i2 - n / 2;
            const double w = diff_symbol(h * (k1 - k2), s);
            if (w == 0.0) continue;
            out.at_mode(k1 + k2) += w * a * g.coef[static_cast<std::size_t>(i2)];
        }
    }
    return out;
}

BilinearSliceKernel::BilinearSliceKernel(const SpatialGrid& grid) : grid_(grid), n_(grid.n) {
    const double h = grid.dxi();
    const std::size_t n = static_cast<std::size_t>(n_);
    ar_.assign(n, 0.0); ai_.assign(n, 0.0);
    br_.assign(n, 0.0); bi_.assign(n, 0.0);
    a0r_.assign(n, 0.0); a0i_.assign(n, 0.0);
    b0r_.assign(n, 0.0); b0i_.assign(n, 0.0);
    or_.assign(2 * n, 0.0); oi_.assign(2 * n, 0.0);
    // w(k1,k2) = sqrt(h|k1-k2|) accessed as wrev_[(n-1-k1) + k2]
    wrev_.assign(2 * n - 1, 0.0);
    for (int d = -(n_ - 1); d <= n_ - 1; ++d)
        wrev_[static_cast<std::size_t>((n_ - 1) - d)] = std::sqrt(h * std::abs(d));
    outw_.assign(2 * n - 1, 0.0);
    for (int j = 0; j <= 2 * n_ - 2; ++j)
        outw_[static_cast<std::size_t>(j)] = grid.length * h * std::abs(j - n_);
    xi3_.assign(n, 0.0);
    for (int i = 0; i < n_; ++i) {
        const double xi = grid.xi_at(i);
        xi3_[static_cast<std::size_t>(i)] = xi * xi * xi;
    }
}

void BilinearSliceKernel::load(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid == grid_) || !(g.grid == grid_))
        throw std::invalid_argument("BilinearSliceKernel: grid mismatch");
    for (int i = 0; i < n_; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        a0r_[s] = ar_[s] = f.coef[s].real();
        a0i_[s] = ai_[s] = f.coef[s].imag();
        b0r_[s] = br_[s] = g.coef[s].real();
        b0i_[s] = bi_[s] = g.coef[s].imag();
    }
}

void BilinearSliceKernel::advance_phase(double dt) {
    for (int i = 0; i < n_; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        const double c = std::cos(xi3_[s] * dt), sn = std::sin(xi3_[s] * dt);
        double re = ar_[s], im = ai_[s];
        ar_[s] = re * c - im * sn;
        ai_[s] = re * sn + im * c;
        re = br_[s]; im = bi_[s];
        br_[s] = re * c - im * sn;
        bi_[s] = re * sn + im * c;
    }
}

void BilinearSliceKernel::set_time(double t) {
    for (int i = 0; i < n_; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        const double c = std::cos(xi3_[s] * t), sn = std::sin(xi3_[s] * t);
        ar_[s] = a0r_[s] * c - a0i_[s] * sn;
        ai_[s] = a0r_[s] * sn + a0i_[s] * c;
        br_[s] = b0r_[s] * c - b0i_[s] * sn;
        bi_[s] = b0r_[s] * sn + b0i_[s] * c;
    }
}

double BilinearSliceKernel::convolve_norm2() {
    const std::size_t on = static_cast<std::size_t>(2 * n_ - 1);
    std::fill(or_.begin(), or_.begin() + static_cast<std::ptrdiff_t>(on), 0.0);
    std::fill(oi_.begin(), oi_.begin() + static_cast<std::ptrdiff_t>(on), 0.0);
    const double* wbase = wrev_.data();
    for (int i1 = 0; i1 < n_; ++i1) {
        const double par = ar_[static_cast<std::size_t>(i1)];
        const double pai = ai_[static_cast<std::size_t>(i1)];
        if (par == 0.0 && pai == 0.0) continue;
        const double* w = wbase + (n_ - 1 - i1);
        double* outr = or_.data() + i1;
        double* outi = oi_.data() + i1;
        const double* qr = br_.data();
        const double* qi = bi_.data();
        for (int i2 = 0; i2 < n_; ++i2) {
            const double ww = w[i2];
            outr[i2] += ww * (par * qr[i2] - pai * qi[i2]);
            outi[i2] += ww * (par * qi[i2] + pai * qr[i2]);
        }
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < on; ++j)
        acc += outw_[j] * (or_[j] * or_[j] + oi_[j] * oi_[j]);
    return acc;
}

}  // namespace airykit
