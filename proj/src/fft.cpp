#include "airykit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace airykit {

namespace {

// Plan cache. FFTW_UNALIGNED lets one plan serve any caller buffer.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<std::size_t>(n));
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = p;
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

void execute(fftw_plan p, cplx* data) {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
}

// ascending-mode index <-> fft bin for lattice size n: bin b holds mode
// k = b (b < n/2) or b - n (b >= n/2).
inline int bin_of_index(int i, int n) {
    const int k = i - n / 2;
    return k >= 0 ? k : k + n;
}

}  // namespace

void fft_raw(std::vector<cplx>& data, bool forward) {
    fftw_plan p = PlanCache::instance().get(static_cast<int>(data.size()),
                                            forward ? FFTW_FORWARD : FFTW_BACKWARD);
    execute(p, data.data());
}

SpectralField forward_transform(const SpatialGrid& grid, const std::vector<cplx>& samples,
                                bool real_valued) {
    if (static_cast<int>(samples.size()) != grid.n)
        throw std::invalid_argument("forward_transform: sample count does not match grid");
    std::vector<cplx> work = samples;
    fft_raw(work, true);
    SpectralField out(grid, real_valued);
    const double scale = 1.0 / grid.n;
    for (int i = 0; i < grid.n; ++i)
        out.coef[static_cast<std::size_t>(i)] =
            work[static_cast<std::size_t>(bin_of_index(i, grid.n))] * scale;
    return out;
}

std::vector<cplx> inverse_transform(const SpectralField& field) {
    const int n = field.grid.n;
    std::vector<cplx> work(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        work[static_cast<std::size_t>(bin_of_index(i, n))] =
            field.coef[static_cast<std::size_t>(i)];
    fft_raw(work, false);
    return work;
}

std::vector<cplx> inverse_transform_padded(const SpectralField& field, int pad_n) {
    const int n = field.grid.n;
    if (pad_n < n) throw std::invalid_argument("inverse_transform_padded: pad_n < n");
    std::vector<cplx> work(static_cast<std::size_t>(pad_n), cplx{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        const int b = k >= 0 ? k : k + pad_n;
        work[static_cast<std::size_t>(b)] = field.coef[static_cast<std::size_t>(i)];
    }
    fft_raw(work, false);
    return work;
}

SpectralField forward_transform_restrict(const SpatialGrid& grid,
                                         const std::vector<cplx>& padded_samples,
                                         bool real_valued) {
    const int pad_n = static_cast<int>(padded_samples.size());
    if (pad_n < grid.n)
        throw std::invalid_argument(
            "forward_transform_restrict: padded grid smaller than target");
    std::vector<cplx> work = padded_samples;
    fft_raw(work, true);
    SpectralField out(grid, real_valued);
    const double scale = 1.0 / pad_n;
    for (int i = 0; i < grid.n; ++i) {
        const int k = i - grid.n / 2;
        const int b = k >= 0 ? k : k + pad_n;
        out.coef[static_cast<std::size_t>(i)] = work[static_cast<std::size_t>(b)] * scale;
    }
    return out;
}

SpaceTimeField forward_transform_2d(const SpatialGrid& grid, const TimeWindow& window,
                                    const std::vector<cplx>& samples) {
    // samples are slice-major physical values: samples[j * n + i_x].
    const int n = grid.n, nt = window.n_t;
    if (static_cast<int>(samples.size()) != n * nt)
        throw std::invalid_argument("forward_transform_2d: sample count mismatch");
    std::vector<cplx> row(static_cast<std::size_t>(n));
    std::vector<cplx> xhat(samples.size());
    for (int j = 0; j < nt; ++j) {
        std::copy_n(samples.begin() + static_cast<std::ptrdiff_t>(j) * n, n, row.begin());
        fft_raw(row, true);
        for (int b = 0; b < n; ++b)
            xhat[static_cast<std::size_t>(j) * n + b] = row[static_cast<std::size_t>(b)];
    }
    SpaceTimeField out(grid, window);
    std::vector<cplx> col(static_cast<std::size_t>(nt));
    const double scale = 1.0 / (static_cast<double>(n) * nt);
    for (int i = 0; i < n; ++i) {
        const int bx = bin_of_index(i, n);
        for (int j = 0; j < nt; ++j)
            col[static_cast<std::size_t>(j)] = xhat[static_cast<std::size_t>(j) * n + bx];
        fft_raw(col, true);
        for (int mi = 0; mi < nt; ++mi)
            out.at(i, mi) = col[static_cast<std::size_t>(bin_of_index(mi, nt))] * scale;
    }
    return out;
}

std::vector<cplx> time_slices_of(const SpaceTimeField& field) {
    const int n = field.grid.n, nt = field.window.n_t;
    std::vector<cplx> out(static_cast<std::size_t>(n) * nt);
    std::vector<cplx> col(static_cast<std::size_t>(nt));
    for (int i = 0; i < n; ++i) {
        for (int mi = 0; mi < nt; ++mi)
            col[static_cast<std::size_t>(bin_of_index(mi, nt))] = field.at(i, mi);
        fft_raw(col, false);
        for (int j = 0; j < nt; ++j)
            out[static_cast<std::size_t>(j) * n + i] = col[static_cast<std::size_t>(j)];
    }
    return out;
}

SpaceTimeField field_from_time_slices(const SpatialGrid& grid, const TimeWindow& window,
                                      const std::vector<cplx>& slices) {
    const int n = grid.n, nt = window.n_t;
    if (static_cast<int>(slices.size()) != n * nt)
        throw std::invalid_argument("field_from_time_slices: size mismatch");
    SpaceTimeField out(grid, window);
    std::vector<cplx> col(static_cast<std::size_t>(nt));
    const double scale = 1.0 / nt;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < nt; ++j)
            col[static_cast<std::size_t>(j)] = slices[static_cast<std::size_t>(j) * n + i];
        fft_raw(col, true);
        for (int mi = 0; mi < nt; ++mi)
            out.at(i, mi) = col[static_cast<std::size_t>(bin_of_index(mi, nt))] * scale;
    }
    return out;
}

std::vector<cplx> inverse_transform_2d(const SpaceTimeField& field) {
    const int n = field.grid.n, nt = field.window.n_t;
    std::vector<cplx> slices = time_slices_of(field);  // spatial coefficients per slice
    std::vector<cplx> out(slices.size());
    std::vector<cplx> row(static_cast<std::size_t>(n));
    for (int j = 0; j < nt; ++j) {
        for (int i = 0; i < n; ++i)
            row[static_cast<std::size_t>(bin_of_index(i, n))] =
                slices[static_cast<std::size_t>(j) * n + i];
        fft_raw(row, false);
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(j) * n + i] = row[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace airykit
