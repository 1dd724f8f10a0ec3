#include "udr/kernels.hpp"

#include "kernel_table.hpp"

// Reference kernels. The SIMD variants must reproduce these bit-for-bit, so
// the loops below fix the exact operation order, including the four-lane
// accumulation scheme used by the reductions.

namespace udr::kernels::scalar {
namespace {

void fold_array_impl(const double* x, std::size_t n, double v_ref, double* v_mod, double* wrap) {
    for (std::size_t i = 0; i < n; ++i) {
        const FoldParts p = fold_value(x[i], v_ref);
        v_mod[i] = p.v_mod;
        wrap[i] = p.wrap;
    }
}

void quantize_mid_rise_impl(const double* x, std::size_t n, double v_ref, int bits,
                            double* levels) {
    const double delta = quant_step(v_ref, bits);
    const double k_max = static_cast<double>((std::uint64_t{1} << bits) - 1);
    for (std::size_t i = 0; i < n; ++i) {
        levels[i] = mid_rise_level(x[i], v_ref, delta, k_max);
    }
}

void quantize_clipping_impl(const double* x, std::size_t n, double v_ref, int bits,
                            double* levels) {
    const double delta = quant_step(v_ref, bits);
    const double k_max = static_cast<double>((std::uint64_t{1} << bits) - 1);
    for (std::size_t i = 0; i < n; ++i) {
        levels[i] = clipped_level(x[i], v_ref, delta, k_max);
    }
}

void add_arrays_impl(const double* a, const double* b, std::size_t n, double* sum) {
    for (std::size_t i = 0; i < n; ++i) {
        sum[i] = a[i] + b[i];
    }
}

double sum_squares_impl(const double* x, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lane[0] += x[i + 0] * x[i + 0];
        lane[1] += x[i + 1] * x[i + 1];
        lane[2] += x[i + 2] * x[i + 2];
        lane[3] += x[i + 3] * x[i + 3];
    }
    for (std::size_t j = 0; i < n; ++i, ++j) {
        lane[j] += x[i] * x[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_squared_diff_impl(const double* a, const double* b, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double d0 = a[i + 0] - b[i + 0];
        const double d1 = a[i + 1] - b[i + 1];
        const double d2 = a[i + 2] - b[i + 2];
        const double d3 = a[i + 3] - b[i + 3];
        lane[0] += d0 * d0;
        lane[1] += d1 * d1;
        lane[2] += d2 * d2;
        lane[3] += d3 * d3;
    }
    for (std::size_t j = 0; i < n; ++i, ++j) {
        const double d = a[i] - b[i];
        lane[j] += d * d;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

} // namespace

const KernelTable table = {
    fold_array_impl,    quantize_mid_rise_impl, quantize_clipping_impl,
    add_arrays_impl,    sum_squares_impl,       sum_squared_diff_impl,
};

} // namespace udr::kernels::scalar
