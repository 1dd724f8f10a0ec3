#include "udr/kernels.hpp"

#include "kernel_table.hpp"

#if defined(UDR_HAVE_AVX2)

#include <immintrin.h>

// AVX2 variants. Every lane performs the same IEEE operation sequence as the
// scalar reference (div, floor, mul, sub, compare-and-blend), and the
// reductions keep the reference's four-lane accumulation order, so results
// are bit-identical to scalar.cpp.

namespace udr::kernels::avx2 {
namespace {

inline __m256d blend_where(__m256d mask, __m256d yes, __m256d no) {
    return _mm256_blendv_pd(no, yes, mask);
}

void fold_array_impl(const double* x, std::size_t n, double v_ref, double* v_mod, double* wrap) {
    const __m256d vv = _mm256_set1_pd(v_ref);
    const __m256d neg_v = _mm256_set1_pd(-v_ref);
    const __m256d two_v = _mm256_set1_pd(2.0 * v_ref);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d t = _mm256_div_pd(_mm256_add_pd(xi, vv), two_v);
        const __m256d f = _mm256_floor_pd(t);
        __m256d w = _mm256_mul_pd(f, two_v);
        __m256d y = _mm256_sub_pd(xi, w);
        const __m256d below = _mm256_cmp_pd(y, neg_v, _CMP_LT_OQ);
        y = blend_where(below, _mm256_add_pd(y, two_v), y);
        w = blend_where(below, _mm256_sub_pd(w, two_v), w);
        const __m256d above = _mm256_cmp_pd(y, vv, _CMP_GE_OQ);
        y = blend_where(above, _mm256_sub_pd(y, two_v), y);
        w = blend_where(above, _mm256_add_pd(w, two_v), w);
        _mm256_storeu_pd(v_mod + i, y);
        _mm256_storeu_pd(wrap + i, w);
    }
    for (; i < n; ++i) {
        const FoldParts p = fold_value(x[i], v_ref);
        v_mod[i] = p.v_mod;
        wrap[i] = p.wrap;
    }
}

void quantize_mid_rise_impl(const double* x, std::size_t n, double v_ref, int bits,
                            double* levels) {
    const double delta = quant_step(v_ref, bits);
    const double k_max = static_cast<double>((std::uint64_t{1} << bits) - 1);
    const __m256d vv = _mm256_set1_pd(v_ref);
    const __m256d vdelta = _mm256_set1_pd(delta);
    const __m256d vk_max = _mm256_set1_pd(k_max);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        __m256d k = _mm256_floor_pd(_mm256_div_pd(_mm256_add_pd(xi, vv), vdelta));
        k = _mm256_min_pd(k, vk_max);
        k = _mm256_max_pd(k, zero);
        const __m256d q = _mm256_sub_pd(_mm256_mul_pd(_mm256_add_pd(k, half), vdelta), vv);
        _mm256_storeu_pd(levels + i, q);
    }
    for (; i < n; ++i) {
        levels[i] = mid_rise_level(x[i], v_ref, delta, k_max);
    }
}

void quantize_clipping_impl(const double* x, std::size_t n, double v_ref, int bits,
                            double* levels) {
    const double delta = quant_step(v_ref, bits);
    const double k_max = static_cast<double>((std::uint64_t{1} << bits) - 1);
    const __m256d vv = _mm256_set1_pd(v_ref);
    const __m256d neg_v = _mm256_set1_pd(-v_ref);
    const __m256d vdelta = _mm256_set1_pd(delta);
    const __m256d vk_max = _mm256_set1_pd(k_max);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d c = _mm256_min_pd(_mm256_max_pd(xi, neg_v), vv);
        __m256d k = _mm256_floor_pd(_mm256_div_pd(_mm256_add_pd(c, vv), vdelta));
        k = _mm256_min_pd(k, vk_max);
        k = _mm256_max_pd(k, zero);
        __m256d q = _mm256_sub_pd(_mm256_mul_pd(_mm256_add_pd(k, half), vdelta), vv);
        q = blend_where(_mm256_cmp_pd(xi, vv, _CMP_GT_OQ), vv, q);
        q = blend_where(_mm256_cmp_pd(xi, neg_v, _CMP_LT_OQ), neg_v, q);
        _mm256_storeu_pd(levels + i, q);
    }
    for (; i < n; ++i) {
        levels[i] = clipped_level(x[i], v_ref, delta, k_max);
    }
}

void add_arrays_impl(const double* a, const double* b, std::size_t n, double* sum) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(sum + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) {
        sum[i] = a[i] + b[i];
    }
}

double sum_squares_impl(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double lane[4];
    _mm256_storeu_pd(lane, acc);
    for (std::size_t j = 0; i < n; ++i, ++j) {
        lane[j] += x[i] * x[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_squared_diff_impl(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double lane[4];
    _mm256_storeu_pd(lane, acc);
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

} // namespace udr::kernels::avx2

#endif // UDR_HAVE_AVX2
