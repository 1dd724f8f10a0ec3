#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace udr::kernels {

// Array kernels for the arithmetic inner loops (stream folding, quantizer
// transfer curves, energy reductions). Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant selected at runtime. The
// two variants are bit-identical by construction: same operation sequence,
// same rounding, and reductions use a fixed four-lane accumulation order.

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Backend used by the array kernels. Resolved once: AVX2 when the CPU has
/// it, unless the UDR_KERNELS environment variable ("scalar"/"avx2") says
/// otherwise.
Backend active_backend();

/// Force a backend (test hook). Throws UnsupportedError if unavailable.
void set_backend(Backend b);

struct FoldParts {
    double v_mod; // centered remainder in [-v_ref, v_ref)
    double wrap;  // x - v_mod; an integer multiple of 2*v_ref
};

/// One centered modulo fold: v_mod = mod(x + v_ref, 2 v_ref) - v_ref.
/// The wrap count wrap/(2 v_ref) is an exact integer for |x| up to about
/// 2^40 * v_ref; v_mod lands in [-v_ref, v_ref) by construction.
inline FoldParts fold_value(double x, double v_ref) {
    const double two_v = 2.0 * v_ref;
    const double t = (x + v_ref) / two_v;
    const double f = std::floor(t);
    double wrap = f * two_v;
    double y = x - wrap;
    if (y < -v_ref) {
        y += two_v;
        wrap -= two_v;
    }
    if (y >= v_ref) {
        y -= two_v;
        wrap += two_v;
    }
    return {y, wrap};
}

/// Mid-rise reconstruction level for x in [-v_ref, v_ref): the cell index is
/// floor((x + v_ref)/delta) clamped to [0, k_max], and the level sits half a
/// step into the cell.
inline double mid_rise_level(double x, double v_ref, double delta, double k_max) {
    double k = std::floor((x + v_ref) / delta);
    if (k > k_max) k = k_max;
    if (k < 0.0) k = 0.0;
    return (k + 0.5) * delta - v_ref;
}

/// Standard (non-folding) ADC transfer: in-range inputs quantize mid-rise,
/// inputs beyond +/-v_ref saturate to the clip level itself.
inline double clipped_level(double x, double v_ref, double delta, double k_max) {
    double c = x;
    if (c > v_ref) c = v_ref;
    if (c < -v_ref) c = -v_ref;
    double q = mid_rise_level(c, v_ref, delta, k_max);
    if (x > v_ref) q = v_ref;
    if (x < -v_ref) q = -v_ref;
    return q;
}

inline double quant_step(double v_ref, int bits) {
    return (2.0 * v_ref) / static_cast<double>(std::uint64_t{1} << bits);
}

/// v_mod[i], wrap[i] = fold_value(x[i], v_ref).
void fold_array(const double* x, std::size_t n, double v_ref, double* v_mod, double* wrap);

/// levels[i] = mid_rise_level(x[i]) with step 2*v_ref/2^bits.
void quantize_mid_rise(const double* x, std::size_t n, double v_ref, int bits, double* levels);

/// levels[i] = clipped_level(x[i]) with step 2*v_ref/2^bits.
void quantize_clipping(const double* x, std::size_t n, double v_ref, int bits, double* levels);

/// sum[i] = a[i] + b[i].
void add_arrays(const double* a, const double* b, std::size_t n, double* sum);

/// Sum of x[i]^2 (fixed four-lane accumulation order).
double sum_squares(const double* x, std::size_t n);

/// Sum of (a[i] - b[i])^2 (fixed four-lane accumulation order).
double sum_squared_diff(const double* a, const double* b, std::size_t n);

} // namespace udr::kernels
