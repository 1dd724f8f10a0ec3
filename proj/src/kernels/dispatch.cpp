#include "udr/kernels.hpp"

#include <cstdlib>
#include <string>

#include "kernel_table.hpp"
#include "udr/errors.hpp"

namespace udr::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(UDR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

struct Dispatch {
    Backend backend;
    const KernelTable* table;
};

Dispatch resolve_default() {
    Backend b = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("UDR_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") {
            b = Backend::scalar;
        } else if (want == "avx2" && backend_available(Backend::avx2)) {
            b = Backend::avx2;
        }
    }
    const KernelTable* t = &scalar::table;
#if defined(UDR_HAVE_AVX2)
    if (b == Backend::avx2) t = &avx2::table;
#endif
    return {b, t};
}

Dispatch& dispatch() {
    static Dispatch d = resolve_default();
    return d;
}

} // namespace

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
    return cpu_has_avx2();
}

Backend active_backend() {
    return dispatch().backend;
}

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw UnsupportedError(std::string("kernel backend not available: ") + backend_name(b));
    }
    dispatch().backend = b;
    dispatch().table = &scalar::table;
#if defined(UDR_HAVE_AVX2)
    if (b == Backend::avx2) dispatch().table = &avx2::table;
#endif
}

void fold_array(const double* x, std::size_t n, double v_ref, double* v_mod, double* wrap) {
    dispatch().table->fold_array(x, n, v_ref, v_mod, wrap);
}

void quantize_mid_rise(const double* x, std::size_t n, double v_ref, int bits, double* levels) {
    dispatch().table->quantize_mid_rise(x, n, v_ref, bits, levels);
}

void quantize_clipping(const double* x, std::size_t n, double v_ref, int bits, double* levels) {
    dispatch().table->quantize_clipping(x, n, v_ref, bits, levels);
}

void add_arrays(const double* a, const double* b, std::size_t n, double* sum) {
    dispatch().table->add_arrays(a, b, n, sum);
}

double sum_squares(const double* x, std::size_t n) {
    return dispatch().table->sum_squares(x, n);
}

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
    return dispatch().table->sum_squared_diff(a, b, n);
}

} // namespace udr::kernels
