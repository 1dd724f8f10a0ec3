#pragma once

#include <cstddef>

namespace udr::kernels {

struct KernelTable {
    void (*fold_array)(const double*, std::size_t, double, double*, double*);
    void (*quantize_mid_rise)(const double*, std::size_t, double, int, double*);
    void (*quantize_clipping)(const double*, std::size_t, double, int, double*);
    void (*add_arrays)(const double*, const double*, std::size_t, double*);
    double (*sum_squares)(const double*, std::size_t);
    double (*sum_squared_diff)(const double*, const double*, std::size_t);
};

namespace scalar {
extern const KernelTable table;
}

#if defined(UDR_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif

} // namespace udr::kernels
