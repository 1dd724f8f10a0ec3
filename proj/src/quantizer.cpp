#include "udr/quantizer.hpp"

#include <cmath>

#include "udr/errors.hpp"
#include "udr/kernels.hpp"

namespace udr {

CodeWord sar_quantize(double v_mod, const AdcConfig& config) {
    const double v_ref = config.v_ref;
    if (std::isnan(v_mod) || v_mod < -v_ref || v_mod > v_ref) {
        throw DomainError("sar_quantize input outside [-v_ref, v_ref]");
    }
    const int qb = config.quant_bits;
    const double delta = config.delta_udr();

    const bool sign_mod = !(v_mod < 0.0);
    const double magnitude = sign_mod ? v_mod : -v_mod;

    // Successive approximation of the magnitude against DAC levels j*delta.
    // The comparator keeps a trial bit when the magnitude clears the level;
    // negative inputs use the strict comparison so that the final bitwise
    // inversion yields the left-open cells the offset-binary map needs.
    std::uint32_t mag_code = 0;
    for (int bit = qb - 2; bit >= 0; --bit) {
        const std::uint32_t trial = mag_code | (std::uint32_t{1} << bit);
        const double dac = static_cast<double>(trial) * delta;
        const bool keep = sign_mod ? (magnitude >= dac) : (magnitude > dac);
        if (keep) mag_code = trial;
    }

    // Register starts at 100...0; lower bits carry the magnitude search.
    std::uint32_t word = (std::uint32_t{1} << (qb - 1)) | mag_code;
    if (!sign_mod) {
        word = ~word & ((std::uint32_t{1} << qb) - 1);
    }
    return {word, sign_mod};
}

double dequantize(CodeWord word, const AdcConfig& config) {
    const double delta = config.delta_udr();
    return (static_cast<double>(word.code) + 0.5) * delta - config.v_ref;
}

double quantize_standard(double x, double v_ref, int bits) {
    if (!(v_ref > 0.0)) throw DomainError("v_ref must be positive");
    if (bits < 1 || bits > 34) throw DomainError("bits must be in [1, 34]");
    const double delta = kernels::quant_step(v_ref, bits);
    const double k_max = static_cast<double>((std::uint64_t{1} << bits) - 1);
    return kernels::clipped_level(x, v_ref, delta, k_max);
}

} // namespace udr
