#pragma once

#include <cstdint>

#include "udr/frontend.hpp"

namespace udr {

/// Offset-binary quantizer output plus the latched polarity comparator.
struct CodeWord {
    std::uint32_t code = 0;
    bool sign_mod = true;
};

/// Bipolar SAR quantization of v_mod over [-v_ref, v_ref): quant_bits
/// successive binary-search steps. Non-negative inputs search the magnitude
/// directly; negative inputs run the same search on |v_mod| with a strict
/// comparator and the register is then inverted bitwise (XOR with the
/// complement of sign_mod), which lands on the identical offset-binary code
/// k = floor((v_mod + v_ref)/delta), clamped to the top code.
/// Accepts the closed upper edge +v_ref (the cycle-level comparator admits
/// |v_mod| = v_ref); anything further out throws DomainError.
CodeWord sar_quantize(double v_mod, const AdcConfig& config);

/// Mid-cell reconstruction: -v_ref + (code + 0.5) delta. Round-trip error of
/// an in-range value is at most delta/2.
double dequantize(CodeWord word, const AdcConfig& config);

/// Non-folding reference ADC with `bits` of bipolar mid-rise quantization:
/// clips to [-v_ref, v_ref], in-range values take mid-cell levels, clipped
/// values sit at the saturation level +/-v_ref so the clipping error is
/// measured against v_ref itself.
double quantize_standard(double x, double v_ref, int bits);

} // namespace udr
