#pragma once

#include <span>
#include <vector>

#include "udr/codec.hpp"
#include "udr/signal.hpp"

namespace udr {

/// Accumulate reset codes into the piecewise-constant offset z:
/// z[k] = 2 v_ref * (positives - negatives among resets[0..k]). The change
/// lands at the sample where the reset is reported.
std::vector<double> accumulate_resets(std::span<const ResetCode> resets, double v_ref);

/// Invert the converter: x_hat[k] = dequantize(code[k]) + z[k], with the
/// sample rate copied from the stream header.
SampleStream reconstruct(const ModuloStream& stream);

/// Signal-to-reconstruction-error ratio in dB:
/// 10 log10(sum ref^2 / sum (ref - est)^2). Zero error energy returns the
/// +infinity sentinel. Length mismatch throws DomainError.
double srer_db(const SampleStream& reference, const SampleStream& estimate);

} // namespace udr
