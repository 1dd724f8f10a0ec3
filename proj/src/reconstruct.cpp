#include "udr/reconstruct.hpp"

#include <cmath>
#include <limits>

#include "udr/errors.hpp"
#include "udr/kernels.hpp"
#include "udr/quantizer.hpp"

namespace udr {

std::vector<double> accumulate_resets(std::span<const ResetCode> resets, double v_ref) {
    std::vector<double> z(resets.size());
    const double two_v = 2.0 * v_ref;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < resets.size(); ++i) {
        if (resets[i] == ResetCode::positive) ++count;
        if (resets[i] == ResetCode::negative) --count;
        z[i] = static_cast<double>(count) * two_v;
    }
    return z;
}

SampleStream reconstruct(const ModuloStream& stream) {
    const AdcConfig cfg = stream.config();
    SampleStream out;
    out.sample_rate_hz = stream.header.sample_rate_hz;
    out.samples.resize(stream.records.size());

    const double two_v = 2.0 * cfg.v_ref;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < stream.records.size(); ++i) {
        const Record& rec = stream.records[i];
        if (rec.reset == ResetCode::positive) ++count;
        if (rec.reset == ResetCode::negative) --count;
        out.samples[i] = dequantize({rec.code, true}, cfg) + static_cast<double>(count) * two_v;
    }
    return out;
}

double srer_db(const SampleStream& reference, const SampleStream& estimate) {
    if (reference.samples.size() != estimate.samples.size()) {
        throw DomainError("reference and estimate lengths differ");
    }
    const std::size_t n = reference.samples.size();
    const double signal = kernels::sum_squares(reference.samples.data(), n);
    const double error =
        kernels::sum_squared_diff(reference.samples.data(), estimate.samples.data(), n);
    if (error == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal / error);
}

} // namespace udr
