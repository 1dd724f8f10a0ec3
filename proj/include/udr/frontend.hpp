#pragma once

#include <cstdint>
#include <utility>

namespace udr {

/// Converter configuration. total_bits counts everything that goes on the
/// wire per sample: quant_bits = total_bits - 2 for the amplitude plus two
/// reset bits. delta_udr() = 2 v_ref / 2^quant_bits.
struct AdcConfig {
    double v_ref = 0.0;
    int total_bits = 0;
    int quant_bits = 0;
    int counter_bits = 8;
    double t_clk_sh = 0.0;
    double t_clk_cnt = 0.0;
    double tau = 0.0;

    double delta_udr() const;
    std::uint32_t counter_max() const { return (std::uint32_t{1} << counter_bits) - 1; }

    /// Validated construction; throws ConfigError.
    static AdcConfig make(double v_ref, int total_bits, int counter_bits = 8);
};

/// True iff the sample-and-hold period covers two counter cycles plus the
/// quantizer delay: t_clk_sh >= 2 t_clk_cnt + tau. Negative periods are a
/// DomainError.
bool validate_timing(const AdcConfig& config);

/// Two-bit reset side information. Pattern 10 is never produced and is
/// rejected on decode.
enum class ResetCode : std::uint8_t {
    none = 0b00,
    positive = 0b01,
    negative = 0b11,
};

/// Modulo-circuit registers between counter clock cycles. The flags hold the
/// comparator outputs latched by the most recent cycle; when eom is false the
/// counter has already stepped and the next cycle re-evaluates.
struct FoldState {
    std::uint32_t cnt_out = 0;
    bool sign_in = true; // comparator convention: sign(0) is positive
    bool sign_mod = true;
    bool eom = true;

    /// Counter value signed by the input polarity; equals the fold count m.
    std::int64_t signed_fold() const {
        return sign_in ? static_cast<std::int64_t>(cnt_out)
                       : -static_cast<std::int64_t>(cnt_out);
    }
};

struct FoldResult {
    double v_mod = 0.0;
    std::int64_t fold_count = 0; // m: input = v_mod + m * 2 v_ref
    ResetCode reset = ResetCode::none;
    int cycles_used = 0; // > 2 means the growth-rate assumption was violated
};

struct ModuloFold {
    double v_mod;
    std::int64_t fold_count;
};

/// Ideal one-shot fold: mod(x + v_ref, 2 v_ref) - v_ref, with x = +v_ref
/// wrapping to -v_ref (half-open fold interval).
ModuloFold modulo_fold(double x, double v_ref);

/// One counter clock cycle: evaluate v_mod = v_in - sign(v_in) cnt 2 v_ref,
/// latch the comparators, and when not at end-of-modulo step the counter by
/// +1 when sign_mod == sign_in and -1 otherwise. Stepping outside
/// [0, 2^counter_bits) throws SaturationError.
FoldState fold_step(const FoldState& state, double v_in, const AdcConfig& config);

/// Run fold_step until end-of-modulo, then classify the reset code from the
/// change in signed fold value against the previous sample. Convergence
/// normally takes at most two cycles; more means the input moved past the
/// growth-rate condition and the result is still returned, flagged through
/// cycles_used. Throws NonConvergenceError after max_cycles.
std::pair<FoldResult, FoldState> fold_sample(const FoldState& prev, double v_in,
                                             const AdcConfig& config, int max_cycles = 1024);

} // namespace udr
