#include "udr/frontend.hpp"

#include <cmath>

#include "udr/errors.hpp"
#include "udr/kernels.hpp"

namespace udr {

double AdcConfig::delta_udr() const {
    return kernels::quant_step(v_ref, quant_bits);
}

AdcConfig AdcConfig::make(double v_ref, int total_bits, int counter_bits) {
    if (!(v_ref > 0.0) || !std::isfinite(v_ref)) {
        throw ConfigError("v_ref must be positive");
    }
    if (total_bits < 3 || total_bits > 34) {
        throw ConfigError("total bits must be in [3, 34]");
    }
    if (counter_bits < 1 || counter_bits > 30) {
        throw ConfigError("counter bits must be in [1, 30]");
    }
    AdcConfig cfg;
    cfg.v_ref = v_ref;
    cfg.total_bits = total_bits;
    cfg.quant_bits = total_bits - 2;
    cfg.counter_bits = counter_bits;
    return cfg;
}

bool validate_timing(const AdcConfig& config) {
    if (config.t_clk_sh < 0.0 || config.t_clk_cnt < 0.0 || config.tau < 0.0) {
        throw DomainError("clock periods must be >= 0");
    }
    return config.t_clk_sh >= 2.0 * config.t_clk_cnt + config.tau;
}

ModuloFold modulo_fold(double x, double v_ref) {
    const kernels::FoldParts p = kernels::fold_value(x, v_ref);
    return {p.v_mod, std::llround(p.wrap / (2.0 * v_ref))};
}

FoldState fold_step(const FoldState& state, double v_in, const AdcConfig& config) {
    FoldState s = state;
    const double two_v = 2.0 * config.v_ref;
    s.sign_in = !(v_in < 0.0);
    const double feedback = (s.sign_in ? 1.0 : -1.0) * static_cast<double>(s.cnt_out) * two_v;
    const double v_mod = v_in - feedback;
    s.sign_mod = !(v_mod < 0.0);
    s.eom = std::fabs(v_mod) <= config.v_ref;
    if (!s.eom) {
        if (s.sign_mod == s.sign_in) {
            if (s.cnt_out >= config.counter_max()) {
                throw SaturationError("modulo counter overflow");
            }
            ++s.cnt_out;
        } else {
            if (s.cnt_out == 0) {
                throw SaturationError("modulo counter underflow");
            }
            --s.cnt_out;
        }
    }
    return s;
}

std::pair<FoldResult, FoldState> fold_sample(const FoldState& prev, double v_in,
                                             const AdcConfig& config, int max_cycles) {
    FoldState s = prev;
    int cycles = 0;
    while (true) {
        s = fold_step(s, v_in, config);
        ++cycles;
        if (s.eom) break;
        if (cycles >= max_cycles) {
            throw NonConvergenceError("modulo fold did not converge within cycle budget");
        }
    }

    FoldResult res;
    res.cycles_used = cycles;
    res.fold_count = s.signed_fold();
    res.v_mod =
        v_in - (s.sign_in ? 1.0 : -1.0) * static_cast<double>(s.cnt_out) * (2.0 * config.v_ref);
    const std::int64_t delta = res.fold_count - prev.signed_fold();
    res.reset = delta == 0 ? ResetCode::none
                           : (delta > 0 ? ResetCode::positive : ResetCode::negative);
    return {res, s};
}

} // namespace udr
