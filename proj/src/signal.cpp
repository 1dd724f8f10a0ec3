#include "udr/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "udr/errors.hpp"

namespace udr {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

const char* distribution_name(DistributionKind k) {
    switch (k) {
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::gaussian: return "gaussian";
    case DistributionKind::laplacian: return "laplacian";
    }
    return "?";
}

std::optional<DistributionKind> parse_distribution(const std::string& name) {
    if (name == "uniform") return DistributionKind::uniform;
    if (name == "gaussian") return DistributionKind::gaussian;
    if (name == "laplacian") return DistributionKind::laplacian;
    return std::nullopt;
}

void validate(const SignalSpec& spec) {
    if (!(spec.sample_rate_hz > 0.0) || !std::isfinite(spec.sample_rate_hz)) {
        throw ConfigError("sample rate must be positive");
    }
    if (!(spec.duration_s > 0.0) || !std::isfinite(spec.duration_s)) {
        throw ConfigError("duration must be positive");
    }
    if (const auto* mix = std::get_if<SinusoidMixture>(&spec.kind)) {
        for (const SineComponent& c : mix->components) {
            if (c.amplitude_v < 0.0 || !std::isfinite(c.amplitude_v)) {
                throw ConfigError("sinusoid amplitude must be >= 0");
            }
            if (c.frequency_hz < 0.0 || !std::isfinite(c.frequency_hz)) {
                throw ConfigError("sinusoid frequency must be >= 0");
            }
            if (!std::isfinite(c.phase_rad)) {
                throw ConfigError("sinusoid phase must be finite");
            }
        }
    } else {
        const auto& rp = std::get<RandomProcess>(spec.kind);
        if (!(rp.sigma_v > 0.0) || !std::isfinite(rp.sigma_v)) {
            throw ConfigError("random process sigma must be positive");
        }
    }
}

double eval_mixture(const SinusoidMixture& mix, double t) {
    double x = 0.0;
    for (const SineComponent& c : mix.components) {
        x += c.amplitude_v * std::sin(two_pi * c.frequency_hz * t + c.phase_rad);
    }
    return x;
}

VariateSampler::VariateSampler(DistributionKind kind, double sigma, std::uint64_t seed)
    : kind_(kind), sigma_(sigma), engine_(seed) {}

double VariateSampler::unit_open() {
    // 53-bit draw offset by half an ulp: strictly inside (0, 1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
}

double VariateSampler::operator()() {
    switch (kind_) {
    case DistributionKind::uniform: {
        const double u = unit_open();
        return (2.0 * u - 1.0) * std::sqrt(3.0) * sigma_;
    }
    case DistributionKind::gaussian: {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * sigma_;
        }
        const double u1 = unit_open();
        const double u2 = unit_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = two_pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a) * sigma_;
    }
    case DistributionKind::laplacian: {
        // Inverse CDF with scale b = sigma/sqrt(2), so the variance is
        // 2 b^2 = sigma^2.
        const double b = sigma_ / std::sqrt(2.0);
        const double u = unit_open();
        return (u < 0.5) ? b * std::log(2.0 * u) : -b * std::log(2.0 * (1.0 - u));
    }
    }
    return 0.0;
}

SampleStream generate(const SignalSpec& spec, std::uint64_t seed) {
    validate(spec);
    const double count = std::round(spec.duration_s * spec.sample_rate_hz);
    if (!(count >= 1.0) || count > 1e12) {
        throw ConfigError("duration and sample rate give no samples");
    }
    const auto n = static_cast<std::size_t>(count);
    SampleStream out;
    out.sample_rate_hz = spec.sample_rate_hz;
    out.samples.resize(n);
    if (const auto* mix = std::get_if<SinusoidMixture>(&spec.kind)) {
        for (std::size_t i = 0; i < n; ++i) {
            out.samples[i] = eval_mixture(*mix, static_cast<double>(i) / spec.sample_rate_hz);
        }
    } else {
        const auto& rp = std::get<RandomProcess>(spec.kind);
        VariateSampler draw(rp.distribution, rp.sigma_v, seed);
        for (std::size_t i = 0; i < n; ++i) {
            out.samples[i] = draw();
        }
    }
    return out;
}

double lipschitz_bound(const SignalSpec& spec) {
    const auto* mix = std::get_if<SinusoidMixture>(&spec.kind);
    if (mix == nullptr) {
        throw UnsupportedError("no finite Lipschitz bound for a random process");
    }
    double alpha = 0.0;
    for (const SineComponent& c : mix->components) {
        alpha += c.amplitude_v * two_pi * c.frequency_hz;
    }
    return alpha;
}

std::optional<double> max_sampling_period(double alpha, double v_ref) {
    if (alpha < 0.0 || !(v_ref > 0.0)) {
        throw DomainError("max_sampling_period needs alpha >= 0 and v_ref > 0");
    }
    if (alpha == 0.0) return std::nullopt;
    return 2.0 * v_ref / alpha;
}

} // namespace udr
