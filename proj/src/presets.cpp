#include "udr/presets.hpp"

#include <numbers>

namespace udr {
namespace {

constexpr double half_pi = std::numbers::pi / 2.0;
constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

ExperimentPreset fig5_preset() {
    // Align all four tones to peak together at t0 = 25 ms (a sample instant
    // at 53 kHz), so the 1.2 V peak and the full three-fold swing occur in
    // the generated data.
    const double t0 = 1325.0 / 53000.0;
    SinusoidMixture mix;
    for (const double f : {30.0, 70.0, 200.0, 300.0}) {
        mix.components.push_back({0.3, f, half_pi - two_pi * f * t0});
    }
    SignalSpec spec;
    spec.kind = mix;
    spec.duration_s = 0.1;
    spec.sample_rate_hz = 53000.0;
    return {"fig5", spec, AdcConfig::make(0.2, 11), 1.2};
}

ExperimentPreset fig6_preset() {
    // Placeholder 4 kHz-bandwidth-style tone; real runs feed speech audio.
    SinusoidMixture mix;
    mix.components.push_back({1.2, 400.0, 0.0});
    SignalSpec spec;
    spec.kind = mix;
    spec.duration_s = 0.25;
    spec.sample_rate_hz = 16000.0;
    return {"fig6", spec, AdcConfig::make(0.2, 11), 1.2};
}

ExperimentPreset proto_preset() {
    // Raised-cosine form 5(1 - cos) starts at 0 V (in range) and peaks at
    // 10 V; the prototype front end accepts only positive inputs.
    SinusoidMixture mix;
    mix.components.push_back({5.0, 1000.0, -half_pi});
    mix.components.push_back({5.0, 0.0, half_pi}); // +5 V bias
    SignalSpec spec;
    spec.kind = mix;
    spec.duration_s = 0.005;
    spec.sample_rate_hz = 200000.0;
    return {"proto", spec, AdcConfig::make(1.65, 12), 10.0};
}

} // namespace udr
