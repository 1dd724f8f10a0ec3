#pragma once

#include "udr/frontend.hpp"
#include "udr/signal.hpp"

namespace udr {

/// Canned experiment configuration: a test signal plus the converter setup
/// that acquires it.
struct ExperimentPreset {
    const char* name;
    SignalSpec signal;
    AdcConfig adc;
    double pcm_full_scale_v;
};

/// Four-tone bench signal: {30, 70, 200, 300} Hz at 0.3 V each (1.2 V peak,
/// phase-aligned so the peak is actually realized), 53 kHz sample-and-hold,
/// 0.2 V reference, 11 bits per sample (9 + 2).
ExperimentPreset fig5_preset();

/// Speech acquisition setup: 0.2 V reference, 11 bits, 1.2 V full-scale PCM
/// mapping. The audio itself comes from the caller's file.
ExperimentPreset fig6_preset();

/// Discrete-component prototype setup: 1.65 V reference, 12 bits, 200 ksps.
/// The bench signal is a 5 V-amplitude 1 kHz tone biased to the positive
/// rail (the prototype accepts only positive inputs), spanning [0, 10] V.
ExperimentPreset proto_preset();

} // namespace udr
