#pragma once

#include <filesystem>

#include "udr/signal.hpp"

namespace udr {

// CSV: UTF-8, header line "index,volts", one sample per row, '.' decimal
// point, LF line endings. Values round-trip at 17 significant digits. The
// format carries no rate, so read_csv takes it from the caller.

SampleStream read_csv(const std::filesystem::path& path, double sample_rate_hz = 1.0);
void write_csv(const SampleStream& stream, const std::filesystem::path& path);

// PCM audio: RIFF/WAVE container, 16-bit signed little-endian, mono.
// Sample value = raw/32768 * full_scale_v; rate comes from the fmt chunk.

SampleStream read_pcm_audio(const std::filesystem::path& path, double full_scale_v);
void write_pcm_audio(const SampleStream& stream, const std::filesystem::path& path,
                     double full_scale_v);

} // namespace udr
