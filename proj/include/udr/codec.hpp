#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "udr/frontend.hpp"
#include "udr/signal.hpp"

namespace udr {

// Packed stream layout (all little-endian):
//   magic "UADC" | version u16 | total_bits u16 | v_ref f64 | sample_rate f64
//   | sample_count u64, then one record per sample. A record occupies
//   ceil(total_bits/8) bytes as an unsigned word: bits [n-3..0] carry the
//   quantizer code, bits [n-1..n-2] carry R1R0, pad bits above are zero.

inline constexpr char stream_magic[4] = {'U', 'A', 'D', 'C'};
inline constexpr std::uint16_t stream_version = 1;
inline constexpr std::size_t stream_header_bytes = 32;

struct StreamHeader {
    std::uint16_t version = stream_version;
    std::uint16_t total_bits = 0;
    double v_ref = 0.0;
    double sample_rate_hz = 0.0;
    std::uint64_t sample_count = 0;
};

struct Record {
    ResetCode reset = ResetCode::none;
    std::uint32_t code = 0;
};

struct ModuloStream {
    StreamHeader header;
    std::vector<Record> records;

    AdcConfig config() const;
    std::size_t record_bytes() const { return (header.total_bits + 7) / 8; }
    std::size_t packed_size() const {
        return stream_header_bytes + records.size() * record_bytes();
    }
};

std::vector<std::uint8_t> pack(const ModuloStream& stream);

/// Exact inverse of pack. Bad magic/version -> FormatError; a 10 reset
/// pattern or nonzero pad bits -> CorruptionError with the record index;
/// truncated or trailing payload -> LengthError.
ModuloStream unpack(std::span<const std::uint8_t> bytes);

void save_stream(const ModuloStream& stream, const std::filesystem::path& path);
ModuloStream load_stream(const std::filesystem::path& path);

/// Per-stream conversion bookkeeping from the fold front end.
struct EncodeReport {
    std::map<std::int64_t, std::uint64_t> fold_histogram;
    std::int64_t max_abs_fold = 0;
    int max_cycles_used = 0;
    std::uint64_t resets_none = 0;
    std::uint64_t resets_positive = 0;
    std::uint64_t resets_negative = 0;
    std::uint64_t growth_violations = 0; // samples needing more than two cycles
    std::uint64_t reset_overflows = 0;   // fold jumped by more than one; two bits cannot encode it
    double max_abs_increment = 0.0;      // max |x[k] - x[k-1]| seen in the input
};

/// Fold + quantize a whole stream through the cycle-level front end.
/// SaturationError is rethrown with the offending sample index attached.
std::pair<ModuloStream, EncodeReport> encode_stream(const SampleStream& input,
                                                    const AdcConfig& config,
                                                    int max_cycles = 1024);

} // namespace udr
