#include "udr/codec.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "udr/errors.hpp"
#include "udr/quantizer.hpp"

namespace udr {
namespace {

void put_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
        v >>= 8;
    }
}

void put_f64le(std::vector<std::uint8_t>& out, double v) {
    put_u64le(out, std::bit_cast<std::uint64_t>(v));
}

std::uint16_t get_u16le(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint64_t get_u64le(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

double get_f64le(const std::uint8_t* p) {
    return std::bit_cast<double>(get_u64le(p));
}

bool reset_valid(std::uint32_t bits) {
    return bits == 0b00 || bits == 0b01 || bits == 0b11;
}

void check_stream(const ModuloStream& s) {
    if (s.header.total_bits < 3 || s.header.total_bits > 34) {
        throw FormatError("stream total_bits out of range");
    }
    if (!(s.header.v_ref > 0.0) || !std::isfinite(s.header.v_ref)) {
        throw FormatError("stream v_ref must be positive");
    }
    if (s.header.sample_count != s.records.size()) {
        throw LengthError("header sample count disagrees with record count");
    }
    const std::uint32_t code_limit = std::uint32_t{1} << (s.header.total_bits - 2);
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        if (!reset_valid(static_cast<std::uint32_t>(s.records[i].reset))) {
            throw CorruptionError("reset pattern 10 is not a valid code", i);
        }
        if (s.records[i].code >= code_limit) {
            throw CorruptionError("quantizer code exceeds field width", i);
        }
    }
}

} // namespace

AdcConfig ModuloStream::config() const {
    return AdcConfig::make(header.v_ref, header.total_bits);
}

std::vector<std::uint8_t> pack(const ModuloStream& stream) {
    check_stream(stream);
    const int n = stream.header.total_bits;
    const std::size_t rec_bytes = stream.record_bytes();

    std::vector<std::uint8_t> out;
    out.reserve(stream.packed_size());
    out.insert(out.end(), stream_magic, stream_magic + 4);
    put_u16le(out, stream.header.version);
    put_u16le(out, stream.header.total_bits);
    put_f64le(out, stream.header.v_ref);
    put_f64le(out, stream.header.sample_rate_hz);
    put_u64le(out, stream.header.sample_count);

    for (const Record& rec : stream.records) {
        std::uint64_t word = rec.code;
        word |= static_cast<std::uint64_t>(rec.reset) << (n - 2);
        for (std::size_t b = 0; b < rec_bytes; ++b) {
            out.push_back(static_cast<std::uint8_t>(word & 0xff));
            word >>= 8;
        }
    }
    return out;
}

ModuloStream unpack(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < stream_header_bytes) {
        throw LengthError("stream shorter than its header");
    }
    if (std::memcmp(bytes.data(), stream_magic, 4) != 0) {
        throw FormatError("bad stream magic (want 'UADC')");
    }
    ModuloStream s;
    s.header.version = get_u16le(bytes.data() + 4);
    if (s.header.version != stream_version) {
        throw FormatError("unsupported stream version " + std::to_string(s.header.version));
    }
    s.header.total_bits = get_u16le(bytes.data() + 6);
    if (s.header.total_bits < 3 || s.header.total_bits > 34) {
        throw FormatError("stream total_bits out of range");
    }
    s.header.v_ref = get_f64le(bytes.data() + 8);
    if (!(s.header.v_ref > 0.0) || !std::isfinite(s.header.v_ref)) {
        throw FormatError("stream v_ref must be positive");
    }
    s.header.sample_rate_hz = get_f64le(bytes.data() + 16);
    s.header.sample_count = get_u64le(bytes.data() + 24);

    const int n = s.header.total_bits;
    const std::size_t rec_bytes = (static_cast<std::size_t>(n) + 7) / 8;
    const std::uint64_t avail = bytes.size() - stream_header_bytes;
    if (s.header.sample_count > avail / rec_bytes) throw LengthError("truncated record payload");
    const std::size_t want = stream_header_bytes +
                             static_cast<std::size_t>(s.header.sample_count) * rec_bytes;
    if (bytes.size() < want) throw LengthError("truncated record payload");
    if (bytes.size() > want) throw LengthError("trailing bytes after record payload");

    const std::uint64_t pad_mask = ~((std::uint64_t{1} << n) - 1) &
                                   ((rec_bytes * 8 < 64) ? ((std::uint64_t{1} << (rec_bytes * 8)) - 1)
                                                         : ~std::uint64_t{0});
    s.records.resize(s.header.sample_count);
    const std::uint8_t* p = bytes.data() + stream_header_bytes;
    for (std::size_t i = 0; i < s.records.size(); ++i, p += rec_bytes) {
        std::uint64_t word = 0;
        for (std::size_t b = rec_bytes; b-- > 0;) word = (word << 8) | p[b];
        if ((word & pad_mask) != 0) {
            throw CorruptionError("nonzero pad bits", i);
        }
        const auto reset_bits = static_cast<std::uint32_t>((word >> (n - 2)) & 0b11);
        if (!reset_valid(reset_bits)) {
            throw CorruptionError("reset pattern 10 is not a valid code", i);
        }
        s.records[i].reset = static_cast<ResetCode>(reset_bits);
        s.records[i].code = static_cast<std::uint32_t>(word & ((std::uint64_t{1} << (n - 2)) - 1));
    }
    return s;
}

void save_stream(const ModuloStream& stream, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = pack(stream);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

ModuloStream load_stream(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return unpack(bytes);
}

std::pair<ModuloStream, EncodeReport> encode_stream(const SampleStream& input,
                                                    const AdcConfig& config, int max_cycles) {
    if (input.samples.empty()) throw ConfigError("cannot encode an empty stream");

    ModuloStream out;
    out.header.total_bits = static_cast<std::uint16_t>(config.total_bits);
    out.header.v_ref = config.v_ref;
    out.header.sample_rate_hz = input.sample_rate_hz;
    out.header.sample_count = input.samples.size();
    out.records.reserve(input.samples.size());

    EncodeReport report;
    FoldState state;
    std::int64_t prev_fold = 0;
    for (std::size_t k = 0; k < input.samples.size(); ++k) {
        const double x = input.samples[k];
        if (k > 0) {
            const double step = std::fabs(x - input.samples[k - 1]);
            if (step > report.max_abs_increment) report.max_abs_increment = step;
        }
        FoldResult res;
        try {
            std::tie(res, state) = fold_sample(state, x, config, max_cycles);
        } catch (const SaturationError& e) {
            throw SaturationError(e.what(), k);
        }
        const CodeWord word = sar_quantize(res.v_mod, config);
        out.records.push_back({res.reset, word.code});

        ++report.fold_histogram[res.fold_count];
        if (std::llabs(res.fold_count) > report.max_abs_fold) {
            report.max_abs_fold = std::llabs(res.fold_count);
        }
        if (res.cycles_used > report.max_cycles_used) report.max_cycles_used = res.cycles_used;
        if (res.cycles_used > 2) ++report.growth_violations;
        switch (res.reset) {
        case ResetCode::none: ++report.resets_none; break;
        case ResetCode::positive: ++report.resets_positive; break;
        case ResetCode::negative: ++report.resets_negative; break;
        }
        if (std::llabs(res.fold_count - prev_fold) > 1) ++report.reset_overflows;
        prev_fold = res.fold_count;
    }
    return {std::move(out), report};
}

} // namespace udr
