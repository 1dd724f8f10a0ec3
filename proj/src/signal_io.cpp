#include "udr/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "udr/errors.hpp"

namespace udr {
namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_double(std::string_view cell, std::size_t line_no) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("non-numeric cell '" + std::string(cell) + "'", line_no);
    }
    return value;
}

std::uint64_t parse_index(std::string_view cell, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("non-numeric index '" + std::string(cell) + "'", line_no);
    }
    return value;
}

std::uint32_t read_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32le(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16le(std::vector<unsigned char>& out, std::uint16_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

} // namespace

SampleStream read_csv(const std::filesystem::path& path, double sample_rate_hz) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError("empty file", line_no);
    strip_cr(line);
    if (line != "index,volts") throw ParseError("expected header 'index,volts'", line_no);

    SampleStream stream;
    stream.sample_rate_hz = sample_rate_hz;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'index,volts' row", line_no);
        const std::string_view view(line);
        parse_index(view.substr(0, comma), line_no);
        const double v = parse_double(view.substr(comma + 1), line_no);
        if (!std::isfinite(v)) throw ParseError("sample value must be finite", line_no);
        stream.samples.push_back(v);
    }
    if (stream.samples.empty()) {
        throw ParseError("file contains a header but no samples", line_no);
    }
    return stream;
}

void write_csv(const SampleStream& stream, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // binary: keep LF endings everywhere
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << "index,volts\n";
    char buf[64];
    for (std::size_t i = 0; i < stream.samples.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, stream.samples[i]);
        out << buf;
    }
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

SampleStream read_pcm_audio(const std::filesystem::path& path, double full_scale_v) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw FormatError("not a RIFF/WAVE file: '" + path.string() + "'");
    }

    bool have_fmt = false;
    std::uint32_t rate = 0;
    const unsigned char* data = nullptr;
    std::uint32_t data_size = 0;
    std::size_t off = 12;
    while (off + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + off);
        const std::uint32_t size = read_u32le(bytes.data() + off + 4);
        off += 8;
        if (off + size > bytes.size()) throw FormatError("truncated chunk in WAVE file");
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (size < 16) throw FormatError("fmt chunk too short");
            const std::uint16_t audio_format = read_u16le(bytes.data() + off);
            const std::uint16_t channels = read_u16le(bytes.data() + off + 2);
            rate = read_u32le(bytes.data() + off + 4);
            const std::uint16_t bits = read_u16le(bytes.data() + off + 14);
            if (audio_format != 1) throw FormatError("unsupported WAVE encoding (want PCM)");
            if (channels != 1) throw FormatError("unsupported channel count (want mono)");
            if (bits != 16) throw FormatError("unsupported sample width (want 16-bit)");
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data = bytes.data() + off;
            data_size = size;
        }
        off += size + (size & 1u); // chunks are word-aligned
    }
    if (!have_fmt || data == nullptr) throw FormatError("missing fmt or data chunk");
    if (data_size % 2 != 0) throw FormatError("odd PCM16 data size");

    SampleStream stream;
    stream.sample_rate_hz = static_cast<double>(rate);
    const std::size_t count = data_size / 2;
    if (count == 0) throw FormatError("WAVE file contains no samples");
    stream.samples.resize(count);
    const double scale = full_scale_v / 32768.0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto raw = static_cast<std::int16_t>(read_u16le(data + 2 * i));
        stream.samples[i] = static_cast<double>(raw) * scale;
    }
    return stream;
}

void write_pcm_audio(const SampleStream& stream, const std::filesystem::path& path,
                     double full_scale_v) {
    if (!(full_scale_v > 0.0)) throw DomainError("full scale voltage must be positive");
    const auto count = static_cast<std::uint32_t>(stream.samples.size());
    const std::uint32_t data_size = count * 2;

    std::vector<unsigned char> bytes;
    bytes.reserve(44 + data_size);
    bytes.insert(bytes.end(), {'R', 'I', 'F', 'F'});
    put_u32le(bytes, 36 + data_size);
    bytes.insert(bytes.end(), {'W', 'A', 'V', 'E'});
    bytes.insert(bytes.end(), {'f', 'm', 't', ' '});
    put_u32le(bytes, 16);
    put_u16le(bytes, 1); // PCM
    put_u16le(bytes, 1); // mono
    const auto rate = static_cast<std::uint32_t>(std::llround(stream.sample_rate_hz));
    put_u32le(bytes, rate);
    put_u32le(bytes, rate * 2);
    put_u16le(bytes, 2);
    put_u16le(bytes, 16);
    bytes.insert(bytes.end(), {'d', 'a', 't', 'a'});
    put_u32le(bytes, data_size);
    for (const double v : stream.samples) {
        long raw = std::lround(v / full_scale_v * 32768.0);
        if (raw > 32767) raw = 32767;
        if (raw < -32768) raw = -32768;
        put_u16le(bytes, static_cast<std::uint16_t>(static_cast<std::int16_t>(raw)));
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

} // namespace udr
