#include <doctest.h>

#include <random>
#include <vector>

#include "udr/codec.hpp"
#include "udr/errors.hpp"

using namespace udr;

namespace {

ModuloStream make_stream(int total_bits, std::vector<Record> records, double v_ref = 0.2,
                         double rate = 53000.0) {
    ModuloStream s;
    s.header.total_bits = static_cast<std::uint16_t>(total_bits);
    s.header.v_ref = v_ref;
    s.header.sample_rate_hz = rate;
    s.header.sample_count = records.size();
    s.records = std::move(records);
    return s;
}

ModuloStream random_stream(std::mt19937_64& eng) {
    std::uniform_int_distribution<int> bits_dist(3, 21);
    std::uniform_int_distribution<int> len_dist(1, 120);
    std::uniform_int_distribution<int> reset_dist(0, 2);
    const int n = bits_dist(eng);
    const std::uint32_t code_limit = std::uint32_t{1} << (n - 2);
    std::uniform_int_distribution<std::uint32_t> code_dist(0, code_limit - 1);
    std::vector<Record> recs(len_dist(eng));
    constexpr ResetCode codes[3] = {ResetCode::none, ResetCode::positive, ResetCode::negative};
    for (auto& r : recs) {
        r.reset = codes[reset_dist(eng)];
        r.code = code_dist(eng);
    }
    std::uniform_real_distribution<double> vref_dist(1e-3, 5.0);
    return make_stream(n, std::move(recs), vref_dist(eng), 1000.0);
}

bool same_stream(const ModuloStream& a, const ModuloStream& b) {
    if (a.header.version != b.header.version) return false;
    if (a.header.total_bits != b.header.total_bits) return false;
    if (a.header.v_ref != b.header.v_ref) return false;
    if (a.header.sample_rate_hz != b.header.sample_rate_hz) return false;
    if (a.header.sample_count != b.header.sample_count) return false;
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        if (a.records[i].reset != b.records[i].reset) return false;
        if (a.records[i].code != b.records[i].code) return false;
    }
    return true;
}

} // namespace

TEST_CASE("pack places reset bits above the code bits") {
    const auto s = make_stream(11, {{ResetCode::positive, 384}});
    const auto bytes = pack(s);
    REQUIRE(bytes.size() == stream_header_bytes + 2);
    CHECK(bytes[stream_header_bytes + 0] == 0x80);
    CHECK(bytes[stream_header_bytes + 1] == 0x03);

    const auto z = pack(make_stream(11, {{ResetCode::none, 0}}));
    CHECK(z[stream_header_bytes + 0] == 0x00);
    CHECK(z[stream_header_bytes + 1] == 0x00);

    const auto f = pack(make_stream(11, {{ResetCode::negative, 511}}));
    CHECK(f[stream_header_bytes + 0] == 0xFF);
    CHECK(f[stream_header_bytes + 1] == 0x07);
}

TEST_CASE("header layout is pinned") {
    const auto s = make_stream(11, {{ResetCode::none, 0}}, 0.2, 53000.0);
    const auto bytes = pack(s);
    CHECK(bytes[0] == 'U');
    CHECK(bytes[1] == 'A');
    CHECK(bytes[2] == 'D');
    CHECK(bytes[3] == 'C');
    CHECK(bytes[4] == 1); // version lo
    CHECK(bytes[5] == 0);
    CHECK(bytes[6] == 11); // total_bits lo
    CHECK(bytes[7] == 0);
    // v_ref = 0.2 as IEEE754 little-endian: 0x3FC999999999999A.
    const unsigned char vref_le[8] = {0x9A, 0x99, 0x99, 0x99, 0x99, 0x99, 0xC9, 0x3F};
    for (int i = 0; i < 8; ++i) CHECK(bytes[8 + i] == vref_le[i]);
    // sample_count = 1.
    CHECK(bytes[24] == 1);
    for (int i = 25; i < 32; ++i) CHECK(bytes[i] == 0);
}

TEST_CASE("pack and unpack are mutually inverse on random streams") {
    std::mt19937_64 eng(404);
    for (int i = 0; i < 300; ++i) {
        const auto s = random_stream(eng);
        const auto bytes = pack(s);
        CHECK(bytes.size() == s.packed_size());
        const auto back = unpack(bytes);
        CHECK(same_stream(s, back));
    }
}

TEST_CASE("decode rejects the 10 reset pattern with the record index") {
    const auto s = make_stream(11, {{ResetCode::none, 5}, {ResetCode::positive, 7}});
    auto bytes = pack(s);
    // Record 1 sits at header + 2; force reset bits to 10 (R1=1, R0=0).
    const std::size_t off = stream_header_bytes + 2;
    std::uint16_t word = static_cast<std::uint16_t>(bytes[off] | (bytes[off + 1] << 8));
    word = static_cast<std::uint16_t>((word & 0x01FF) | (0b10u << 9));
    bytes[off] = static_cast<std::uint8_t>(word & 0xff);
    bytes[off + 1] = static_cast<std::uint8_t>(word >> 8);
    try {
        unpack(bytes);
        FAIL("expected CorruptionError");
    } catch (const CorruptionError& e) {
        CHECK(e.record_index() == 1);
    }
}

TEST_CASE("nonzero pad bits are corruption") {
    const auto s = make_stream(11, {{ResetCode::none, 5}});
    auto bytes = pack(s);
    bytes[stream_header_bytes + 1] |= 0x80;
    CHECK_THROWS_AS(unpack(bytes), CorruptionError);
}

TEST_CASE("length errors for truncated and trailing payloads") {
    const auto s = make_stream(11, {{ResetCode::none, 5}, {ResetCode::negative, 7}});
    auto bytes = pack(s);
    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS(unpack(truncated), LengthError);
    auto trailing = bytes;
    trailing.push_back(0);
    CHECK_THROWS_AS(unpack(trailing), LengthError);
}

TEST_CASE("format errors for magic and version") {
    const auto s = make_stream(11, {{ResetCode::none, 5}});
    auto bad_magic = pack(s);
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(unpack(bad_magic), FormatError);
    auto bad_version = pack(s);
    bad_version[4] = 9;
    CHECK_THROWS_AS(unpack(bad_version), FormatError);
}

TEST_CASE("pack validates stream invariants") {
    auto s = make_stream(11, {{ResetCode::none, 512}}); // code too wide for 9 bits
    CHECK_THROWS_AS(pack(s), CorruptionError);
    auto bad_count = make_stream(11, {{ResetCode::none, 1}});
    bad_count.header.sample_count = 7;
    CHECK_THROWS_AS(pack(bad_count), LengthError);
}
