#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "udr/codec.hpp"
#include "udr/errors.hpp"
#include "udr/quantizer.hpp"
#include "udr/reconstruct.hpp"

using namespace udr;

TEST_CASE("accumulate_resets is a running sum of signed folds") {
    const std::vector<ResetCode> none3 = {ResetCode::none, ResetCode::none, ResetCode::none};
    CHECK(accumulate_resets(none3, 0.2) == std::vector<double>{0.0, 0.0, 0.0});

    const std::vector<ResetCode> mixed = {ResetCode::positive, ResetCode::none,
                                          ResetCode::negative};
    const auto z = accumulate_resets(mixed, 0.2);
    CHECK(z[0] == doctest::Approx(0.4));
    CHECK(z[1] == doctest::Approx(0.4));
    CHECK(z[2] == doctest::Approx(0.0));
}

TEST_CASE("reset pattern with net count +1 accumulates to one fold range") {
    // Positive at n1, n5, n6, n7; negative at n2, n3, n4: net +1.
    const std::vector<ResetCode> pattern = {
        ResetCode::positive, ResetCode::negative, ResetCode::negative, ResetCode::negative,
        ResetCode::positive, ResetCode::positive, ResetCode::positive};
    const auto z = accumulate_resets(pattern, 0.2);
    const std::vector<double> expected = {0.4, 0.0, -0.4, -0.8, -0.4, 0.0, 0.4};
    REQUIRE(z.size() == expected.size());
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == doctest::Approx(expected[i]));
    CHECK(z.back() == doctest::Approx(2.0 * 0.2));
}

TEST_CASE("accumulation is linear under concatenation") {
    std::mt19937_64 eng(8);
    std::uniform_int_distribution<int> pick(0, 2);
    constexpr ResetCode codes[3] = {ResetCode::none, ResetCode::positive, ResetCode::negative};
    std::vector<ResetCode> a(40), b(25);
    for (auto& r : a) r = codes[pick(eng)];
    for (auto& r : b) r = codes[pick(eng)];

    std::vector<ResetCode> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    const auto za = accumulate_resets(a, 0.3);
    const auto zb = accumulate_resets(b, 0.3);
    const auto zj = accumulate_resets(joined, 0.3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(zj[i] == doctest::Approx(za[i]));
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(zj[a.size() + i] == doctest::Approx(za.back() + zb[i]));
    }
}

TEST_CASE("mid-scale codes with no resets reconstruct to a half-step line") {
    const auto cfg = AdcConfig::make(0.2, 11);
    ModuloStream s;
    s.header.total_bits = 11;
    s.header.v_ref = 0.2;
    s.header.sample_rate_hz = 1000.0;
    s.header.sample_count = 5;
    s.records.assign(5, {ResetCode::none, 256});
    const auto out = reconstruct(s);
    for (const double x : out.samples) {
        CHECK(x == doctest::Approx(cfg.delta_udr() / 2).epsilon(1e-12));
    }
    CHECK(out.sample_rate_hz == 1000.0);
}

TEST_CASE("in-range signals reconstruct bit-identically to the plain quantizer") {
    const auto cfg = AdcConfig::make(0.2, 11);
    std::mt19937_64 eng(55);
    std::uniform_real_distribution<double> dist(-0.2, std::nextafter(0.2, 0.0));
    SampleStream in;
    in.sample_rate_hz = 500.0;
    for (int i = 0; i < 300; ++i) in.samples.push_back(dist(eng));

    const auto [stream, report] = encode_stream(in, cfg);
    CHECK(report.resets_positive == 0);
    CHECK(report.resets_negative == 0);
    const auto out = reconstruct(stream);
    for (std::size_t i = 0; i < in.samples.size(); ++i) {
        const double direct = dequantize(sar_quantize(in.samples[i], cfg), cfg);
        CHECK(out.samples[i] == direct); // bit-identical: z is exactly zero
    }
}

TEST_CASE("end-to-end unwrap error stays within half a step") {
    const auto cfg = AdcConfig::make(0.15, 9, 12);
    const double bound = cfg.delta_udr() / 2 + 1e-12;
    std::mt19937_64 eng(77);
    std::uniform_real_distribution<double> step(-1.9 * cfg.v_ref, 1.9 * cfg.v_ref);
    std::uniform_real_distribution<double> start(-0.9 * cfg.v_ref, 0.9 * cfg.v_ref);
    for (int rep = 0; rep < 30; ++rep) {
        SampleStream in;
        in.sample_rate_hz = 1000.0;
        double x = start(eng);
        for (int k = 0; k < 500; ++k) {
            in.samples.push_back(x);
            x += step(eng);
        }
        const auto [stream, report] = encode_stream(in, cfg);
        CHECK(report.reset_overflows == 0);
        const auto out = reconstruct(stream);
        for (std::size_t i = 0; i < in.samples.size(); ++i) {
            CHECK(std::fabs(out.samples[i] - in.samples[i]) <= bound);
        }
    }
}

TEST_CASE("srer pinned values") {
    SampleStream ref;
    ref.sample_rate_hz = 10.0;
    SampleStream est = ref;

    // est == ref: +inf sentinel.
    ref.samples = {0.5, -0.25, 1.0};
    est.samples = ref.samples;
    CHECK(std::isinf(srer_db(ref, est)));

    // Constant offset c with sum(ref^2) = 100 N c^2 -> 20 dB.
    const double c = 0.01;
    ref.samples.assign(64, 10.0 * c);
    est.samples.clear();
    for (const double r : ref.samples) est.samples.push_back(r + c);
    CHECK(srer_db(ref, est) == doctest::Approx(20.0).epsilon(1e-12));

    // Zero estimate: error equals the reference, 0 dB.
    est.samples.assign(64, 0.0);
    CHECK(srer_db(ref, est) == doctest::Approx(0.0).epsilon(1e-12));

    est.samples.pop_back();
    CHECK_THROWS_AS(srer_db(ref, est), DomainError);
}
