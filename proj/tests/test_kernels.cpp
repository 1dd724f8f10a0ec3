#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "udr/kernels.hpp"

using namespace udr;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed, double lo, double hi) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = dist(eng);
    return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

} // namespace

TEST_CASE("fold_value matches the centered modulo definition") {
    auto [y0, w0] = kernels::fold_value(0.1, 0.2);
    CHECK(y0 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(w0 == 0.0);

    auto [y1, w1] = kernels::fold_value(0.5, 0.2);
    CHECK(y1 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(std::llround(w1 / 0.4) == 1);

    auto [y2, w2] = kernels::fold_value(-0.5, 0.2);
    CHECK(y2 == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(std::llround(w2 / 0.4) == -1);

    // Half-open interval: +v_ref wraps to -v_ref with one fold.
    auto [y3, w3] = kernels::fold_value(0.2, 0.2);
    CHECK(y3 == doctest::Approx(-0.2));
    CHECK(std::llround(w3 / 0.4) == 1);

    auto [y4, w4] = kernels::fold_value(-0.2, 0.2);
    CHECK(y4 == doctest::Approx(-0.2));
    CHECK(std::llround(w4 / 0.4) == 0);
}

TEST_CASE("fold_value properties over wide random ranges") {
    std::mt19937_64 eng(99);
    std::uniform_real_distribution<double> vref_dist(1e-3, 10.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.0, 9.0);
    for (int i = 0; i < 20000; ++i) {
        const double v = vref_dist(eng);
        const double x = unit(eng) * v * std::pow(10.0, mag(eng)); // up to 1e9 * v_ref
        const auto [y, w] = kernels::fold_value(x, v);
        CHECK(y >= -v);
        CHECK(y < v);
        const double m = w / (2.0 * v);
        const double m_int = std::round(m);
        CHECK(std::fabs(m - m_int) <= 1e-6);               // wrap is an integer fold count
        CHECK(std::fabs(w - m_int * (2.0 * v)) <= std::fabs(w) * 5e-16 + 1e-300);
        CHECK(std::fabs((y + w) - x) <= std::fabs(x) * 5e-16 + 1e-300);
    }
}

TEST_CASE("mid-rise and clipping levels") {
    const double v = 0.2;
    const int bits = 9;
    const double delta = kernels::quant_step(v, bits);
    const double kmax = 511.0;

    CHECK(kernels::mid_rise_level(0.0, v, delta, kmax) == doctest::Approx(delta / 2));
    CHECK(kernels::mid_rise_level(-v, v, delta, kmax) == doctest::Approx(-v + delta / 2));
    // In-range error bound delta/2.
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> dist(-v, std::nextafter(v, 0.0));
    for (int i = 0; i < 20000; ++i) {
        const double x = dist(eng);
        CHECK(std::fabs(kernels::mid_rise_level(x, v, delta, kmax) - x) <= delta / 2 + 1e-15);
    }

    // Clipping saturates at the rail itself.
    CHECK(kernels::clipped_level(2 * v, v, delta, kmax) == v);
    CHECK(kernels::clipped_level(-2 * v, v, delta, kmax) == -v);
    CHECK(kernels::clipped_level(0.0, v, delta, kmax) == doctest::Approx(delta / 2));

    // Monotone non-decreasing.
    double prev = -1e9;
    for (int i = 0; i <= 2000; ++i) {
        const double x = -2.0 * v + i * (4.0 * v / 2000);
        const double q = kernels::clipped_level(x, v, delta, kmax);
        CHECK(q >= prev);
        prev = q;
    }
}

TEST_CASE("scalar and simd kernel variants are bit-identical") {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
        MESSAGE("avx2 not available; skipping equivalence sweep");
        return;
    }
    const auto saved = kernels::active_backend();
    const std::vector<std::size_t> sizes = {0, 1, 2, 3, 4, 5, 7, 8, 9, 31, 64, 1000, 4097};
    for (const std::size_t n : sizes) {
        const auto x = random_values(n, 1000 + n, -5.0, 5.0);
        const auto b = random_values(n, 2000 + n, -5.0, 5.0);
        const double v = 0.37;
        const int bits = 9;

        std::vector<double> ys(n), ws(n), qs(n), cs(n), as(n);
        std::vector<double> ya(n), wa(n), qa(n), ca(n), aa(n);

        kernels::set_backend(kernels::Backend::scalar);
        kernels::fold_array(x.data(), n, v, ys.data(), ws.data());
        kernels::quantize_mid_rise(x.data(), n, v, bits, qs.data());
        kernels::quantize_clipping(x.data(), n, v, bits, cs.data());
        kernels::add_arrays(x.data(), b.data(), n, as.data());
        const double ss1 = kernels::sum_squares(x.data(), n);
        const double sd1 = kernels::sum_squared_diff(x.data(), b.data(), n);

        kernels::set_backend(kernels::Backend::avx2);
        kernels::fold_array(x.data(), n, v, ya.data(), wa.data());
        kernels::quantize_mid_rise(x.data(), n, v, bits, qa.data());
        kernels::quantize_clipping(x.data(), n, v, bits, ca.data());
        kernels::add_arrays(x.data(), b.data(), n, aa.data());
        const double ss2 = kernels::sum_squares(x.data(), n);
        const double sd2 = kernels::sum_squared_diff(x.data(), b.data(), n);

        CHECK(bitwise_equal(ys, ya));
        CHECK(bitwise_equal(ws, wa));
        CHECK(bitwise_equal(qs, qa));
        CHECK(bitwise_equal(cs, ca));
        CHECK(bitwise_equal(as, aa));
        CHECK(std::memcmp(&ss1, &ss2, sizeof(double)) == 0);
        CHECK(std::memcmp(&sd1, &sd2, sizeof(double)) == 0);
    }
    kernels::set_backend(saved);
}

TEST_CASE("reductions agree with long-double accumulation") {
    const auto x = random_values(10001, 42, -3.0, 3.0);
    const auto y = random_values(10001, 43, -3.0, 3.0);
    long double ss = 0.0L;
    long double sd = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        ss += static_cast<long double>(x[i]) * x[i];
        const long double d = static_cast<long double>(x[i]) - y[i];
        sd += d * d;
    }
    CHECK(kernels::sum_squares(x.data(), x.size()) ==
          doctest::Approx(static_cast<double>(ss)).epsilon(1e-12));
    CHECK(kernels::sum_squared_diff(x.data(), y.data(), x.size()) ==
          doctest::Approx(static_cast<double>(sd)).epsilon(1e-12));
}

TEST_CASE("fold_array matches per-element fold_value") {
    const auto x = random_values(513, 5, -50.0, 50.0);
    std::vector<double> y(x.size()), w(x.size());
    kernels::fold_array(x.data(), x.size(), 0.7, y.data(), w.data());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto p = kernels::fold_value(x[i], 0.7);
        CHECK(y[i] == p.v_mod);
        CHECK(w[i] == p.wrap);
    }
}
