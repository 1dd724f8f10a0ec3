#include "udr/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "udr/errors.hpp"
#include "udr/kernels.hpp"

namespace udr {
namespace {

constexpr double sqrt3 = std::numbers::sqrt3;

double pow4(int n) {
    return std::ldexp(1.0, 2 * n); // 2^(2n), exact
}

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

void check_query(const SqnrQuery& q) {
    if (q.total_bits < 3 || q.total_bits > 34) throw DomainError("total bits must be in [3, 34]");
    if (!(q.gamma > 0.0) || !std::isfinite(q.gamma)) throw DomainError("gamma must be positive");
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

double q_function(double x) {
    if (std::isnan(x)) throw DomainError("q_function needs a finite argument");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double psi(double gamma) {
    return (1.0 + gamma * gamma) * q_function(gamma) - gamma * normal_pdf(gamma);
}

double overload_variance(DistributionKind kind, double gamma) {
    if (gamma < 0.0 || !std::isfinite(gamma)) throw DomainError("gamma must be >= 0");
    switch (kind) {
    case DistributionKind::uniform: {
        if (gamma >= sqrt3) return 0.0;
        const double t = 1.0 - gamma / sqrt3;
        return t * t * t;
    }
    case DistributionKind::gaussian:
        // Both tails clip; the one-sided tail integral is psi(gamma).
        return 2.0 * psi(gamma);
    case DistributionKind::laplacian:
        return std::exp(-std::numbers::sqrt2 * gamma);
    }
    return 0.0;
}

double sqnr_udr(int total_bits, double gamma) {
    if (total_bits < 3 || total_bits > 34) throw DomainError("total bits must be in [3, 34]");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
    return 3.0 * pow4(total_bits) / (16.0 * gamma * gamma);
}

double sqnr_std(const SqnrQuery& query) {
    check_query(query);
    if (query.adc != AdcKind::standard) {
        throw DomainError("sqnr_std expects a standard-ADC query");
    }
    const double quant = query.gamma * query.gamma / (3.0 * pow4(query.total_bits));
    return 1.0 / (quant + overload_variance(query.distribution, query.gamma));
}

double ratio_to_db(double ratio) {
    return 10.0 * std::log10(ratio);
}

MonteCarloResult monte_carlo_sqnr(const SqnrQuery& query, std::uint64_t samples,
                                  std::uint64_t seed, int workers) {
    check_query(query);
    if (samples < 10000) throw DomainError("monte_carlo_sqnr needs at least 1e4 samples");
    if (workers < 1 || static_cast<std::uint64_t>(workers) > samples) {
        throw DomainError("worker count must be in [1, samples]");
    }

    const double v_ref = query.gamma; // sigma_x = 1
    const int n = query.total_bits;
    constexpr std::size_t batch = 8192;
    std::vector<double> x(batch), a(batch), b(batch), c(batch);

    std::vector<double> worker_sx2(workers, 0.0);
    std::vector<double> worker_se2(workers, 0.0);

    for (int w = 0; w < workers; ++w) {
        const std::uint64_t base = samples / workers;
        const std::uint64_t todo = base + (w == workers - 1 ? samples % workers : 0);
        VariateSampler draw(query.distribution, 1.0, splitmix64(seed + static_cast<std::uint64_t>(w)));
        std::uint64_t done = 0;
        double sx2 = 0.0;
        double se2 = 0.0;
        while (done < todo) {
            const std::size_t m = static_cast<std::size_t>(std::min<std::uint64_t>(batch, todo - done));
            for (std::size_t i = 0; i < m; ++i) x[i] = draw();
            sx2 += kernels::sum_squares(x.data(), m);
            if (query.adc == AdcKind::standard) {
                kernels::quantize_clipping(x.data(), m, v_ref, n, a.data());
                se2 += kernels::sum_squared_diff(x.data(), a.data(), m);
            } else {
                kernels::fold_array(x.data(), m, v_ref, a.data(), b.data()); // v_mod, wrap
                kernels::quantize_mid_rise(a.data(), m, v_ref, n - 2, c.data());
                kernels::add_arrays(c.data(), b.data(), m, a.data()); // x_hat
                se2 += kernels::sum_squared_diff(x.data(), a.data(), m);
            }
            done += m;
        }
        worker_sx2[w] = sx2;
        worker_se2[w] = se2;
    }

    double total_sx2 = 0.0;
    double total_se2 = 0.0;
    for (int w = 0; w < workers; ++w) {
        total_sx2 += worker_sx2[w];
        total_se2 += worker_se2[w];
    }

    MonteCarloResult result;
    result.samples = samples;
    result.workers = workers;
    if (total_se2 == 0.0) {
        result.sqnr = std::numeric_limits<double>::infinity();
        result.sqnr_db = std::numeric_limits<double>::infinity();
        return result;
    }
    result.sqnr = total_sx2 / total_se2;
    result.sqnr_db = ratio_to_db(result.sqnr);

    if (workers > 1) {
        // Leave-one-worker-out jackknife in the dB domain.
        std::vector<double> loo(workers);
        double mean = 0.0;
        for (int w = 0; w < workers; ++w) {
            loo[w] = ratio_to_db((total_sx2 - worker_sx2[w]) / (total_se2 - worker_se2[w]));
            mean += loo[w];
        }
        mean /= workers;
        double ss = 0.0;
        for (int w = 0; w < workers; ++w) ss += (loo[w] - mean) * (loo[w] - mean);
        result.std_error_db = std::sqrt(ss * (workers - 1) / static_cast<double>(workers));
    }
    return result;
}

CrossoverResult crossover_gamma(DistributionKind kind, int total_bits) {
    if (total_bits < 3 || total_bits > 34) throw DomainError("total bits must be in [3, 34]");
    const auto diff = [&](double g) {
        SqnrQuery q{kind, total_bits, g, AdcKind::standard};
        return std::log(sqnr_std(q)) - std::log(sqnr_udr(total_bits, g));
    };

    const std::vector<double> grid = log_grid_closed(1e-3, 10.0, 400);
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    double f_lo = diff(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double f_hi = diff(grid[i]);
        if (f_lo == 0.0) return {true, grid[i - 1]};
        if (f_lo * f_hi < 0.0) {
            lo = grid[i - 1];
            hi = grid[i];
            bracketed = true;
            break;
        }
        f_lo = f_hi;
    }
    if (!bracketed) return {false, 0.0};

    double f_at_lo = diff(lo);
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = diff(mid);
        if (f_mid == 0.0) return {true, mid};
        if (f_at_lo * f_mid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_at_lo = f_mid;
        }
    }
    return {true, 0.5 * (lo + hi)};
}

FlashAreaModel flash_area_model(const HwQuery& query) {
    if (query.n1 < 1 || query.n1 > 34) throw DomainError("n1 must be in [1, 34]");
    if (!(query.lambda >= 1.0) || !std::isfinite(query.lambda)) {
        throw DomainError("lambda must be >= 1");
    }
    const int extra = static_cast<int>(std::ceil(std::log2(query.lambda)));
    FlashAreaModel m;
    m.n2 = query.n1 + extra;
    m.comparators_std = std::uint64_t{1} << (m.n2 - 1);
    m.resistors_std = std::uint64_t{1} << m.n2;
    m.comparators_udr = std::uint64_t{1} << (query.n1 - 1);
    m.resistors_udr = std::uint64_t{1} << query.n1;
    return m;
}

double dynamic_power_ratio(double lambda) {
    if (!(lambda >= 1.0) || !std::isfinite(lambda)) throw DomainError("lambda must be >= 1");
    return 1.0 / (lambda * lambda);
}

std::vector<double> log_grid_open(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 1) throw DomainError("bad log grid");
    std::vector<double> g(count);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < count; ++i) {
        g[i] = std::exp(a + (b - a) * (i + 0.5) / count);
    }
    return g;
}

std::vector<double> log_grid_closed(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw DomainError("bad log grid");
    std::vector<double> g(count);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < count; ++i) {
        g[i] = std::exp(a + (b - a) * i / (count - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace udr
