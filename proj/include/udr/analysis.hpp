#pragma once

#include <cstdint>
#include <vector>

#include "udr/signal.hpp"

namespace udr {

enum class AdcKind { standard, udr };

/// (distribution, n, gamma) tuple driving the SQNR formulas. gamma is the
/// loading factor V_ref / sigma_x.
struct SqnrQuery {
    DistributionKind distribution = DistributionKind::uniform;
    int total_bits = 0;
    double gamma = 0.0;
    AdcKind adc = AdcKind::standard;
};

/// (n1, lambda) tuple for the hardware models. lambda is the folding factor
/// V_max / V_ref, at least 1.
struct HwQuery {
    int n1 = 0;
    double lambda = 1.0;
};

/// Standard normal tail probability Q(x), absolute error <= 1e-12.
double q_function(double x);

/// Gaussian one-sided overload tail (1 + g^2) Q(g) - g phi(g); positive and
/// strictly decreasing on (0, inf).
double psi(double gamma);

/// Overload distortion relative to the signal variance, sigma_ov^2/sigma_x^2,
/// counting both clipped tails:
///   uniform   (1 - g/sqrt(3))^3 for g <= sqrt(3), else 0
///   gaussian  2 psi(g)
///   laplacian exp(-sqrt(2) g)
double overload_variance(DistributionKind kind, double gamma);

/// Folding converter SQNR as a plain ratio: 3 * 2^(2n) / (16 g^2), with two
/// of the n bits spent on reset codes. Distribution-independent.
double sqnr_udr(int total_bits, double gamma);

/// Standard converter SQNR: 1 / (g^2 / (3 * 2^(2n)) + overload_variance).
double sqnr_std(const SqnrQuery& query);

double ratio_to_db(double ratio);

struct MonteCarloResult {
    double sqnr = 0.0;
    double sqnr_db = 0.0;
    double std_error_db = 0.0; // jackknife over the worker partition
    std::uint64_t samples = 0;
    int workers = 0;
};

/// Empirical SQNR from i.i.d. draws with sigma_x = 1 and V_ref = gamma.
/// Standard path: clip-quantize with n bits. Folding path: ideal fold,
/// quantize the remainder with n - 2 bits, undo the known wrap, compare to
/// the input. Samples are split across `workers` separately seeded streams
/// and merged by sample-weighted average, so a fixed (seed, workers) pair is
/// fully deterministic.
MonteCarloResult monte_carlo_sqnr(const SqnrQuery& query, std::uint64_t samples,
                                  std::uint64_t seed, int workers = 8);

struct CrossoverResult {
    bool found = false;
    double gamma = 0.0;
};

/// Loading factor where the standard and folding SQNR curves meet, from a
/// 400-point log scan over (1e-3, 10) refined by bisection to |dg| <= 1e-6.
/// No sign change in the bracket reports found = false.
CrossoverResult crossover_gamma(DistributionKind kind, int total_bits);

struct FlashAreaModel {
    int n2 = 0; // standard flash bits for the same step: n1 + ceil(log2 lambda)
    std::uint64_t comparators_std = 0;
    std::uint64_t resistors_std = 0;
    std::uint64_t comparators_udr = 0;
    std::uint64_t resistors_udr = 0;
};

/// Flash comparator/resistor counts: 2^(n-1) comparators and 2^n resistors,
/// with the standard converter needing n2 bits and the folding one n1.
FlashAreaModel flash_area_model(const HwQuery& query);

/// Dynamic power of the folding converter's quantizer relative to the
/// standard one: 1 / lambda^2. lambda < 1 is a DomainError.
double dynamic_power_ratio(double lambda);

/// count log-spaced values strictly inside (lo, hi) (half-cell margins).
std::vector<double> log_grid_open(double lo, double hi, int count);

/// count log-spaced values from lo to hi inclusive.
std::vector<double> log_grid_closed(double lo, double hi, int count);

} // namespace udr
