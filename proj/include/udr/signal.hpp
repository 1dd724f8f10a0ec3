#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

namespace udr {

enum class DistributionKind { uniform, gaussian, laplacian };

const char* distribution_name(DistributionKind k);
std::optional<DistributionKind> parse_distribution(const std::string& name);

struct SineComponent {
    double amplitude_v = 0.0;
    double frequency_hz = 0.0;
    double phase_rad = 0.0;
};

struct SinusoidMixture {
    std::vector<SineComponent> components;
};

struct RandomProcess {
    DistributionKind distribution = DistributionKind::uniform;
    double sigma_v = 1.0;
};

struct SignalSpec {
    std::variant<SinusoidMixture, RandomProcess> kind;
    double duration_s = 0.0;
    double sample_rate_hz = 0.0;
};

/// Throws ConfigError when a field violates its invariant.
void validate(const SignalSpec& spec);

struct SampleStream {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
};

double eval_mixture(const SinusoidMixture& mix, double t);

/// Deterministic for a fixed (spec, seed): sinusoid mixtures evaluate
/// sum_i a_i sin(2 pi f_i n T + phi_i); random processes draw i.i.d. values
/// with standard deviation sigma (uniform on [-sqrt(3) s, sqrt(3) s],
/// zero-mean Gaussian, Laplacian with scale s/sqrt(2)).
SampleStream generate(const SignalSpec& spec, std::uint64_t seed);

/// Exact bound on |dx/dt| for a sinusoid mixture: sum_i a_i 2 pi f_i.
/// Random processes have no finite bound; throws UnsupportedError.
double lipschitz_bound(const SignalSpec& spec);

/// Largest sampling period that keeps per-sample change within one fold
/// range: 2 v_ref / alpha. Returns nullopt when alpha == 0 (no constraint).
std::optional<double> max_sampling_period(double alpha, double v_ref);

/// Seeded variate source shared by signal generation and the Monte Carlo
/// estimators. Draw sequences are pinned by this implementation (inverse-CDF
/// uniform/Laplacian, Box-Muller Gaussian), not by the standard library's
/// distribution objects, so a seed reproduces the same stream everywhere.
class VariateSampler {
public:
    VariateSampler(DistributionKind kind, double sigma, std::uint64_t seed);
    double operator()();

private:
    double unit_open();
    DistributionKind kind_;
    double sigma_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace udr
