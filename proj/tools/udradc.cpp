// udradc: command-line front door for the modulo-folding ADC simulator.
//
// Subcommands: gen, convert, reconstruct, sqnr, hwmodel.
// Exit codes: 0 success, 2 usage/config, 3 data/corruption, 4 strict-mode
// violation.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udr/analysis.hpp"
#include "udr/codec.hpp"
#include "udr/errors.hpp"
#include "udr/kernels.hpp"
#include "udr/presets.hpp"
#include "udr/reconstruct.hpp"
#include "udr/signal.hpp"
#include "udr/signal_io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_data = 3;
constexpr int exit_strict = 4;

struct StrictViolation : udr::Error {
    using udr::Error::Error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<udr::SineComponent> parse_sines(const std::string& text) {
    std::vector<udr::SineComponent> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        udr::SineComponent c;
        const auto p1 = item.find(':');
        if (p1 == std::string::npos) {
            throw udr::ConfigError("--sines wants freq:amp[:phase] terms, got '" + item + "'");
        }
        const auto p2 = item.find(':', p1 + 1);
        try {
            c.frequency_hz = std::stod(item.substr(0, p1));
            c.amplitude_v = std::stod(item.substr(p1 + 1, p2 - p1 - 1));
            if (p2 != std::string::npos) c.phase_rad = std::stod(item.substr(p2 + 1));
        } catch (const std::exception&) {
            throw udr::ConfigError("cannot parse --sines term '" + item + "'");
        }
        out.push_back(c);
    }
    if (out.empty()) throw udr::ConfigError("--sines list is empty");
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        throw udr::ConfigError("range wants lo:hi:count, got '" + text + "'");
    }
    try {
        r.lo = std::stod(text.substr(0, p1));
        r.hi = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        r.count = std::stoi(text.substr(p2 + 1));
    } catch (const std::exception&) {
        throw udr::ConfigError("cannot parse range '" + text + "'");
    }
    if (!(r.lo > 0.0) || !(r.hi > r.lo) || r.count < 1) {
        throw udr::ConfigError("range needs 0 < lo < hi and count >= 1");
    }
    return r;
}

bool has_extension(const std::filesystem::path& p, const char* ext) {
    std::string e = p.extension().string();
    for (char& ch : e) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return e == ext;
}

udr::DistributionKind need_distribution(const std::string& name) {
    const auto kind = udr::parse_distribution(name);
    if (!kind) throw udr::ConfigError("unknown distribution '" + name + "'");
    return *kind;
}

std::optional<udr::ExperimentPreset> lookup_preset(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "fig5") return udr::fig5_preset();
    if (name == "fig6") return udr::fig6_preset();
    if (name == "proto") return udr::proto_preset();
    throw udr::ConfigError("unknown preset '" + name + "' (want fig5, fig6, or proto)");
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw udr::Error("cannot open '" + path + "' for writing");
    return file;
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::string sines;
    std::string dist;
    double sigma = 1.0;
    double rate = 0.0;
    double dur = 0.0;
    std::uint64_t seed = 1;
    double full_scale = 1.0;
    std::string preset;
    std::string out;
};

int run_gen(const GenArgs& a, bool rate_given, bool dur_given, bool fs_given) {
    udr::SignalSpec spec;
    double full_scale = a.full_scale;
    if (const auto preset = lookup_preset(a.preset)) {
        spec = preset->signal;
        if (!fs_given) full_scale = preset->pcm_full_scale_v;
    }
    if (!a.sines.empty() && !a.dist.empty()) {
        throw udr::ConfigError("--sines and --dist are mutually exclusive");
    }
    if (!a.sines.empty()) spec.kind = udr::SinusoidMixture{parse_sines(a.sines)};
    if (!a.dist.empty()) spec.kind = udr::RandomProcess{need_distribution(a.dist), a.sigma};
    if (rate_given) spec.sample_rate_hz = a.rate;
    if (dur_given) spec.duration_s = a.dur;

    const udr::SampleStream stream = udr::generate(spec, a.seed);
    if (has_extension(a.out, ".wav")) {
        udr::write_pcm_audio(stream, a.out, full_scale);
    } else {
        udr::write_csv(stream, a.out);
    }
    std::cout << "wrote " << stream.samples.size() << " samples @ "
              << fmt(stream.sample_rate_hz) << " Hz -> " << a.out << "\n";
    return exit_ok;
}

// ------------------------------------------------------------ convert ----

struct ConvertArgs {
    std::string input;
    double rate = 1.0;
    double full_scale = 1.0;
    double vref = 0.0;
    int bits = 0;
    int counter_bits = 8;
    double tclk_sh = -1.0;
    double tclk_cnt = -1.0;
    double tau = -1.0;
    int max_cycles = 1024;
    bool strict = false;
    bool json = false;
    std::string preset;
    std::string out;
};

int run_convert(const ConvertArgs& a, bool vref_given, bool bits_given, bool fs_given) {
    double vref = a.vref;
    int bits = a.bits;
    double full_scale = a.full_scale;
    if (const auto preset = lookup_preset(a.preset)) {
        if (!vref_given) vref = preset->adc.v_ref;
        if (!bits_given) bits = preset->adc.total_bits;
        if (!fs_given) full_scale = preset->pcm_full_scale_v;
    }
    if (!(vref > 0.0) || bits == 0) {
        throw udr::ConfigError("convert needs --vref and --bits (or a --preset)");
    }
    udr::AdcConfig cfg = udr::AdcConfig::make(vref, bits, a.counter_bits);
    const bool timing_given = a.tclk_sh >= 0.0 || a.tclk_cnt >= 0.0 || a.tau >= 0.0;
    bool timing_ok = true;
    if (timing_given) {
        cfg.t_clk_sh = std::max(a.tclk_sh, 0.0);
        cfg.t_clk_cnt = std::max(a.tclk_cnt, 0.0);
        cfg.tau = std::max(a.tau, 0.0);
        timing_ok = udr::validate_timing(cfg);
        if (!timing_ok) {
            throw udr::ConfigError("clock configuration violates t_clk_sh >= 2 t_clk_cnt + tau");
        }
    }

    const udr::SampleStream input = has_extension(a.input, ".wav")
                                        ? udr::read_pcm_audio(a.input, full_scale)
                                        : udr::read_csv(a.input, a.rate);
    const auto [stream, report] = udr::encode_stream(input, cfg, a.max_cycles);
    udr::save_stream(stream, a.out);

    const double bound = 2.0 * cfg.v_ref;
    const bool eq5_violated = report.max_abs_increment > bound;
    const bool violated = eq5_violated || report.growth_violations > 0 || report.reset_overflows > 0;

    if (a.json) {
        nlohmann::json j;
        j["command"] = "convert";
        j["input"] = a.input;
        j["output"] = a.out;
        j["samples"] = stream.records.size();
        j["sample_rate_hz"] = input.sample_rate_hz;
        j["v_ref"] = cfg.v_ref;
        j["total_bits"] = cfg.total_bits;
        j["quant_bits"] = cfg.quant_bits;
        j["delta_udr"] = cfg.delta_udr();
        j["kernel_backend"] = udr::kernels::backend_name(udr::kernels::active_backend());
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [fold, count] : report.fold_histogram) {
            hist[std::to_string(fold)] = count;
        }
        j["fold_histogram"] = hist;
        j["max_abs_fold"] = report.max_abs_fold;
        j["max_cycles_used"] = report.max_cycles_used;
        j["resets"] = {{"none", report.resets_none},
                       {"positive", report.resets_positive},
                       {"negative", report.resets_negative}};
        j["growth_violations"] = report.growth_violations;
        j["reset_overflows"] = report.reset_overflows;
        j["max_abs_increment"] = report.max_abs_increment;
        j["eq5_increment_bound"] = bound;
        j["eq5_violated"] = eq5_violated;
        j["timing_checked"] = timing_given;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input:             " << a.input << " (" << input.samples.size()
                  << " samples @ " << fmt(input.sample_rate_hz) << " Hz)\n";
        std::cout << "output:            " << a.out << "\n";
        std::cout << "config:            v_ref " << fmt(cfg.v_ref) << " V, " << cfg.total_bits
                  << " bits (" << cfg.quant_bits << " quantization + 2 reset), delta "
                  << fmt(cfg.delta_udr()) << " V\n";
        std::cout << "kernel backend:    "
                  << udr::kernels::backend_name(udr::kernels::active_backend()) << "\n";
        std::cout << "fold histogram:   ";
        for (const auto& [fold, count] : report.fold_histogram) {
            std::cout << " " << fold << ":" << count;
        }
        std::cout << "\n";
        std::cout << "max |fold|:        " << report.max_abs_fold << "\n";
        std::cout << "max cycles used:   " << report.max_cycles_used << "\n";
        std::cout << "resets:            none " << report.resets_none << ", positive "
                  << report.resets_positive << ", negative " << report.resets_negative << "\n";
        std::cout << "growth violations: " << report.growth_violations << "\n";
        std::cout << "reset overflows:   " << report.reset_overflows << "\n";
        std::cout << "max increment:     " << fmt(report.max_abs_increment) << " V (bound 2 v_ref = "
                  << fmt(bound) << " V)\n";
    }

    if (violated) {
        std::cerr << "warning: growth-rate condition violated (max increment "
                  << fmt(report.max_abs_increment) << " V vs bound " << fmt(bound)
                  << " V; slow-fold samples " << report.growth_violations
                  << ", reset overflows " << report.reset_overflows << ")\n";
        if (a.strict) {
            throw StrictViolation("strict mode: growth-rate condition violated");
        }
    }
    return exit_ok;
}

// -------------------------------------------------------- reconstruct ----

struct ReconstructArgs {
    std::string input;
    std::string out;
    std::string ref;
    bool json = false;
};

int run_reconstruct(const ReconstructArgs& a) {
    const udr::ModuloStream stream = udr::load_stream(a.input);
    const udr::SampleStream out = udr::reconstruct(stream);
    udr::write_csv(out, a.out);

    std::optional<double> srer;
    if (!a.ref.empty()) {
        const udr::SampleStream ref = udr::read_csv(a.ref, out.sample_rate_hz);
        srer = udr::srer_db(ref, out);
    }
    if (a.json) {
        nlohmann::json j;
        j["command"] = "reconstruct";
        j["input"] = a.input;
        j["output"] = a.out;
        j["samples"] = out.samples.size();
        j["sample_rate_hz"] = out.sample_rate_hz;
        if (srer) {
            if (std::isinf(*srer)) {
                j["srer_db"] = "inf";
            } else {
                j["srer_db"] = *srer;
            }
        } else {
            j["srer_db"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reconstructed " << out.samples.size() << " samples @ "
                  << fmt(out.sample_rate_hz) << " Hz -> " << a.out << "\n";
        if (srer) {
            std::cout << "SRER vs " << a.ref << ": ";
            if (std::isinf(*srer)) {
                std::cout << "inf\n";
            } else {
                std::cout << fmt(*srer) << " dB\n";
            }
        }
    }
    return exit_ok;
}

// --------------------------------------------------------------- sqnr ----

struct SqnrArgs {
    std::string dist = "all";
    std::vector<int> bits = {8, 11};
    std::string gamma = "0.05:6:50";
    std::uint64_t monte_carlo = 0;
    std::uint64_t seed = 1;
    int workers = 8;
    bool crossover = false;
    std::string out;
};

int run_sqnr(const SqnrArgs& a) {
    std::vector<udr::DistributionKind> dists;
    if (a.dist == "all") {
        dists = {udr::DistributionKind::uniform, udr::DistributionKind::gaussian,
                 udr::DistributionKind::laplacian};
    } else {
        dists = {need_distribution(a.dist)};
    }
    const Range r = parse_range(a.gamma);
    const std::vector<double> gammas = r.count == 1
                                           ? std::vector<double>{r.lo}
                                           : udr::log_grid_closed(r.lo, r.hi, r.count);

    std::ofstream file;
    std::ostream& os = open_or_stdout(file, a.out);
    os << "distribution,n,gamma,sqnr_std_db,sqnr_udr_db";
    if (a.monte_carlo > 0) os << ",mc_std_db,mc_std_se_db,mc_udr_db,mc_udr_se_db";
    os << "\n";

    for (const auto dist : dists) {
        for (const int n : a.bits) {
            for (const double g : gammas) {
                udr::SqnrQuery q{dist, n, g, udr::AdcKind::standard};
                const double std_db = udr::ratio_to_db(udr::sqnr_std(q));
                const double udr_db = udr::ratio_to_db(udr::sqnr_udr(n, g));
                os << udr::distribution_name(dist) << "," << n << "," << fmt(g) << ","
                   << fmt(std_db) << "," << fmt(udr_db);
                if (a.monte_carlo > 0) {
                    q.adc = udr::AdcKind::standard;
                    const auto mc_std = udr::monte_carlo_sqnr(q, a.monte_carlo, a.seed, a.workers);
                    q.adc = udr::AdcKind::udr;
                    const auto mc_udr = udr::monte_carlo_sqnr(q, a.monte_carlo, a.seed, a.workers);
                    os << "," << fmt(mc_std.sqnr_db) << "," << fmt(mc_std.std_error_db) << ","
                       << fmt(mc_udr.sqnr_db) << "," << fmt(mc_udr.std_error_db);
                }
                os << "\n";
            }
        }
    }

    if (a.crossover) {
        for (const auto dist : dists) {
            for (const int n : a.bits) {
                const auto cx = udr::crossover_gamma(dist, n);
                if (!cx.found) {
                    std::cerr << "no crossover for " << udr::distribution_name(dist) << " n=" << n
                              << "\n";
                    continue;
                }
                udr::SqnrQuery q{dist, n, cx.gamma, udr::AdcKind::standard};
                os << udr::distribution_name(dist) << "," << n << "," << fmt(cx.gamma) << ","
                   << fmt(udr::ratio_to_db(udr::sqnr_std(q))) << ","
                   << fmt(udr::ratio_to_db(udr::sqnr_udr(n, cx.gamma)));
                if (a.monte_carlo > 0) os << ",,,,";
                os << "\n";
            }
        }
    }
    return exit_ok;
}

// ------------------------------------------------------------ hwmodel ----

struct HwArgs {
    std::string n1 = "4:14:11";
    std::vector<double> lambdas = {1.0, 2.0, 4.0, 8.0};
    std::string area_out;
    std::string power_out;
    bool json = false;
};

int run_hwmodel(const HwArgs& a) {
    const auto colon1 = a.n1.find(':');
    int n_lo = 0;
    int n_hi = 0;
    try {
        n_lo = std::stoi(a.n1.substr(0, colon1));
        const auto rest = a.n1.substr(colon1 + 1);
        const auto colon2 = rest.find(':');
        n_hi = std::stoi(colon2 == std::string::npos ? rest : rest.substr(0, colon2));
    } catch (const std::exception&) {
        throw udr::ConfigError("--n1 wants lo:hi, got '" + a.n1 + "'");
    }
    if (n_lo < 1 || n_hi < n_lo || n_hi > 30) throw udr::ConfigError("--n1 range out of bounds");
    for (const double l : a.lambdas) {
        if (!(l >= 1.0)) throw udr::ConfigError("--lambda values must be >= 1");
    }

    if (a.json) {
        nlohmann::json j;
        j["command"] = "hwmodel";
        nlohmann::json area = nlohmann::json::array();
        for (int n1 = n_lo; n1 <= n_hi; ++n1) {
            for (const double l : a.lambdas) {
                const auto m = udr::flash_area_model({n1, l});
                area.push_back({{"n_bits", n1},
                                {"lambda", l},
                                {"n2", m.n2},
                                {"comparators_std", m.comparators_std},
                                {"resistors_std", m.resistors_std},
                                {"comparators_udr", m.comparators_udr},
                                {"resistors_udr", m.resistors_udr}});
            }
        }
        j["area"] = area;
        nlohmann::json power = nlohmann::json::array();
        for (int n = n_lo; n <= n_hi; ++n) {
            for (const double l : a.lambdas) {
                const double resolution = 2.0 / std::ldexp(1.0, n);
                power.push_back({{"resolution_volts", resolution},
                                 {"lambda", l},
                                 {"power_ratio", udr::dynamic_power_ratio(l)},
                                 {"power_std_au", 1.0},
                                 {"power_udr_au", udr::dynamic_power_ratio(l)}});
            }
        }
        j["power"] = power;
        j["power_au_note"] = "absolute powers are arbitrary units; only the ratio is normative";
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }

    {
        std::ofstream file;
        std::ostream& os = open_or_stdout(file, a.area_out);
        os << "n_bits,lambda,comparators_std,comparators_udr\n";
        for (int n1 = n_lo; n1 <= n_hi; ++n1) {
            for (const double l : a.lambdas) {
                const auto m = udr::flash_area_model({n1, l});
                os << n1 << "," << fmt(l) << "," << m.comparators_std << "," << m.comparators_udr
                   << "\n";
            }
        }
    }
    {
        std::ofstream file;
        std::ostream& os = open_or_stdout(file, a.power_out);
        os << "resolution_volts,lambda,power_ratio\n";
        for (int n = n_lo; n <= n_hi; ++n) {
            for (const double l : a.lambdas) {
                const double resolution = 2.0 / std::ldexp(1.0, n);
                os << fmt(resolution) << "," << fmt(l) << "," << fmt(udr::dynamic_power_ratio(l))
                   << "\n";
            }
        }
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"udradc: modulo-folding (self-reset) ADC simulator and analysis toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a test signal (CSV or WAV)");
    cmd_gen->add_option("--sines", gen.sines, "sinusoid mixture as freq:amp[:phase],...");
    cmd_gen->add_option("--dist", gen.dist, "random process: uniform|gaussian|laplacian");
    cmd_gen->add_option("--sigma", gen.sigma, "random process standard deviation [V]");
    auto* gen_rate = cmd_gen->add_option("--rate", gen.rate, "sample rate [Hz]");
    auto* gen_dur = cmd_gen->add_option("--dur", gen.dur, "duration [s]");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    auto* gen_fs =
        cmd_gen->add_option("--full-scale", gen.full_scale, "WAV full-scale voltage [V]");
    cmd_gen->add_option("--preset", gen.preset, "fig5|fig6|proto");
    cmd_gen->add_option("-o,--out", gen.out, "output file (.csv or .wav)")->required();

    ConvertArgs conv;
    auto* cmd_conv = app.add_subcommand("convert", "fold + quantize a signal into a modulo stream");
    cmd_conv->add_option("input", conv.input, "input file (.csv or .wav)")->required();
    cmd_conv->add_option("--rate", conv.rate, "sample rate of a CSV input [Hz]");
    auto* conv_fs =
        cmd_conv->add_option("--full-scale", conv.full_scale, "WAV full-scale voltage [V]");
    auto* conv_vref = cmd_conv->add_option("--vref", conv.vref, "reference voltage [V]");
    auto* conv_bits = cmd_conv->add_option("--bits", conv.bits, "total bits per sample (n)");
    cmd_conv->add_option("--counter-bits", conv.counter_bits, "modulo counter width");
    cmd_conv->add_option("--tclk-sh", conv.tclk_sh, "sample-and-hold clock period [s]");
    cmd_conv->add_option("--tclk-cnt", conv.tclk_cnt, "counter clock period [s]");
    cmd_conv->add_option("--tau", conv.tau, "quantizer delay [s]");
    cmd_conv->add_option("--max-cycles", conv.max_cycles, "fold iteration budget per sample");
    cmd_conv->add_flag("--strict", conv.strict, "exit 4 on growth-condition violations");
    cmd_conv->add_flag("--json", conv.json, "emit the summary as JSON");
    cmd_conv->add_option("--preset", conv.preset, "fig5|fig6|proto");
    cmd_conv->add_option("-o,--out", conv.out, "output stream (.uadc)")->required();

    ReconstructArgs rec;
    auto* cmd_rec = app.add_subcommand("reconstruct", "invert a modulo stream back to samples");
    cmd_rec->add_option("input", rec.input, "input stream (.uadc)")->required();
    cmd_rec->add_option("-o,--out", rec.out, "output CSV")->required();
    cmd_rec->add_option("--ref", rec.ref, "reference CSV for the SRER report");
    cmd_rec->add_flag("--json", rec.json, "emit the report as JSON");

    SqnrArgs sq;
    auto* cmd_sq = app.add_subcommand("sqnr", "closed-form / Monte Carlo SQNR sweeps");
    cmd_sq->add_option("--dist", sq.dist, "uniform|gaussian|laplacian|all");
    cmd_sq->add_option("--bits", sq.bits, "total bit widths to sweep")->delimiter(',');
    cmd_sq->add_option("--gamma", sq.gamma, "loading factor grid lo:hi:count (log-spaced)");
    cmd_sq->add_option("--monte-carlo", sq.monte_carlo, "add empirical columns with N samples");
    cmd_sq->add_option("--seed", sq.seed, "Monte Carlo seed");
    cmd_sq->add_option("--workers", sq.workers, "Monte Carlo worker partitions");
    cmd_sq->add_flag("--crossover", sq.crossover, "append gamma* rows per (distribution, n)");
    cmd_sq->add_option("-o,--out", sq.out, "output CSV (default stdout)");

    HwArgs hw;
    auto* cmd_hw = app.add_subcommand("hwmodel", "flash area counts and dynamic power ratios");
    cmd_hw->add_option("--n1", hw.n1, "folding-converter bit range lo:hi");
    cmd_hw->add_option("--lambda", hw.lambdas, "folding factors")->delimiter(',');
    cmd_hw->add_option("--area-out", hw.area_out, "area CSV (default stdout)");
    cmd_hw->add_option("--power-out", hw.power_out, "power CSV (default stdout)");
    cmd_hw->add_flag("--json", hw.json, "emit one JSON report instead of CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (cmd_gen->parsed()) {
            return run_gen(gen, gen_rate->count() > 0, gen_dur->count() > 0, gen_fs->count() > 0);
        }
        if (cmd_conv->parsed()) {
            return run_convert(conv, conv_vref->count() > 0, conv_bits->count() > 0,
                               conv_fs->count() > 0);
        }
        if (cmd_rec->parsed()) return run_reconstruct(rec);
        if (cmd_sq->parsed()) return run_sqnr(sq);
        if (cmd_hw->parsed()) return run_hwmodel(hw);
    } catch (const StrictViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_strict;
    } catch (const udr::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const udr::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const udr::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const udr::Error& e) {
        // Parse, format, length, corruption, saturation, non-convergence.
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}
