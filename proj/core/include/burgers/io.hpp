#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "burgers/balance.hpp"
#include "burgers/etdrk4.hpp"
#include "burgers/extrapolation.hpp"
#include "burgers/halfspace_exact.hpp"

namespace burgers {

// Shortest decimal string that round-trips the double exactly; '.' decimal
// point regardless of locale.
std::string format_double(double v);

// Configuration problem, carrying the offending key.
struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string key_, const std::string& message)
      : std::runtime_error("config key \"" + key_ + "\": " + message),
        key(std::move(key_)) {}
};

// Flat experiment configuration; every physical parameter is explicit.
struct Config {
  DissipationSymbol symbol = DissipationSymbol::cosh_symbol(1.0, 1.0);
  int n_collocation = 64;
  double dealias_fraction = 2.0 / 3.0;
  double dt = 1e-3;
  double t_end = 1.0;
  std::string initial_condition = "minus_sine";  // or "single_complex_mode"
  cplx amplitude{0.0, 1.0};                      // single_complex_mode only
  ConvolutionRoute route = ConvolutionRoute::Auto;
  bool linear_only = false;
  int exact_k_max = 24;
  int precision_bits = 256;
  long long term_cap = 20'000'000;
  int recheck_bits = 384;  // 0 disables the high-precision re-check
  std::string stack = "Log,D,D,I,D";
  int report_k_min = 2;
  int report_k_max = 0;  // 0: up to the detected noise onset
  int n_max = 20;
  double f1 = 0.0;
};

Config parse_config(const std::filesystem::path& path);
std::string config_to_json(const Config& c);
std::string route_name(ConvolutionRoute route);

// Refusal to clobber an existing output without --force.
struct OverwriteError : std::runtime_error {
  explicit OverwriteError(const std::filesystem::path& p)
      : std::runtime_error("refusing to overwrite " + p.string() +
                           " (pass --force to allow)") {}
};

// Creates parent directories; throws OverwriteError if the file exists and
// force is off.
void ensure_writable(const std::filesystem::path& path, bool force);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content, bool force);

// Magnitudes |u_hat(k)|, k = 1..k_max, as a Sequence.
Sequence magnitude_sequence(const SpectralField& field,
                            const std::string& label);

// Diagnostic flags: entry k is noise-suspect when its magnitude is below
// 100 * eps_machine * max_j |u_hat(j)|.
std::vector<int> noise_flags(const Sequence& magnitudes);

// Spectrum CSV: k, re_u, im_u, abs_u, noise_flag for k = 1..k_max.
std::string spectrum_csv(const SpectralField& field);
Sequence read_spectrum_csv(const std::filesystem::path& path);

// Exact-coefficient CSV: k, v_hat (full-precision decimal), term_count,
// precision_bits.
std::string exact_csv(const ExactSolution& sol, const BigReal& t);
BigSequence read_exact_csv(const std::filesystem::path& path);

// Either kind of series file, detected by its header.
struct LoadedSeries {
  bool is_exact = false;
  Sequence dbl;     // valid when !is_exact
  BigSequence big;  // valid when is_exact
};
LoadedSeries load_series(const std::filesystem::path& path);

// Discrepancy-trace CSV: k, stage5, stage5_plus_ln2.
std::string trace_csv(const ExtrapolationReport& report);
std::string trace_csv(const BigExtrapolationReport& report);

std::string report_json(const ExtrapolationReport& report);
std::string report_json(const BigExtrapolationReport& report);

std::string balance_json(const BalancePrediction& prediction);
std::string balance_csv(const BalancePrediction& prediction);

std::string discrepancy_csv(const Sequence& discrepancy);

}  // namespace burgers
