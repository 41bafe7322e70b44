#include "burgers/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace burgers {

namespace {

using nlohmann::json;

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string route_name(ConvolutionRoute route) {
  switch (route) {
    case ConvolutionRoute::Auto:
      return "auto";
    case ConvolutionRoute::Fft:
      return "fft";
    case ConvolutionRoute::Direct:
      return "direct";
  }
  return "auto";
}

namespace {

ConvolutionRoute route_from_name(const std::string& name) {
  if (name == "auto") return ConvolutionRoute::Auto;
  if (name == "fft") return ConvolutionRoute::Fft;
  if (name == "direct") return ConvolutionRoute::Direct;
  throw ConfigError("convolution_route", "must be auto, fft, or direct");
}

double require_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(key, "must be a number");
  return v.get<double>();
}

long long require_integer(const json& j, const std::string& key,
                          long long fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "must be an integer");
  return v.get<long long>();
}

std::string require_string(const json& j, const std::string& key,
                           const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_string()) throw ConfigError(key, "must be a string");
  return v.get<std::string>();
}

bool require_bool(const json& j, const std::string& key, bool fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_boolean()) throw ConfigError(key, "must be a boolean");
  return v.get<bool>();
}

}  // namespace

Config parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<config>", "cannot open " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("<config>", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("<config>", "top level must be a JSON object");
  }

  static const std::set<std::string> known = {
      "family",          "mu",
      "sigma",           "k_d",
      "alpha",           "n_collocation",
      "dealias_fraction", "dt",
      "t_end",           "initial_condition",
      "amplitude",       "convolution_route",
      "linear_only",     "exact_k_max",
      "precision_bits",  "term_cap",
      "recheck_bits",    "stack",
      "report_k_min",    "report_k_max",
      "n_max",           "f1"};
  for (const auto& item : j.items()) {
    if (known.find(item.key()) == known.end()) {
      throw ConfigError(item.key(), "unknown key");
    }
  }

  Config c;

  const std::string family_name = require_string(j, "family", "cosh");
  SymbolFamily family;
  try {
    family = family_from_name(family_name);
  } catch (const std::exception&) {
    throw ConfigError("family",
                      "must be one of exponential, cosh, "
                      "stretched_exponential, power_laplacian");
  }

  const double mu = require_number(j, "mu", 1.0);
  if (!(mu > 0.0)) throw ConfigError("mu", "must be positive");
  const double alpha = require_number(j, "alpha", 1.0);
  if (!(alpha > 0.0)) throw ConfigError("alpha", "must be positive");

  const bool has_sigma = j.contains("sigma");
  const bool has_kd = j.contains("k_d");
  double sigma = has_sigma ? require_number(j, "sigma", 0.0) : 0.0;
  double k_d = has_kd ? require_number(j, "k_d", 0.0) : 0.0;
  if (has_sigma && !(sigma > 0.0)) {
    throw ConfigError("sigma", "must be positive");
  }
  if (has_kd && !(k_d > 0.0)) throw ConfigError("k_d", "must be positive");
  if (has_sigma && has_kd) {
    if (std::abs(2.0 * sigma * k_d - 1.0) > 1e-12) {
      throw ConfigError("sigma",
                        "inconsistent with k_d (the two are coupled by "
                        "k_d = 1/(2*sigma))");
    }
  } else if (has_sigma) {
    k_d = 1.0 / (2.0 * sigma);
  } else if (has_kd) {
    sigma = 1.0 / (2.0 * k_d);
  } else {
    sigma = 0.5;
    k_d = 1.0;
  }

  switch (family) {
    case SymbolFamily::Exponential:
      c.symbol = DissipationSymbol::exponential(mu, sigma);
      break;
    case SymbolFamily::Cosh:
      c.symbol = DissipationSymbol::cosh_symbol(mu, k_d);
      break;
    case SymbolFamily::StretchedExponential:
      c.symbol = DissipationSymbol::stretched(mu, sigma, alpha);
      break;
    case SymbolFamily::PowerLaplacian:
      c.symbol = DissipationSymbol::power_laplacian(mu, alpha);
      break;
  }

  const long long n = require_integer(j, "n_collocation", 64);
  if (n < 8 || n % 2 != 0) {
    throw ConfigError("n_collocation", "must be even and >= 8");
  }
  c.n_collocation = static_cast<int>(n);

  c.dealias_fraction = require_number(j, "dealias_fraction", 2.0 / 3.0);
  if (!(c.dealias_fraction > 0.0 && c.dealias_fraction <= 1.0)) {
    throw ConfigError("dealias_fraction", "must lie in (0, 1]");
  }

  c.dt = require_number(j, "dt", 1e-3);
  if (!(c.dt > 0.0)) throw ConfigError("dt", "must be positive");
  c.t_end = require_number(j, "t_end", 1.0);
  if (!(c.t_end > 0.0)) throw ConfigError("t_end", "must be positive");
  if (c.dt > c.t_end) throw ConfigError("dt", "must not exceed t_end");

  c.initial_condition =
      require_string(j, "initial_condition", "minus_sine");
  if (c.initial_condition != "minus_sine" &&
      c.initial_condition != "single_complex_mode") {
    throw ConfigError("initial_condition",
                      "must be minus_sine or single_complex_mode");
  }

  if (j.contains("amplitude")) {
    const json& a = j.at("amplitude");
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() ||
        !a[1].is_number()) {
      throw ConfigError("amplitude", "must be an array [re, im]");
    }
    c.amplitude = cplx{a[0].get<double>(), a[1].get<double>()};
  }

  c.route = route_from_name(
      require_string(j, "convolution_route", "auto"));
  c.linear_only = require_bool(j, "linear_only", false);

  const long long kmax = require_integer(j, "exact_k_max", 24);
  if (kmax < 1) throw ConfigError("exact_k_max", "must be >= 1");
  c.exact_k_max = static_cast<int>(kmax);

  const long long bits = require_integer(j, "precision_bits", 256);
  if (bits < 16) throw ConfigError("precision_bits", "must be >= 16");
  c.precision_bits = static_cast<int>(bits);

  c.term_cap = require_integer(j, "term_cap", 20'000'000);
  if (c.term_cap < 1) throw ConfigError("term_cap", "must be >= 1");

  const long long recheck = require_integer(j, "recheck_bits", 384);
  if (recheck != 0 && recheck < 16) {
    throw ConfigError("recheck_bits", "must be 0 (off) or >= 16");
  }
  c.recheck_bits = static_cast<int>(recheck);

  c.stack = require_string(j, "stack", "Log,D,D,I,D");
  try {
    parse_stack(c.stack);
  } catch (const std::exception& e) {
    throw ConfigError("stack", e.what());
  }

  const long long rk_min = require_integer(j, "report_k_min", 2);
  if (rk_min < 1) throw ConfigError("report_k_min", "must be >= 1");
  c.report_k_min = static_cast<int>(rk_min);
  const long long rk_max = require_integer(j, "report_k_max", 0);
  if (rk_max < 0) throw ConfigError("report_k_max", "must be >= 0");
  c.report_k_max = static_cast<int>(rk_max);

  const long long n_max = require_integer(j, "n_max", 20);
  if (n_max < 1) throw ConfigError("n_max", "must be >= 1");
  c.n_max = static_cast<int>(n_max);
  c.f1 = require_number(j, "f1", 0.0);

  return c;
}

std::string config_to_json(const Config& c) {
  json j;
  j["family"] = c.symbol.family_name();
  j["mu"] = c.symbol.mu;
  j["sigma"] = c.symbol.sigma;
  j["k_d"] = c.symbol.k_d;
  j["alpha"] = c.symbol.alpha;
  j["n_collocation"] = c.n_collocation;
  j["dealias_fraction"] = c.dealias_fraction;
  j["dt"] = c.dt;
  j["t_end"] = c.t_end;
  j["initial_condition"] = c.initial_condition;
  j["amplitude"] = {c.amplitude.real(), c.amplitude.imag()};
  j["convolution_route"] = route_name(c.route);
  j["linear_only"] = c.linear_only;
  j["exact_k_max"] = c.exact_k_max;
  j["precision_bits"] = c.precision_bits;
  j["term_cap"] = c.term_cap;
  j["recheck_bits"] = c.recheck_bits;
  j["stack"] = c.stack;
  j["report_k_min"] = c.report_k_min;
  j["report_k_max"] = c.report_k_max;
  j["n_max"] = c.n_max;
  j["f1"] = c.f1;
  return j.dump(2) + "\n";
}

void ensure_writable(const std::filesystem::path& path, bool force) {
  if (std::filesystem::exists(path) && !force) throw OverwriteError(path);
  const auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content, bool force) {
  ensure_writable(path, force);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
}

Sequence magnitude_sequence(const SpectralField& field,
                            const std::string& label) {
  Sequence s;
  s.start_index = 1;
  s.label = label;
  const int kmax = field.grid.k_max();
  s.values.reserve(static_cast<std::size_t>(kmax));
  for (int k = 1; k <= kmax; ++k) {
    s.values.push_back(std::abs(field.at(k)));
  }
  return s;
}

std::vector<int> noise_flags(const Sequence& magnitudes) {
  double peak = 0.0;
  for (double v : magnitudes.values) peak = std::max(peak, v);
  const double floor = 100.0 * std::numeric_limits<double>::epsilon() * peak;
  std::vector<int> flags;
  flags.reserve(magnitudes.values.size());
  for (double v : magnitudes.values) flags.push_back(v < floor ? 1 : 0);
  return flags;
}

std::string spectrum_csv(const SpectralField& field) {
  const Sequence mags = magnitude_sequence(field, "spectrum");
  const std::vector<int> flags = noise_flags(mags);
  std::string out = "k,re_u,im_u,abs_u,noise_flag\n";
  const int kmax = field.grid.k_max();
  for (int k = 1; k <= kmax; ++k) {
    const cplx u = field.at(k);
    out += std::to_string(k);
    out += ',';
    out += format_double(u.real());
    out += ',';
    out += format_double(u.imag());
    out += ',';
    out += format_double(std::abs(u));
    out += ',';
    out += std::to_string(flags[static_cast<std::size_t>(k - 1)]);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

std::vector<std::vector<std::string>> read_csv(
    const std::filesystem::path& path, const std::string& expected_header) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<input>", "cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("<input>", path.string() + " is empty");
  }
  if (line != expected_header) {
    throw ConfigError("<input>", path.string() + ": expected header \"" +
                                     expected_header + "\", found \"" + line +
                                     "\"");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

double parse_double_field(const std::string& s,
                          const std::filesystem::path& path) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ConfigError("<input>", path.string() + ": bad number \"" + s + "\"");
  }
  return v;
}

long parse_long_field(const std::string& s,
                      const std::filesystem::path& path) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ConfigError("<input>",
                      path.string() + ": bad integer \"" + s + "\"");
  }
  return v;
}

}  // namespace

Sequence read_spectrum_csv(const std::filesystem::path& path) {
  const auto rows = read_csv(path, "k,re_u,im_u,abs_u,noise_flag");
  Sequence s;
  s.label = path.stem().string();
  bool first = true;
  long expected_k = 0;
  for (const auto& row : rows) {
    if (row.size() != 5) {
      throw ConfigError("<input>", path.string() + ": malformed row");
    }
    const long k = parse_long_field(row[0], path);
    if (first) {
      s.start_index = k;
      expected_k = k;
      first = false;
    }
    if (k != expected_k) {
      throw ConfigError("<input>",
                        path.string() + ": wavenumbers must be contiguous");
    }
    ++expected_k;
    s.values.push_back(parse_double_field(row[3], path));
  }
  if (s.values.empty()) {
    throw ConfigError("<input>", path.string() + " has no data rows");
  }
  return s;
}

std::string exact_csv(const ExactSolution& sol, const BigReal& t) {
  std::string out = "k,v_hat,term_count,precision_bits\n";
  for (int k = 1; k <= sol.config.k_max; ++k) {
    const BigComplex v = sol.v_hat(k, t);
    out += std::to_string(k);
    out += ',';
    out += v.re.to_string();
    out += ',';
    out += std::to_string(sol.mode(k).term_count());
    out += ',';
    out += std::to_string(sol.config.precision_bits);
    out += '\n';
  }
  return out;
}

BigSequence read_exact_csv(const std::filesystem::path& path) {
  const auto rows = read_csv(path, "k,v_hat,term_count,precision_bits");
  BigSequence s;
  s.label = path.stem().string();
  bool first = true;
  long expected_k = 0;
  for (const auto& row : rows) {
    if (row.size() != 4) {
      throw ConfigError("<input>", path.string() + ": malformed row");
    }
    const long k = parse_long_field(row[0], path);
    if (first) {
      s.start_index = k;
      expected_k = k;
      first = false;
    }
    if (k != expected_k) {
      throw ConfigError("<input>",
                        path.string() + ": wavenumbers must be contiguous");
    }
    ++expected_k;
    const long bits = parse_long_field(row[3], path);
    if (bits < 16) {
      throw ConfigError("<input>", path.string() + ": bad precision field");
    }
    try {
      s.values.emplace_back(row[1], static_cast<int>(bits));
    } catch (const std::exception&) {
      throw ConfigError("<input>",
                        path.string() + ": bad decimal \"" + row[1] + "\"");
    }
  }
  if (s.values.empty()) {
    throw ConfigError("<input>", path.string() + " has no data rows");
  }
  return s;
}

LoadedSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("<input>", "cannot open " + path.string());
  }
  std::string header;
  std::getline(in, header);
  in.close();
  LoadedSeries out;
  if (header == "k,re_u,im_u,abs_u,noise_flag") {
    out.is_exact = false;
    out.dbl = read_spectrum_csv(path);
  } else if (header == "k,v_hat,term_count,precision_bits") {
    out.is_exact = true;
    out.big = read_exact_csv(path);
  } else {
    throw ConfigError("<input>",
                      path.string() + ": unrecognized header \"" + header +
                          "\"");
  }
  return out;
}

namespace {

std::string value_string(double v) { return format_double(v); }
std::string value_string(const BigReal& v) { return v.to_string(); }

template <typename T>
std::string trace_csv_generic(const ExtrapolationReportT<T>& report) {
  const bool canonical = report.discrepancy_trace.has_value();
  const SequenceT<T>* terminal = &report.stages.back().second;
  const std::string col =
      report.stages.size() == 5 ? "stage5" : "terminal";
  std::string out = "k," + col + "," + col + "_plus_ln2\n";
  const SequenceT<T>& base = *terminal;
  for (std::size_t j = 0; j < base.values.size(); ++j) {
    const long k = base.start_index + static_cast<long>(j);
    out += std::to_string(k);
    out += ',';
    out += value_string(base.values[j]);
    out += ',';
    if (canonical) {
      out += value_string(report.discrepancy_trace->values[j]);
    } else {
      // ln 2 in the value's own precision
      T shifted = base.values[j];
      if constexpr (std::is_same_v<T, double>) {
        shifted += std::log(2.0);
      } else {
        shifted += log(BigReal(2L, base.values[j].precision_bits()));
      }
      out += value_string(shifted);
    }
    out += '\n';
  }
  return out;
}

template <typename T>
json sequence_json(const SequenceT<T>& s) {
  json j;
  j["start_index"] = s.start_index;
  j["label"] = s.label;
  if constexpr (std::is_same_v<T, double>) {
    j["values"] = s.values;
  } else {
    json vals = json::array();
    for (const auto& v : s.values) vals.push_back(v.to_string());
    j["values"] = std::move(vals);
  }
  return j;
}

template <typename T>
std::string report_json_generic(const ExtrapolationReportT<T>& report) {
  json j;
  json stages = json::array();
  for (const auto& [id, seq] : report.stages) {
    json stage;
    stage["transform"] = to_string(id);
    stage["sequence"] = sequence_json(seq);
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  if constexpr (std::is_same_v<T, double>) {
    j["terminal_fit"] = report.terminal_fit;
    if (report.c_star) j["c_star"] = *report.c_star;
    else j["c_star"] = nullptr;
  } else {
    j["terminal_fit"] = report.terminal_fit.to_string();
    if (report.c_star) j["c_star"] = report.c_star->to_string();
    else j["c_star"] = nullptr;
  }
  j["tail_length"] = report.tail_length;
  if (report.discrepancy_trace) {
    j["discrepancy_trace"] = sequence_json(*report.discrepancy_trace);
  } else {
    j["discrepancy_trace"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string trace_csv(const ExtrapolationReport& report) {
  return trace_csv_generic(report);
}
std::string trace_csv(const BigExtrapolationReport& report) {
  return trace_csv_generic(report);
}

std::string report_json(const ExtrapolationReport& report) {
  return report_json_generic(report);
}
std::string report_json(const BigExtrapolationReport& report) {
  return report_json_generic(report);
}

std::string balance_json(const BalancePrediction& prediction) {
  json j;
  j["symbol"] = {{"family", prediction.symbol.family_name()},
                 {"mu", prediction.symbol.mu},
                 {"sigma", prediction.symbol.sigma},
                 {"k_d", prediction.symbol.k_d},
                 {"alpha", prediction.symbol.alpha}};
  json fv = json::array();
  for (const auto& [k, f] : prediction.f_values) {
    fv.push_back({{"k", k}, {"f", f}});
  }
  j["f_values"] = std::move(fv);
  if (prediction.closed_form) {
    const ClosedForm& cf = *prediction.closed_form;
    json c;
    c["form"] = cf.form == DecayForm::KLogK ? "k_log_k" : "power_alpha";
    c["coefficient"] = cf.coefficient;
    if (cf.form == DecayForm::PowerAlpha) c["alpha"] = cf.alpha;
    j["closed_form"] = std::move(c);
  } else {
    j["closed_form"] = nullptr;
  }
  j["minimum_condition"] = prediction.minimum_condition;
  return j.dump(2) + "\n";
}

std::string balance_csv(const BalancePrediction& prediction) {
  std::string out = "k,f_value\n";
  for (const auto& [k, f] : prediction.f_values) {
    out += std::to_string(k);
    out += ',';
    out += format_double(f);
    out += '\n';
  }
  return out;
}

std::string discrepancy_csv(const Sequence& discrepancy) {
  std::string out = "k,discr\n";
  for (std::size_t j = 0; j < discrepancy.values.size(); ++j) {
    out += std::to_string(discrepancy.start_index + static_cast<long>(j));
    out += ',';
    out += format_double(discrepancy.values[j]);
    out += '\n';
  }
  return out;
}

}  // namespace burgers
