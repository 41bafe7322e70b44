#include "burgers/balance.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace burgers {

BalancePrediction solve_balance(const DissipationSymbol& sym, int n_max,
                                double f1) {
  if (n_max < 1) throw std::invalid_argument("solve_balance: n_max must be >= 1");
  const bool alpha_family = sym.family == SymbolFamily::StretchedExponential ||
                            sym.family == SymbolFamily::PowerLaplacian;
  if (alpha_family && sym.alpha < 1.0) {
    throw std::invalid_argument(
        "dominant balance rejected: alpha < 1 breaks the minimum condition "
        "(the midpoint no longer minimizes F(p) + F(k-p))");
  }

  BalancePrediction out;
  out.symbol = sym;
  out.minimum_condition = true;
  out.f_values[1] = f1;
  double partial = f1;  // F(1) + sum_{j<=n} G(2^j)/2^j
  double pow2 = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    pow2 *= 2.0;
    const double g = sym.growth_exponent(pow2);
    if (g < 0.0) out.minimum_condition = false;
    partial += g / pow2;
    out.f_values[static_cast<long long>(pow2)] = pow2 * partial;
  }

  switch (sym.family) {
    case SymbolFamily::Exponential:
    case SymbolFamily::Cosh:
      out.closed_form = ClosedForm{DecayForm::KLogK, 1.0 / std::log(2.0), 0.0};
      break;
    case SymbolFamily::StretchedExponential:
      if (sym.alpha == 1.0) {
        out.closed_form =
            ClosedForm{DecayForm::KLogK, 1.0 / std::log(2.0), 0.0};
      } else {
        const double coeff =
            2.0 * sym.sigma / (1.0 - std::pow(2.0, 1.0 - sym.alpha));
        out.closed_form = ClosedForm{DecayForm::PowerAlpha, coeff, sym.alpha};
      }
      break;
    case SymbolFamily::PowerLaplacian:
      break;  // decay is not of either closed form; F table only
  }
  return out;
}

Sequence naive_discrepancy(const Sequence& spectrum, double k_d,
                           double t_label) {
  if (!(k_d > 0.0)) {
    throw std::invalid_argument("naive_discrepancy: k_d must be positive");
  }
  if (!(static_cast<double>(spectrum.start_index) / k_d > 1.0)) {
    throw std::invalid_argument(
        "naive_discrepancy: needs k/k_d > 1 so ln(k/k_d) is positive");
  }
  const double inv_ln2 = 1.0 / std::log(2.0);
  Sequence out;
  out.start_index = spectrum.start_index;
  std::ostringstream label;
  label << "Discr(" << spectrum.label << ", t=" << t_label << ")";
  out.label = label.str();
  out.values.reserve(spectrum.values.size());
  for (std::size_t j = 0; j < spectrum.values.size(); ++j) {
    const double s = spectrum.values[j];
    if (!(s > 0.0)) {
      throw TransformError("naive_discrepancy: nonpositive entry",
                           spectrum.start_index + static_cast<long>(j));
    }
    const double kt =
        static_cast<double>(spectrum.start_index + static_cast<long>(j)) / k_d;
    out.values.push_back(-std::log(s) / (kt * std::log(kt)) - inv_ln2);
  }
  return out;
}

DecayBoundCheck check_decay_bound(const Sequence& spectrum, double k_d,
                                  double c, long k_min) {
  if (!(k_d > 0.0)) {
    throw std::invalid_argument("check_decay_bound: k_d must be positive");
  }
  const double c_limit = 0.5 / std::log(2.0);
  if (!(c < c_limit)) {
    throw std::invalid_argument(
        "check_decay_bound: C must be below 1/(2 ln 2)");
  }
  if (!(static_cast<double>(k_min) / k_d > std::exp(1.0))) {
    throw std::invalid_argument(
        "check_decay_bound: k_min/k_d must exceed e so kt*ln(kt) increases");
  }
  DecayBoundCheck out;
  for (std::size_t j = 0; j < spectrum.values.size(); ++j) {
    const long k = spectrum.start_index + static_cast<long>(j);
    if (k < k_min) continue;
    const double kt = static_cast<double>(k) / k_d;
    const double bound = std::exp(-c * kt * std::log(kt));
    if (std::abs(spectrum.values[j]) > bound) {
      out.holds = false;
      out.first_violation = k;
      return out;
    }
  }
  return out;
}

long noise_onset(const Sequence& spectrum) {
  const std::size_t n = spectrum.values.size();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double denom = std::abs(spectrum.values[j]);
    if (denom == 0.0) return spectrum.start_index + static_cast<long>(j);
    const double ratio = std::abs(spectrum.values[j + 1]) / denom;
    if (ratio > std::max(0.3, 8.0 * min_ratio)) {
      return spectrum.start_index + static_cast<long>(j) + 1;
    }
    min_ratio = std::min(min_ratio, ratio);
  }
  return spectrum.start_index + static_cast<long>(n);
}

}  // namespace burgers
