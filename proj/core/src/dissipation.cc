#include "burgers/dissipation.hpp"

#include <cmath>
#include <stdexcept>

namespace burgers {

namespace {

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

}  // namespace

DissipationSymbol DissipationSymbol::exponential(double mu, double sigma) {
  check_positive(mu, "mu");
  check_positive(sigma, "sigma");
  DissipationSymbol s;
  s.family = SymbolFamily::Exponential;
  s.mu = mu;
  s.sigma = sigma;
  s.k_d = 1.0 / (2.0 * sigma);
  return s;
}

DissipationSymbol DissipationSymbol::cosh_symbol(double mu, double k_d) {
  check_positive(mu, "mu");
  check_positive(k_d, "k_d");
  DissipationSymbol s;
  s.family = SymbolFamily::Cosh;
  s.mu = mu;
  s.k_d = k_d;
  s.sigma = 1.0 / (2.0 * k_d);
  return s;
}

DissipationSymbol DissipationSymbol::stretched(double mu, double sigma,
                                               double alpha) {
  check_positive(mu, "mu");
  check_positive(sigma, "sigma");
  check_positive(alpha, "alpha");
  DissipationSymbol s;
  s.family = SymbolFamily::StretchedExponential;
  s.mu = mu;
  s.sigma = sigma;
  s.k_d = 1.0 / (2.0 * sigma);
  s.alpha = alpha;
  return s;
}

DissipationSymbol DissipationSymbol::power_laplacian(double mu, double alpha) {
  check_positive(mu, "mu");
  check_positive(alpha, "alpha");
  DissipationSymbol s;
  s.family = SymbolFamily::PowerLaplacian;
  s.mu = mu;
  s.alpha = alpha;
  // sigma/k_d carry no meaning for a power law; keep the defaults.
  return s;
}

double DissipationSymbol::rate(double k) const {
  const double ak = std::abs(k);
  switch (family) {
    case SymbolFamily::Exponential:
      return mu * std::exp(2.0 * sigma * ak);
    case SymbolFamily::Cosh: {
      // cosh(x) - 1 = (expm1(x) + expm1(-x)) / 2: exact for small x, where
      // the naive difference would cancel, and equivalent for large x.
      const double x = ak / k_d;
      return mu * 0.5 * (std::expm1(x) + std::expm1(-x));
    }
    case SymbolFamily::StretchedExponential:
      return mu * std::exp(2.0 * sigma * std::pow(ak, alpha));
    case SymbolFamily::PowerLaplacian:
      return ak == 0.0 ? 0.0 : mu * std::pow(ak, 2.0 * alpha);
  }
  throw std::logic_error("unknown symbol family");
}

double DissipationSymbol::growth_exponent(double k) const {
  // G(k) = ln(rate(k)/mu), written per family so large arguments cannot
  // overflow through the intermediate rate.
  const double ak = std::abs(k);
  switch (family) {
    case SymbolFamily::Exponential:
      return 2.0 * sigma * ak;
    case SymbolFamily::Cosh: {
      if (ak == 0.0) {
        throw std::domain_error("growth_exponent undefined where rate vanishes");
      }
      const double x = ak / k_d;
      if (x > 36.0) {
        // ln(cosh x - 1) = x - ln 2 + ln(1 - 2e^{-x} + e^{-2x})
        return x - std::log(2.0) +
               std::log1p(std::exp(-2.0 * x) - 2.0 * std::exp(-x));
      }
      const double r = 0.5 * (std::expm1(x) + std::expm1(-x));
      if (r <= 0.0) {
        throw std::domain_error("growth_exponent undefined where rate vanishes");
      }
      return std::log(r);
    }
    case SymbolFamily::StretchedExponential:
      return 2.0 * sigma * std::pow(ak, alpha);
    case SymbolFamily::PowerLaplacian:
      if (ak == 0.0) {
        throw std::domain_error("growth_exponent undefined where rate vanishes");
      }
      return 2.0 * alpha * std::log(ak);
  }
  throw std::logic_error("unknown symbol family");
}

std::string DissipationSymbol::family_name() const {
  switch (family) {
    case SymbolFamily::Exponential:
      return "exponential";
    case SymbolFamily::Cosh:
      return "cosh";
    case SymbolFamily::StretchedExponential:
      return "stretched_exponential";
    case SymbolFamily::PowerLaplacian:
      return "power_laplacian";
  }
  return "unknown";
}

SymbolFamily family_from_name(const std::string& name) {
  if (name == "exponential") return SymbolFamily::Exponential;
  if (name == "cosh") return SymbolFamily::Cosh;
  if (name == "stretched_exponential") return SymbolFamily::StretchedExponential;
  if (name == "power_laplacian") return SymbolFamily::PowerLaplacian;
  throw std::invalid_argument("unknown dissipation family: " + name);
}

}  // namespace burgers
