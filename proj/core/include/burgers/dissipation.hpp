#pragma once

#include <string>

namespace burgers {

enum class SymbolFamily {
  Exponential,           // rho(k) = mu * exp(2*sigma*|k|)
  Cosh,                  // rho(k) = mu * (cosh(k/k_d) - 1)
  StretchedExponential,  // rho(k) = mu * exp(2*sigma*|k|^alpha)
  PowerLaplacian,        // rho(k) = mu * |k|^(2*alpha)
};

// Fourier symbol of the dissipation operator.  sigma and k_d are two views
// of the same length scale, coupled by k_d = 1/(2*sigma).
struct DissipationSymbol {
  SymbolFamily family = SymbolFamily::Cosh;
  double mu = 1.0;
  double sigma = 0.5;
  double k_d = 1.0;
  double alpha = 1.0;  // StretchedExponential / PowerLaplacian only

  static DissipationSymbol exponential(double mu, double sigma);
  static DissipationSymbol cosh_symbol(double mu, double k_d);
  static DissipationSymbol stretched(double mu, double sigma, double alpha);
  static DissipationSymbol power_laplacian(double mu, double alpha);

  // rho(k) >= 0; rho(0) = mu for the exponential families (exp(0) = 1) and
  // 0 for Cosh and PowerLaplacian.
  double rate(double k) const;

  // G(k) = ln(rate(k)/mu).  Throws std::domain_error when rate(k) == 0.
  double growth_exponent(double k) const;

  std::string family_name() const;
};

SymbolFamily family_from_name(const std::string& name);

}  // namespace burgers
