#include "burgers/halfspace_exact.hpp"

#include <stdexcept>

namespace burgers {

std::vector<BigReal> rho_table(const DissipationSymbol& symbol, int k_max,
                               int bits) {
  if (k_max < 1) throw std::invalid_argument("rho_table: k_max must be >= 1");
  std::vector<BigReal> rho;
  rho.reserve(static_cast<std::size_t>(k_max) + 1);
  const BigReal mu(symbol.mu, bits);
  const BigReal two(2L, bits);
  for (int k = 0; k <= k_max; ++k) {
    const BigReal kk(static_cast<long>(k), bits);
    switch (symbol.family) {
      case SymbolFamily::Exponential:
        rho.push_back(mu * exp(two * BigReal(symbol.sigma, bits) * kk));
        break;
      case SymbolFamily::Cosh:
        rho.push_back(mu * (cosh(kk / BigReal(symbol.k_d, bits)) -
                            BigReal(1L, bits)));
        break;
      case SymbolFamily::StretchedExponential:
        rho.push_back(k == 0
                          ? mu
                          : mu * exp(two * BigReal(symbol.sigma, bits) *
                                     pow(kk, BigReal(symbol.alpha, bits))));
        break;
      case SymbolFamily::PowerLaplacian:
        rho.push_back(k == 0
                          ? BigReal(0L, bits)
                          : mu * pow(kk, two * BigReal(symbol.alpha, bits)));
        break;
    }
  }
  return rho;
}

const ExpSum& ExactSolution::mode(int k) const {
  if (k < 1 || k > config.k_max) {
    throw std::out_of_range("ExactSolution::mode: k outside 1..k_max");
  }
  return modes[static_cast<std::size_t>(k) - 1];
}

BigComplex ExactSolution::v_hat(int k, const BigReal& t) const {
  return mode(k).evaluate(t, rho);
}

BigComplex ExactSolution::u_hat(int k, const BigReal& t,
                                std::complex<double> amplitude) const {
  const int bits = config.precision_bits;
  // u_hat = i * A^k * v_hat with A = -i*a  (so that u_hat(1,0) = a).
  const BigComplex a{BigReal(amplitude.real(), bits),
                     BigReal(amplitude.imag(), bits)};
  const BigComplex big_a{a.im, -a.re};
  BigComplex apow{BigReal(1L, bits), BigReal(0L, bits)};
  for (int j = 0; j < k; ++j) apow = apow * big_a;
  const BigComplex w = apow * v_hat(k, t);
  return {-w.im, w.re};  // multiply by i
}

ExactSolution solve_exact(const ExactConfig& cfg) {
  if (cfg.k_max < 1) {
    throw std::invalid_argument("solve_exact: k_max must be >= 1");
  }
  const int bits = cfg.precision_bits;
  ExactSolution sol{cfg, rho_table(cfg.symbol, cfg.k_max, bits), {}};
  sol.modes.reserve(static_cast<std::size_t>(cfg.k_max));
  sol.modes.push_back(ExpSum::single(
      RateKey::single(1), 0,
      BigComplex{BigReal(1L, bits), BigReal(0L, bits)}));

  const BigReal eps_base = BigReal::pow2(-(bits / 2), bits);
  const BigReal two(2L, bits);
  std::size_t live_terms = 1;

  for (int k = 2; k <= cfg.k_max; ++k) {
    ExpSum source;
    for (int p = 1; 2 * p < k; ++p) {
      source += (sol.modes[static_cast<std::size_t>(p) - 1] *
                 sol.modes[static_cast<std::size_t>(k - p) - 1])
                    .scaled(two);
      if (live_terms + source.term_count() > cfg.term_cap) {
        throw TermCapError(k, live_terms + source.term_count());
      }
    }
    if (k % 2 == 0) {
      const ExpSum& half = sol.modes[static_cast<std::size_t>(k) / 2 - 1];
      source += half * half;
      if (live_terms + source.term_count() > cfg.term_cap) {
        throw TermCapError(k, live_terms + source.term_count());
      }
    }
    const BigReal eps_res = eps_base * sol.rho[static_cast<std::size_t>(k)];
    ExpSum mode =
        integrate_against_kernel(source, k, sol.rho, eps_res)
            .scaled(BigReal(static_cast<long>(k), bits) / two);
    if (!mode.conserves_wavenumber(k)) {
      throw std::logic_error(
          "solve_exact: term with wrong total wavenumber at k = " +
          std::to_string(k));
    }
    live_terms += mode.term_count();
    if (live_terms > cfg.term_cap) throw TermCapError(k, live_terms);
    sol.modes.push_back(std::move(mode));
  }
  return sol;
}

}  // namespace burgers
