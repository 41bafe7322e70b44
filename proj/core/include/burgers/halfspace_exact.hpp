#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "burgers/dissipation.hpp"
#include "burgers/expsum.hpp"

namespace burgers {

// Defaults are the reference exact experiment: rho(k) = e^k, modes 1..24.
struct ExactConfig {
  DissipationSymbol symbol = DissipationSymbol::exponential(1.0, 0.5);
  int k_max = 24;
  int precision_bits = 256;
  std::size_t term_cap = 20'000'000;
};

// rho(k) for k = 0..k_max at the requested precision.
std::vector<BigReal> rho_table(const DissipationSymbol& symbol, int k_max,
                               int bits);

// The normalized one-mode half-space solution: v_hat(1,t) = e^{-rho(1)t} and
//   v_hat(k,t) = (k/2) * int_0^t e^{-(t-s)rho(k)} sum_{p=1}^{k-1}
//                v_hat(p,s) v_hat(k-p,s) ds,
// each mode held as an exact exponential sum.  Initial data u0 = a e^{ix}
// maps onto it through u_hat(k,t) = i (-i a)^k v_hat(k,t).
struct ExactSolution {
  ExactConfig config;
  std::vector<BigReal> rho;   // index 0..k_max
  std::vector<ExpSum> modes;  // index k-1 holds mode k

  const ExpSum& mode(int k) const;
  BigComplex v_hat(int k, const BigReal& t) const;
  BigComplex u_hat(int k, const BigReal& t,
                   std::complex<double> amplitude) const;
};

// Builds all modes up to config.k_max.  Throws TermCapError when a mode's
// representation outgrows config.term_cap.
ExactSolution solve_exact(const ExactConfig& cfg);

}  // namespace burgers
