#pragma once

#include "burgers/grid.hpp"

namespace burgers {

// How dealiased_product evaluates the truncated convolution.
//   Fft:    pointwise product on a collocation grid large enough that no
//           alias lands inside the retained band (pad to >= 3*k_max+1).
//   Direct: explicit O(k_max^2) truncated convolution over the nonzero
//           support window; per-mode relative rounding stays tiny even when
//           coefficients span hundreds of orders of magnitude.
//   Auto:   Fft for Hermitian fields, Direct for non-Hermitian ones.  Real
//           simulations keep the conventional pseudo-spectral rounding
//           behaviour; half-space validation data keeps per-mode accuracy.
enum class ConvolutionRoute { Auto, Fft, Direct };

// u_hat(k) = (1/N) sum_j u(x_j) e^{-i k x_j}; matches the Fourier-series
// coefficients of u(x) = sum_k u_hat(k) e^{i k x} sampled on the grid.
SpectralField forward_transform(const std::vector<cplx>& values,
                                const Grid& grid);

// u(x_j) = sum_k u_hat(k) e^{i k x_j}.
std::vector<cplx> inverse_transform(const SpectralField& field);

// Fourier coefficients of the pointwise product a*b, exactly equal (up to
// rounding) to the truncated convolution sum_{p+q=k} a_hat(p) b_hat(q)
// restricted to |p|, |q|, |k| <= k_max.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b,
                                const Grid& grid,
                                ConvolutionRoute route = ConvolutionRoute::Auto);

// -(ik/2) * dealiased_product(u, u): the right-hand-side contribution of
// -u u_x, so that du_hat/dt = nonlinear_term + dissipation term.
SpectralField nonlinear_term(const SpectralField& u, const Grid& grid,
                             ConvolutionRoute route = ConvolutionRoute::Auto);

}  // namespace burgers
