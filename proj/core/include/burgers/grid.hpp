#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace burgers {

using cplx = std::complex<double>;

// Periodic grid on [0, 2*pi) with the 2/3-rule dealias cutoff.
// Modes are stored in FFT order: k = 0, 1, ..., N/2-1, -N/2, ..., -1.
struct Grid {
  int n_collocation = 64;
  double domain_length = 2.0 * M_PI;  // fixed, kept for completeness
  double dealias_fraction = 2.0 / 3.0;

  Grid() = default;
  Grid(int n, double fraction = 2.0 / 3.0)
      : n_collocation(n), dealias_fraction(fraction) {
    if (n < 8 || n % 2 != 0)
      throw std::invalid_argument("Grid: n_collocation must be even and >= 8");
    if (!(fraction > 0.0 && fraction <= 1.0))
      throw std::invalid_argument("Grid: dealias_fraction must be in (0,1]");
  }

  // Largest retained wavenumber: floor(fraction * N / 2).
  int k_max() const {
    return static_cast<int>(std::floor(dealias_fraction * n_collocation / 2));
  }
  // Wavenumber of storage slot i.
  int wavenumber(int i) const {
    return i < n_collocation / 2 ? i : i - n_collocation;
  }
  bool operator==(const Grid& o) const {
    return n_collocation == o.n_collocation &&
           dealias_fraction == o.dealias_fraction;
  }
};

// Fourier coefficients u_hat(k) on a Grid.  reality_flag marks fields that
// are Hermitian (u_hat(-k) = conj(u_hat(k)), i.e. real in physical space);
// half-space data (all k <= 0 empty) runs through the same type with the
// flag off.
struct SpectralField {
  Grid grid;
  std::vector<cplx> coeffs;  // FFT order, size n_collocation
  bool reality_flag = true;
  double time_stamp = 0.0;

  SpectralField() : coeffs(64, cplx{0.0, 0.0}) {}
  explicit SpectralField(const Grid& g, bool real_field = true)
      : grid(g), coeffs(g.n_collocation, cplx{0.0, 0.0}),
        reality_flag(real_field) {}

  int index_of(int k) const {
    const int n = grid.n_collocation;
    if (k < -n / 2 || k >= n / 2)
      throw std::out_of_range("SpectralField: wavenumber outside grid");
    return k >= 0 ? k : k + n;
  }
  cplx& at(int k) { return coeffs[index_of(k)]; }
  const cplx& at(int k) const { return coeffs[index_of(k)]; }

  // Wavenumber of storage slot i.
  int wavenumber(int i) const { return grid.wavenumber(i); }

  void zero_beyond_cutoff() {
    const int kc = grid.k_max();
    for (int i = 0; i < grid.n_collocation; ++i)
      if (std::abs(wavenumber(i)) > kc) coeffs[i] = cplx{0.0, 0.0};
  }
};

}  // namespace burgers
