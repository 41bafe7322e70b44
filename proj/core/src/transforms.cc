#include "burgers/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace burgers {

namespace {

// FFTW planning mutates global state and is not thread safe; executing an
// existing plan on fresh buffers is.  Cache one plan per (size, direction).
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> buf(static_cast<std::size_t>(n));
    auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE);
    if (plan == nullptr) throw std::runtime_error("fftw_plan_dft_1d failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void execute_dft(int n, int sign, std::vector<cplx>& data) {
  // FFTW_ESTIMATE plans have no alignment requirement beyond the programmer
  // keeping in/out sizes fixed, so new-array execution is safe here.
  fftw_plan plan = plan_cache().get(n, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

bool looks_hermitian(const SpectralField& f) { return f.reality_flag; }

// Truncated convolution c(k) = sum a(p) b(k-p) over |p|,|k-p|,|k| <= k_max,
// restricted further to the actual nonzero support of a and b.
SpectralField convolve_direct(const SpectralField& a, const SpectralField& b,
                              const Grid& grid) {
  const int kmax = grid.k_max();
  SpectralField out(grid);
  out.reality_flag = a.reality_flag && b.reality_flag;
  out.time_stamp = a.time_stamp;

  auto support = [kmax](const SpectralField& f, int& lo, int& hi) {
    lo = kmax + 1;
    hi = -kmax - 1;
    for (int k = -kmax; k <= kmax; ++k) {
      if (f.at(k) != cplx{0.0, 0.0}) {
        if (k < lo) lo = k;
        if (k > hi) hi = k;
      }
    }
  };
  int alo, ahi, blo, bhi;
  support(a, alo, ahi);
  support(b, blo, bhi);
  if (alo > ahi || blo > bhi) return out;  // one factor is identically zero

  for (int k = -kmax; k <= kmax; ++k) {
    const int plo = std::max(alo, k - bhi);
    const int phi = std::min(ahi, k - blo);
    cplx sum{0.0, 0.0};
    for (int p = std::max(plo, -kmax); p <= std::min(phi, kmax); ++p) {
      const int q = k - p;
      if (q < -kmax || q > kmax) continue;
      sum += a.at(p) * b.at(q);
    }
    out.at(k) = sum;
  }
  return out;
}

// Pointwise product on a grid with at least 3*k_max+1 points, so that every
// alias image of the quadratic interactions lands outside the retained band.
SpectralField convolve_fft(const SpectralField& a, const SpectralField& b,
                           const Grid& grid) {
  const int n = grid.n_collocation;
  const int kmax = grid.k_max();

  int m = n;
  if (m < 3 * kmax + 1) {
    m = 3 * kmax + 1;
    if (m % 2 != 0) ++m;  // keep the working grid even like the main one
  }

  auto spread = [m, kmax](const SpectralField& f) {
    std::vector<cplx> big(static_cast<std::size_t>(m), cplx{0.0, 0.0});
    for (int k = -kmax; k <= kmax; ++k) {
      const int idx = k >= 0 ? k : k + m;
      big[static_cast<std::size_t>(idx)] = f.at(k);
    }
    execute_dft(m, FFTW_BACKWARD, big);  // values = sum_k c_k e^{ikx}
    return big;
  };

  std::vector<cplx> av = spread(a);
  std::vector<cplx> bv = spread(b);
  for (int j = 0; j < m; ++j) {
    av[static_cast<std::size_t>(j)] *= bv[static_cast<std::size_t>(j)];
  }
  execute_dft(m, FFTW_FORWARD, av);

  SpectralField out(grid);
  out.reality_flag = a.reality_flag && b.reality_flag;
  out.time_stamp = a.time_stamp;
  const double scale = 1.0 / static_cast<double>(m);
  for (int k = -kmax; k <= kmax; ++k) {
    const int idx = k >= 0 ? k : k + m;
    out.at(k) = av[static_cast<std::size_t>(idx)] * scale;
  }
  return out;
}

}  // namespace

SpectralField forward_transform(const std::vector<cplx>& values,
                                const Grid& grid) {
  const int n = grid.n_collocation;
  if (static_cast<int>(values.size()) != n) {
    throw std::invalid_argument("forward_transform: value count != grid size");
  }
  SpectralField out(grid);
  out.coeffs = values;
  execute_dft(n, FFTW_FORWARD, out.coeffs);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : out.coeffs) c *= scale;
  out.zero_beyond_cutoff();
  return out;
}

std::vector<cplx> inverse_transform(const SpectralField& field) {
  std::vector<cplx> values = field.coeffs;
  execute_dft(field.grid.n_collocation, FFTW_BACKWARD, values);
  return values;
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b,
                                const Grid& grid, ConvolutionRoute route) {
  if (!(a.grid == grid) || !(b.grid == grid)) {
    throw std::invalid_argument("dealiased_product: grid mismatch");
  }
  if (route == ConvolutionRoute::Auto) {
    route = (looks_hermitian(a) && looks_hermitian(b)) ? ConvolutionRoute::Fft
                                                       : ConvolutionRoute::Direct;
  }
  return route == ConvolutionRoute::Fft ? convolve_fft(a, b, grid)
                                        : convolve_direct(a, b, grid);
}

SpectralField nonlinear_term(const SpectralField& u, const Grid& grid,
                             ConvolutionRoute route) {
  SpectralField prod = dealiased_product(u, u, grid, route);
  const int kmax = grid.k_max();
  for (int k = -kmax; k <= kmax; ++k) {
    prod.at(k) *= cplx{0.0, -0.5 * static_cast<double>(k)};
  }
  return prod;
}

}  // namespace burgers
