#include "burgers/etdrk4.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace burgers {

long long SolverConfig::steps() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt must be positive and finite");
  }
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be positive and finite");
  }
  if (dt > t_end) {
    throw std::invalid_argument("dt must not exceed t_end");
  }
  const double q = t_end / dt;
  const long long n = std::llround(q);
  const double ulp =
      std::nextafter(q, std::numeric_limits<double>::infinity()) - q;
  if (n < 1 || std::abs(q - static_cast<double>(n)) > 0.5 * ulp) {
    throw std::invalid_argument("t_end must be an integer multiple of dt");
  }
  return n;
}

EtdWeights etd_weights(double z, double h) {
  if (z == -std::numeric_limits<double>::infinity()) {
    // Limit of every weight as z -> -inf: the mode is fully slaved.
    return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  }
  if (std::abs(z) >= 0.5) {
    // Direct formulas are well conditioned away from z = 0.  For very large
    // negative z the exp(z) factors underflow to zero, which is the correct
    // limit of every weight.
    const double ez = std::exp(z);
    const double ez2 = std::exp(0.5 * z);
    const double z3 = z * z * z;
    return {ez,
            ez2,
            h * (ez2 - 1.0) / z,
            h * (-4.0 - z + ez * (4.0 - 3.0 * z + z * z)) / z3,
            h * (2.0 + z + ez * (-2.0 + z)) / z3,
            h * (-4.0 - 3.0 * z - z * z + ez * (4.0 - z)) / z3};
  }
  // Near z = 0 the closed forms lose all their accuracy to cancellation.
  // Average them over a unit circle centered at z instead (Kassam &
  // Trefethen 2005); the integrands are analytic inside, so the mean equals
  // the limit value.
  constexpr int kContourPoints = 64;
  double q = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
  for (int j = 0; j < kContourPoints; ++j) {
    const double theta =
        2.0 * M_PI * (static_cast<double>(j) + 0.5) / kContourPoints;
    const cplx r = z + std::polar(1.0, theta);
    const cplx er = std::exp(r);
    const cplx er2 = std::exp(0.5 * r);
    const cplx r3 = r * r * r;
    q += ((er2 - 1.0) / r).real();
    f1 += ((-4.0 - r + er * (4.0 - 3.0 * r + r * r)) / r3).real();
    f2 += ((2.0 + r + er * (-2.0 + r)) / r3).real();
    f3 += ((-4.0 - 3.0 * r - r * r + er * (4.0 - r)) / r3).real();
  }
  const double scale = h / kContourPoints;
  return {std::exp(z), std::exp(0.5 * z), scale * q,
          scale * f1,  scale * f2,        scale * f3};
}

EtdCoefficients make_coefficients(const Grid& grid,
                                  const DissipationSymbol& symbol, double dt) {
  const int n = grid.n_collocation;
  EtdCoefficients c;
  c.e.resize(n);
  c.e2.resize(n);
  c.q.resize(n);
  c.f1.resize(n);
  c.f2.resize(n);
  c.f3.resize(n);
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(grid.wavenumber(i));
    const EtdWeights w = etd_weights(-symbol.rate(k) * dt, dt);
    c.e[i] = w.e;
    c.e2[i] = w.e2;
    c.q[i] = w.q;
    c.f1[i] = w.f1;
    c.f2[i] = w.f2;
    c.f3[i] = w.f3;
  }
  return c;
}

namespace {

bool all_finite(const SpectralField& f) {
  for (const cplx& c : f.coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

SolverResult integrate(const SpectralField& initial,
                       const DissipationSymbol& symbol,
                       const SolverConfig& cfg) {
  const Grid& grid = initial.grid;
  const long long n_steps = cfg.steps();
  const EtdCoefficients w = make_coefficients(grid, symbol, cfg.dt);
  const int n = grid.n_collocation;

  SolverResult result{initial, 0, std::nullopt};
  SpectralField& u = result.state;
  u.zero_beyond_cutoff();

  SpectralField a(grid), b(grid), c(grid);
  a.reality_flag = b.reality_flag = c.reality_flag = u.reality_flag;

  for (long long step = 0; step < n_steps; ++step) {
    if (cfg.linear_only) {
      for (int i = 0; i < n; ++i) u.coeffs[i] *= w.e[i];
    } else {
      const SpectralField nu = nonlinear_term(u, grid, cfg.route);
      for (int i = 0; i < n; ++i) {
        a.coeffs[i] = w.e2[i] * u.coeffs[i] + w.q[i] * nu.coeffs[i];
      }
      const SpectralField na = nonlinear_term(a, grid, cfg.route);
      for (int i = 0; i < n; ++i) {
        b.coeffs[i] = w.e2[i] * u.coeffs[i] + w.q[i] * na.coeffs[i];
      }
      const SpectralField nb = nonlinear_term(b, grid, cfg.route);
      for (int i = 0; i < n; ++i) {
        c.coeffs[i] = w.e2[i] * a.coeffs[i] +
                      w.q[i] * (2.0 * nb.coeffs[i] - nu.coeffs[i]);
      }
      const SpectralField nc = nonlinear_term(c, grid, cfg.route);
      for (int i = 0; i < n; ++i) {
        u.coeffs[i] = w.e[i] * u.coeffs[i] + w.f1[i] * nu.coeffs[i] +
                      2.0 * w.f2[i] * (na.coeffs[i] + nb.coeffs[i]) +
                      w.f3[i] * nc.coeffs[i];
      }
    }
    if (!all_finite(u)) {
      result.failure = SolverFailure{step};
      result.steps_taken = step;
      return result;
    }
    result.steps_taken = step + 1;
    if (cfg.on_step) {
      u.time_stamp =
          initial.time_stamp + static_cast<double>(step + 1) * cfg.dt;
      cfg.on_step(u, step + 1);
    }
  }
  u.time_stamp =
      initial.time_stamp + static_cast<double>(n_steps) * cfg.dt;
  return result;
}

SpectralField minus_sine_initial(const Grid& grid) {
  // u0(x) = -sin(x) = (i/2) e^{ix} - (i/2) e^{-ix}, assigned exactly.
  SpectralField f(grid);
  f.at(1) = cplx{0.0, 0.5};
  f.at(-1) = cplx{0.0, -0.5};
  f.reality_flag = true;
  return f;
}

SpectralField single_mode_initial(const Grid& grid, cplx amplitude) {
  SpectralField f(grid);
  f.at(1) = amplitude;
  f.reality_flag = false;
  return f;
}

}  // namespace burgers
