#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "burgers/dissipation.hpp"
#include "burgers/grid.hpp"
#include "burgers/transforms.hpp"

namespace burgers {

struct SolverConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  ConvolutionRoute route = ConvolutionRoute::Auto;
  bool linear_only = false;  // test hook: drop the nonlinear term entirely

  // Called after every accepted step when set (snapshots, progress, ...).
  std::function<void(const SpectralField&, long long step)> on_step;

  // Number of steps.  Requires 0 < dt <= t_end and t_end/dt within half an
  // ulp of an integer, so the final time is hit exactly.
  long long steps() const;
};

// Per-mode ETDRK4 weights for z = -rho(k)*dt.
struct EtdCoefficients {
  std::vector<cplx> e;   // exp(z)
  std::vector<cplx> e2;  // exp(z/2)
  std::vector<cplx> q;   // h * (exp(z/2)-1)/z
  std::vector<cplx> f1;  // h * (-4-z+exp(z)*(4-3z+z^2))/z^3
  std::vector<cplx> f2;  // h * (2+z+exp(z)*(-2+z))/z^3
  std::vector<cplx> f3;  // h * (-4-3z-z^2+exp(z)*(4-z))/z^3
};

// Weights for one scalar z; cancellation-prone small |z| handled by contour
// averaging over a unit circle centered at z.
struct EtdWeights {
  double e, e2, q, f1, f2, f3;
};
EtdWeights etd_weights(double z, double h);

EtdCoefficients make_coefficients(const Grid& grid,
                                  const DissipationSymbol& symbol, double dt);

struct SolverFailure {
  long long step = 0;  // step index at which a non-finite value appeared
};

struct SolverResult {
  SpectralField state;
  long long steps_taken = 0;
  std::optional<SolverFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

// Integrates du_hat/dt = -(ik/2) (u^2)_hat(k) - rho(k) u_hat(k) from the
// given state to t = state.time_stamp + cfg.t_end.
SolverResult integrate(const SpectralField& initial,
                       const DissipationSymbol& symbol,
                       const SolverConfig& cfg);

// The standard experiment: u0(x) = -sin(x) on an n-point grid, integrated to
// t_end.  Convenience wrapper used by the command-line driver and tests.
SpectralField minus_sine_initial(const Grid& grid);

// Initial data u0(x) = a * e^{ix}: one complex mode, non-Hermitian, support
// confined to k >= 1 (and the solver keeps it there).
SpectralField single_mode_initial(const Grid& grid, cplx amplitude);

}  // namespace burgers
