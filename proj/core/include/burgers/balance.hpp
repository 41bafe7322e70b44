#pragma once

#include <map>
#include <optional>

#include "burgers/dissipation.hpp"
#include "burgers/sequence.hpp"

namespace burgers {

// Leading-order decay law implied by the dominant balance:
//   KLogK:      |u_hat(k)| ~ exp(-coefficient * kt * ln kt), kt = k/k_d
//   PowerAlpha: |u_hat(k)| ~ exp(-coefficient * |k|^alpha)
enum class DecayForm { KLogK, PowerAlpha };

struct ClosedForm {
  DecayForm form = DecayForm::KLogK;
  double coefficient = 0.0;  // > 0
  double alpha = 0.0;        // PowerAlpha only
};

struct BalancePrediction {
  DissipationSymbol symbol;
  std::map<long long, double> f_values;  // F at dyadic wavenumbers 1..2^n_max
  std::optional<ClosedForm> closed_form;
  // Midpoint-dominance check G(2^n) >= 0 at the produced dyadic points,
  // reported rather than assumed.
  bool minimum_condition = false;
};

// F(2^n) = 2^n * [F(1) + sum_{j=1}^{n} G(2^j)/2^j] with F(1) = f1.
// Closed form: KLogK(1/ln 2) for Exponential, Cosh, and Stretched alpha = 1;
// PowerAlpha(2*sigma/(1 - 2^{1-alpha}), alpha) for Stretched alpha > 1; none
// for PowerLaplacian.  Symbols with alpha < 1 are rejected: the midpoint is
// no longer the minimum of F(p) + F(k-p).
BalancePrediction solve_balance(const DissipationSymbol& sym, int n_max,
                                double f1);

// Discr(k) = -ln s_k / (kt ln kt) - 1/ln 2 with kt = k/k_d, evaluated
// pointwise; entries must be positive and indices must satisfy k/k_d > 1.
Sequence naive_discrepancy(const Sequence& spectrum, double k_d,
                           double t_label);

struct DecayBoundCheck {
  bool holds = true;
  long first_violation = -1;  // index of the first failing entry
};

// True iff s_k <= exp(-c * kt * ln kt) for every entry with index >= k_min.
// Preconditions (enforced): c < 1/(2 ln 2) and k_min/k_d > e, so the bound
// is meaningful and kt*ln(kt) is increasing over the checked range.
DecayBoundCheck check_decay_bound(const Sequence& spectrum, double k_d,
                                  double c, long k_min);

// First index k at which the magnitude ratio s_{k+1}/s_k jumps above
// max(0.3, 8 * smallest ratio seen so far): the onset of the rounding-noise
// floor, where the spectrum stops falling and flattens out.  Returns one
// past the last index when the whole sequence keeps decaying cleanly.
long noise_onset(const Sequence& spectrum);

}  // namespace burgers
