#include "burgers/expsum.hpp"

#include <algorithm>

namespace burgers {

RateKey RateKey::single(int k) {
  if (k < 1) throw std::invalid_argument("RateKey::single: k must be >= 1");
  RateKey r;
  r.mult.assign(static_cast<std::size_t>(k), 0);
  r.mult.back() = 1;
  return r;
}

int RateKey::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    w += static_cast<int>(i + 1) * mult[i];
  }
  return w;
}

int RateKey::total_multiplicity() const {
  int n = 0;
  for (int m : mult) n += m;
  return n;
}

RateKey operator+(const RateKey& a, const RateKey& b) {
  RateKey r;
  r.mult.resize(std::max(a.mult.size(), b.mult.size()), 0);
  for (std::size_t i = 0; i < a.mult.size(); ++i) r.mult[i] += a.mult[i];
  for (std::size_t i = 0; i < b.mult.size(); ++i) r.mult[i] += b.mult[i];
  return r;
}

BigReal rate_of(const RateKey& key, const std::vector<BigReal>& rho) {
  if (key.mult.size() >= rho.size()) {
    throw std::out_of_range("rate_of: rho table too short for key");
  }
  BigReal lambda(0L, rho.empty() ? 0 : rho[0].precision_bits());
  for (std::size_t i = 0; i < key.mult.size(); ++i) {
    if (key.mult[i] == 0) continue;
    lambda += BigReal(static_cast<long>(key.mult[i])) * rho[i + 1];
  }
  return lambda;
}

ExpSum ExpSum::single(RateKey key, int degree, BigComplex coeff) {
  ExpSum s;
  s.add_term(key, degree, coeff);
  return s;
}

std::vector<ExpSumTerm> ExpSum::terms() const {
  std::vector<ExpSumTerm> out;
  out.reserve(terms_.size());
  for (const auto& [slot, coeff] : terms_) {
    out.push_back({slot.key, slot.degree, coeff});
  }
  return out;
}

void ExpSum::add_term(const RateKey& key, int degree, const BigComplex& coeff) {
  if (coeff.is_zero()) return;
  Slot slot{key, degree};
  auto it = terms_.find(slot);
  if (it == terms_.end()) {
    terms_.emplace(std::move(slot), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  for (const auto& [slot, coeff] : o.terms_) {
    add_term(slot.key, slot.degree, coeff);
  }
  return *this;
}

ExpSum operator+(const ExpSum& a, const ExpSum& b) {
  ExpSum r = a;
  r += b;
  return r;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  ExpSum r;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      r.add_term(sa.key + sb.key, sa.degree + sb.degree, ca * cb);
    }
  }
  return r;
}

ExpSum ExpSum::scaled(const BigReal& s) const {
  ExpSum r;
  for (const auto& [slot, coeff] : terms_) {
    r.add_term(slot.key, slot.degree, s * coeff);
  }
  return r;
}

bool ExpSum::conserves_wavenumber(int k) const {
  for (const auto& [slot, coeff] : terms_) {
    if (slot.key.weight() != k) return false;
  }
  return true;
}

int ExpSum::max_wavenumber() const {
  int m = 0;
  for (const auto& [slot, coeff] : terms_) {
    m = std::max(m, static_cast<int>(slot.key.mult.size()));
  }
  return m;
}

BigComplex ExpSum::evaluate(const BigReal& t,
                            const std::vector<BigReal>& rho) const {
  struct Evaluated {
    BigComplex value;
    BigReal magnitude;
  };
  std::vector<Evaluated> vals;
  vals.reserve(terms_.size());
  for (const auto& [slot, coeff] : terms_) {
    const BigReal lambda = rate_of(slot.key, rho);
    BigReal factor = exp(-(lambda * t));
    if (slot.degree > 0) factor *= pow(t, slot.degree);
    BigComplex v = factor * coeff;
    BigReal mag = v.magnitude();
    vals.push_back({std::move(v), std::move(mag)});
  }
  std::sort(vals.begin(), vals.end(),
            [](const Evaluated& a, const Evaluated& b) {
              return b.magnitude < a.magnitude;
            });
  BigComplex sum;
  for (const Evaluated& v : vals) sum += v.value;
  return sum;
}

ExpSum integrate_against_kernel(const ExpSum& f, int k,
                                const std::vector<BigReal>& rho,
                                const BigReal& eps_res) {
  if (k < 1 || static_cast<std::size_t>(k) >= rho.size()) {
    throw std::out_of_range("integrate_against_kernel: k outside rho table");
  }
  const BigReal& rho_k = rho[static_cast<std::size_t>(k)];
  const RateKey boundary_key = RateKey::single(k);
  ExpSum out;

  for (const ExpSumTerm& term : f.terms()) {
    const BigReal lambda = rate_of(term.key, rho);
    const BigReal delta = rho_k - lambda;
    const int m = term.degree;

    if (abs(delta) <= eps_res) {
      // Taylor-expand exp(delta*s) about the resonance; four terms push the
      // truncation error below the working precision because |delta*t| is at
      // most eps_res.  All output terms decay like exp(-rho_k * t).
      BigReal delta_pow(1L, lambda.precision_bits());
      long factorial = 1;
      for (int j = 0; j <= 3; ++j) {
        if (j > 0) {
          delta_pow *= delta;
          factorial *= j;
        }
        const BigReal denom =
            BigReal(factorial * static_cast<long>(m + j + 1));
        out.add_term(boundary_key, m + j + 1,
                     (delta_pow / denom) * term.coeff);
      }
      continue;
    }

    // integral_0^t s^m e^{delta*s} ds, integrated by parts m times, then
    // multiplied by e^{-rho_k*t}: the interior terms keep rate lambda, the
    // s=0 boundary contributes one term with rate rho_k.
    const BigReal inv_delta = BigReal(1L, delta.precision_bits()) / delta;
    BigReal falling(1L, lambda.precision_bits());  // m!/(m-j)!
    BigReal delta_pow = inv_delta;                 // delta^{-(j+1)}
    long sign = 1;
    for (int j = 0; j <= m; ++j) {
      if (j > 0) {
        falling *= BigReal(static_cast<long>(m - j + 1));
        delta_pow *= inv_delta;
        sign = -sign;
      }
      out.add_term(term.key, m - j,
                   (BigReal(sign) * falling * delta_pow) * term.coeff);
    }
    // After the loop: falling == m!, delta_pow == delta^{-(m+1)},
    // sign == (-1)^m; the boundary term carries (-1)^{m+1}.
    out.add_term(boundary_key, 0,
                 (BigReal(-sign) * falling * delta_pow) * term.coeff);
  }
  return out;
}

}  // namespace burgers
