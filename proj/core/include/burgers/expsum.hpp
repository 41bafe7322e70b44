#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "burgers/bigreal.hpp"

namespace burgers {

// Multiset of positive wavenumbers, stored as multiplicities: mult[i] is the
// multiplicity of wavenumber i+1, with trailing zeros trimmed.  A key labels
// the decay rate lambda = sum_p mult(p) * rho(p); its weight sum_p p*mult(p)
// is conserved along the mode recursion (every key in mode k weighs k).
struct RateKey {
  std::vector<int> mult;

  static RateKey single(int k);
  int weight() const;
  int total_multiplicity() const;
  bool operator==(const RateKey& o) const { return mult == o.mult; }
  bool operator<(const RateKey& o) const { return mult < o.mult; }
};

RateKey operator+(const RateKey& a, const RateKey& b);

// lambda(key) = sum_p mult(p) * rho[p]; rho must cover indices up to the
// largest wavenumber present in the key.
BigReal rate_of(const RateKey& key, const std::vector<BigReal>& rho);

struct ExpSumTerm {
  RateKey key;
  int degree = 0;   // power of t
  BigComplex coeff;  // value = coeff * t^degree * exp(-lambda(key) * t)
};

// Thrown when a mode's representation outgrows the configured term budget.
struct TermCapError : std::runtime_error {
  int wavenumber;
  std::size_t term_count;
  TermCapError(int k, std::size_t n)
      : std::runtime_error("term budget exhausted while building mode " +
                           std::to_string(k) + " (" + std::to_string(n) +
                           " terms)"),
        wavenumber(k),
        term_count(n) {}
};

// Finite sum of terms coeff * t^m * exp(-lambda * t), kept in canonical form:
// one entry per (key, degree) pair, exact zeros dropped.  Closed under
// addition, multiplication, and integration against the mode-k kernel, which
// is what makes the half-space recursion exactly representable.
class ExpSum {
 public:
  ExpSum() = default;

  static ExpSum single(RateKey key, int degree, BigComplex coeff);

  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::vector<ExpSumTerm> terms() const;

  void add_term(const RateKey& key, int degree, const BigComplex& coeff);
  ExpSum& operator+=(const ExpSum& o);
  ExpSum scaled(const BigReal& s) const;

  // True when every key weighs exactly k.
  bool conserves_wavenumber(int k) const;

  // Largest wavenumber appearing in any key.
  int max_wavenumber() const;

  // Sum of the term values at time t, accumulated in descending order of
  // term magnitude so the small terms are not absorbed prematurely.
  BigComplex evaluate(const BigReal& t, const std::vector<BigReal>& rho) const;

 private:
  struct Slot {
    RateKey key;
    int degree;
    bool operator<(const Slot& o) const {
      if (degree != o.degree) return degree < o.degree;
      return key < o.key;
    }
  };
  std::map<Slot, BigComplex> terms_;

  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
};

ExpSum operator+(const ExpSum& a, const ExpSum& b);
ExpSum operator*(const ExpSum& a, const ExpSum& b);

// F(t) = integral_0^t exp(-(t-s)*rho[k]) * f(s) ds, term by term.  With
// Delta = rho[k] - lambda(term key):
//   |Delta| >  eps_res: exact antiderivative; the result keeps the term's
//                       key and adds one boundary term with key {k}.
//   |Delta| <= eps_res: 4-term Taylor expansion of exp(Delta*s) about the
//                       resonant point; all result terms carry key {k}.
//                       (Exact resonance Delta == 0, including the term's
//                       key being {k} itself, lands here automatically.)
ExpSum integrate_against_kernel(const ExpSum& f, int k,
                                const std::vector<BigReal>& rho,
                                const BigReal& eps_res);

}  // namespace burgers
