#pragma once

// Quantum integers and binomials as Laurent polynomials in q, and exact
// arithmetic in Z[zeta_N] = Z[x] / Phi_N(x).

#include <vector>

#include "powelem/poly.hpp"
#include "powelem/report.hpp"

namespace powelem {

/// N-th cyclotomic polynomial as a polynomial in Z[x]. Memoized.
Polynomial cyclotomic_poly(int order);

/// Dense coefficients of Phi_N, constant term first. Memoized.
const std::vector<Integer>& cyclotomic_coefficients(int order);

/// Euler's totient, i.e. the degree of Phi_N.
int euler_phi(int order);

/// Element of Z[zeta_N], stored as its unique residue modulo Phi_N in the
/// power basis 1, zeta, ..., zeta^(phi(N)-1).
class CyclotomicInteger {
 public:
  static CyclotomicInteger from_integer(int order, const Integer& value);
  /// zeta^k for any integer k.
  static CyclotomicInteger root_power(int order, long k);
  /// Reduces an arbitrary dense polynomial in zeta (constant term first).
  static CyclotomicInteger reduce(int order, std::vector<Integer> coefficients);

  int order() const noexcept { return order_; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator*(CyclotomicInteger a, const Integer& s);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

  CyclotomicInteger pow(unsigned long k) const;

 private:
  CyclotomicInteger(int order, std::vector<Integer> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void require_same_order(const CyclotomicInteger& other) const;

  int order_;
  std::vector<Integer> coeffs_;
};

/// Z[q^+-1].
Ring q_ring();

/// Quantum integer [i] = q^(i-1) + q^(i-3) + ... + q^(1-i); [0] = 0.
Polynomial qint(int i);

/// [i]! = [1][2]...[i]; [0]! = 1.
Polynomial qfactorial(int i);

/// [i]! / ([j]! [i-j]!), by iterated exact Laurent division.
Polynomial qbinom(int i, int j);

/// Exact quotient a / b of univariate Laurent polynomials. Throws
/// std::domain_error if b is zero or does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Specializes q -> zeta_N^k in a univariate Laurent polynomial.
CyclotomicInteger eval_at_root(const Polynomial& f, int order, long k);

struct HypothesisReport {
  /// q^(2n/d) = 1, i.e. zeta^(2n) = 1.
  bool cond_a = false;
  /// Those i in [2, d/2] with q^(2i) = zeta^(2di) = 1.
  std::vector<int> violations;

  bool operator==(const HypothesisReport&) const = default;
};

/// Root-of-unity hypotheses for centrality, with zeta = q^(1/d) of exact order N,
/// decided by divisibility.
HypothesisReport hypothesis_check(int d, int n, int order);

/// The same hypotheses decided by computing the relevant powers of zeta in
/// Z[zeta_N] and comparing with 1.
HypothesisReport hypothesis_check_by_powers(int d, int n, int order);

/// Passes iff the divisibility and power computations agree.
VerificationReport verify_hypothesis(int d, int n, int order);

}  // namespace powelem
