#pragma once

// Power elementary polynomials P_d^(n,i) in Z[e1..ed]: the unique polynomial
// with P(E^(1), ..., E^(d)) = E^(n,i), i.e. E^(i)(A^n) as a function of the
// characteristic coefficients of A. The reduced form specializes e_d = 1.

#include <compare>
#include <vector>

#include "powelem/poly.hpp"
#include "powelem/report.hpp"

namespace powelem {

struct PowerPolyKey {
  int d = 0;
  int n = 0;
  int i = 0;

  /// Throws std::invalid_argument unless d >= 1, n >= 1 and 0 <= i <= d.
  void validate() const;

  auto operator<=>(const PowerPolyKey&) const = default;
};

/// P_d^(n,i). Memoized in a process-wide insert-once cache; safe to call from
/// several threads. d = 1 is accepted so that P_(d-1) is available for d = 2.
Polynomial power_elementary_poly(const PowerPolyKey& key);

/// P_d^(n,i) with e_d = 1, as a polynomial over Z[e1..e(d-1)]. Needs d >= 2.
Polynomial reduced_power_elementary_poly(const PowerPolyKey& key);

/// Trace Chebyshev polynomial C_n in Z[e1]: C_0 = 2, C_1 = e1,
/// C_(n+1) = e1*C_n - C_(n-1). Satisfies C_n(t + 1/t) = t^n + t^-n.
Polynomial chebyshev_reference(int n);

/// P(E^(1), ..., E^(d)) == E^(n,i) in Z[lambda1..lambdad].
VerificationReport verify_defining_property(const PowerPolyKey& key);

/// P(theta e1, theta^2 e2, ..., theta^d ed) == theta^(ni) P in Z[theta, e1..ed].
VerificationReport verify_homogeneity(const PowerPolyKey& key);

/// Z[x1, ..., x(d-2), x(d-1)^+-1].
Ring main_identity_ring(int d);

/// y_1 = x(d-1)^-1 + x1 and y_j = x(j-1) x(d-1)^-1 + x_j for 2 <= j <= d-1.
std::vector<Polynomial> main_identity_arguments(int d);

/// Phat_d^(n,i)(y_1, ..., y_(d-1)).
Polynomial main_identity_lhs(int d, int n, int i);

/// x(d-1)^-n P_(d-1)^(n,i-1)(x) + P_(d-1)^(n,i)(x), with P_(d-1)^(n,0) = 1.
Polynomial main_identity_rhs(int d, int n, int i);

/// Exact Laurent equality of the two sides above, for 1 <= i <= d-1.
VerificationReport verify_main_identity(int d, int n, int i);

}  // namespace powelem
