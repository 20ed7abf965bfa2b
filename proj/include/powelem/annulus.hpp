#pragma once

// Commutative model of the subring of the annulus skein algebra (with one
// inward and one outward boundary point) generated by the twist T^+-1 and the
// elements X_1, ..., X_(d-2), under composition.
//
// Elements are Laurent polynomials in the ring Z[zeta^+-1, T^+-1, X1..X(d-2)],
// where zeta stands for q^(1/d): every fractional power q^(a/d) is zeta^a.
// Specializing zeta to a primitive N-th root of unity reduces the
// zeta-coefficient of each (T, X)-monomial modulo Phi_N.

#include <map>
#include <string>
#include <vector>

#include "powelem/poly.hpp"
#include "powelem/qarith.hpp"
#include "powelem/report.hpp"

namespace powelem {

enum class Side {
  left,   // L^[P] . I, built from L_j . I
  right,  // I . L^[P], built from I . L_j
};

/// Z[zeta^+-1, T^+-1, X1, ..., X(d-2)]; zeta is variable 0, T variable 1.
Ring annulus_ring(int d);

/// I . L_j for 1 <= j <= d-1:
///   j = 1:          zeta^(d-1) T - zeta^-1 X1
///   2 <= j <= d-2:  (-1)^(j-1) zeta^(d-j) X(j-1) T + (-1)^j zeta^-j Xj
///   j = d-1:        (-1)^(d-2) zeta X(d-2) T + zeta^(1-d) T^-1
/// with X0 = 1 (so for d = 2 the last branch gives zeta T + zeta^-1 T^-1).
Polynomial i_bullet_L(int d, int j);

/// L_j . I: the same formulas with zeta replaced by zeta^-1.
Polynomial L_bullet_i(int d, int j);

/// zeta -> zeta^-1.
Polynomial mirror(const Polynomial& element);

/// Images of x1, ..., x(d-1) under psi: x_j -> (-1)^j zeta^-j X_j for
/// j <= d-2 and x(d-1) -> zeta^(1-d) T^-1. With this sign of the zeta
/// exponent psi(y_j) = I . L_j holds identically; the opposite sign does not.
std::vector<Polynomial> psi_images(int d);

/// Ring homomorphism from Z[x1..x(d-2), x(d-1)^+-1] (main_identity_ring(d)).
Polynomial psi(const Polynomial& p);

/// Phat_d^(n,i) evaluated at (I . L_1, ..., I . L_(d-1)) for Side::right, or at
/// (L_1 . I, ..., L_(d-1) . I) for Side::left.
Polynomial thread_bullet_I(int d, int n, int i, Side side);

/// An annulus element with zeta specialized to a primitive N-th root of unity:
/// coefficients in Z[zeta_N] per (T, X) exponent vector, zeros dropped.
struct SpecializedElement {
  int order = 1;
  std::map<ExponentVector, CyclotomicInteger, GrlexGreater> coefficients;

  bool is_zero() const { return coefficients.empty(); }
};

SpecializedElement specialize(const Polynomial& element, int order);

/// Checks L^[Phat] . I == I . L^[Phat] at zeta of exact order N: passes iff the
/// generic difference vanishes modulo Phi_N. Details record whether the
/// generic difference is nonzero and the psi convention in force.
VerificationReport verify_prop_power_times_I(int d, int n, int i, int order);

}  // namespace powelem
