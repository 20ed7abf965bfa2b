#pragma once

// Symmetric polynomials in lambda1..lambdad and their expression in the
// elementary symmetric basis e1..ed.

#include "powelem/poly.hpp"

namespace powelem {

/// Z[lambda1, ..., lambdad]. Rings are cached, so repeated calls return the
/// same object.
Ring lambda_ring(int d);

/// Z[e1, ..., ed].
Ring elementary_ring(int d);

/// Sum of all products of i distinct lambdas; i = 0 gives 1.
/// Throws std::invalid_argument unless d >= 1 and 0 <= i <= d.
Polynomial elementary_symmetric(int d, int i);

/// elementary_symmetric(d, i) with every lambda_j replaced by lambda_j^n.
Polynomial power_elementary_symmetric(int d, int n, int i);

/// Fixed by every adjacent transposition of variables.
bool is_symmetric(const Polynomial& p);

/// The unique Q in Z[e1..ed] with Q(E^(1), ..., E^(d)) = p, where d is the
/// number of variables of p. Throws std::invalid_argument if p is not a
/// symmetric polynomial (including negative exponents).
Polynomial to_elementary_basis(const Polynomial& p);

/// Substitutes e_j -> E^(j) into a polynomial over elementary_ring(d).
Polynomial from_elementary_basis(const Polynomial& q);

}  // namespace powelem
