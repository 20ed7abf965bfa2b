#pragma once

// Exact integer square matrices, used as an independent oracle for the power
// elementary polynomials: E^(i)(A^n) must equal Phat(E^(1)(A), ..., E^(d-1)(A))
// whenever det A = 1.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "powelem/poly.hpp"
#include "powelem/report.hpp"

namespace powelem {

class SqMatrix {
 public:
  /// The d x d zero matrix.
  explicit SqMatrix(int d);
  SqMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static SqMatrix identity(int d);

  int dimension() const noexcept { return d_; }
  Integer& at(int row, int col) { return entries_[index(row, col)]; }
  const Integer& at(int row, int col) const { return entries_[index(row, col)]; }

  Integer trace() const;
  /// Fraction-free Gaussian elimination (Bareiss).
  Integer determinant() const;

  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
  friend bool operator==(const SqMatrix& a, const SqMatrix& b) = default;

 private:
  std::size_t index(int row, int col) const;

  int d_;
  std::vector<Integer> entries_;
};

/// (E^(1)(A), ..., E^(d)(A)) where det(A + t Id) = sum_i E^(i)(A) t^(d-i),
/// computed by the Faddeev-LeVerrier recurrence (all divisions are exact).
std::vector<Integer> char_poly_coefficients(const SqMatrix& a);

/// A^n by repeated squaring. Requires n >= 1.
SqMatrix mat_pow(const SqMatrix& a, int n);

/// Product of `steps` transvections Id + c E_(r,s), r != s, c in {-2,-1,1,2}.
/// Deterministic in `seed` (std::mt19937_64 with modular reduction, so the
/// sequence does not depend on the standard library's distributions).
SqMatrix random_sl_matrix(int d, std::uint64_t seed, int steps);

/// E^(i)(A^n) == Phat_d^(n,i)(E^(1)(A), ..., E^(d-1)(A)). Throws
/// std::invalid_argument if det A != 1 or the indices are out of range.
VerificationReport verify_on_matrix(const SqMatrix& a, int n, int i);

}  // namespace powelem
