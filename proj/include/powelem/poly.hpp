#pragma once

// Sparse multivariate (Laurent) polynomials with arbitrary-precision integer
// coefficients.
//
// A Polynomial lives in a ring described by a RingSignature: an ordered list
// of variable names, each flagged invertible or not. Only invertible variables
// may carry negative exponents. Terms are kept in canonical form: no zero
// coefficients, no repeated exponent vectors, sorted by graded-lexicographic
// order, largest first.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace powelem {

using Integer = mpz_class;
using ExponentVector = std::vector<int>;

class RingSignature {
 public:
  RingSignature(std::vector<std::string> names, std::vector<bool> invertible);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  bool invertible(std::size_t index) const { return invertible_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<bool>& invertible_flags() const noexcept { return invertible_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// True iff `exponents` has the right length and negative entries only on
  /// invertible variables.
  bool conforms(const ExponentVector& exponents) const;

  bool operator==(const RingSignature&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
};

using Ring = std::shared_ptr<const RingSignature>;

/// An omitted `invertible` vector means no variable is invertible.
Ring make_ring(std::vector<std::string> names, std::vector<bool> invertible = {});

/// Ring with variables prefix1, ..., prefixN, none invertible.
Ring indexed_ring(std::string_view prefix, int count);

bool same_ring(const Ring& a, const Ring& b);

/// Graded-lex comparison: total degree first, then lexicographic with the
/// first variable most significant. Returns <0, 0 or >0.
int grlex_compare(const ExponentVector& a, const ExponentVector& b);

struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlex_compare(a, b) > 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

struct Term {
  ExponentVector exponents;
  Integer coeff;

  bool operator==(const Term& other) const {
    return exponents == other.exponents && coeff == other.coeff;
  }
};

class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(Ring ring);

  /// Canonicalizes: merges repeated exponent vectors, drops zeros, sorts.
  /// Throws std::invalid_argument if an exponent vector does not conform.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Integer& value);
  static Polynomial variable(Ring ring, std::size_t index, int exponent = 1);
  static Polynomial monomial(Ring ring, ExponentVector exponents, const Integer& coeff = 1);

  const Ring& ring() const noexcept { return ring_; }
  const RingSignature& signature() const noexcept { return *ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest term in graded-lex order. Throws std::domain_error on zero.
  const Term& leading_term() const;

  Integer coefficient(const ExponentVector& exponents) const;

  /// Largest total degree of any term; 0 for the zero polynomial.
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  /// Negative `k` is allowed only for a single term with coefficient +-1 in
  /// invertible variables; otherwise throws std::domain_error.
  Polynomial pow(long k) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

  /// Equal iff the rings agree and the term lists are identical.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other, const char* op) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// A polynomial whose ring has at least one invertible variable. The two
/// share a representation; the ring signature carries the distinction.
using LaurentPolynomial = Polynomial;

/// Multiplicative inverse of a unit monomial (+-1 times invertible variables),
/// or nullopt if `p` is not such a unit.
std::optional<Polynomial> monomial_inverse(const Polynomial& p);

/// Ring homomorphism sending variable k of p's ring to images[k]. All images
/// must live in `target`. A variable that occurs with a negative exponent needs
/// an invertible image: either a unit monomial or an explicitly supplied
/// inverse in `inverses[k]`.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const Ring& target,
                      std::span<const std::optional<Polynomial>> inverses = {});

/// Same, with images keyed by variable name. Every variable needs an image.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const Ring& target);

/// Integer value at a point. Throws std::domain_error on negative exponents
/// unless the corresponding value is +-1.
Integer evaluate(const Polynomial& p, std::span<const Integer> values);

/// Re-express `p` in `target`, matching variables by name. Variables of p that
/// are absent from `target` must not occur in any term.
Polynomial change_ring(const Polynomial& p, const Ring& target);

}  // namespace powelem
