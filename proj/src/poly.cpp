#include "powelem/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace powelem {

RingSignature::RingSignature(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
  if (invertible_.empty()) {
    invertible_.assign(names_.size(), false);
  }
  if (invertible_.size() != names_.size()) {
    throw std::invalid_argument("ring signature: one invertibility flag per variable required");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw std::invalid_argument("ring signature: empty variable name");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("ring signature: duplicate variable name '" + name + "'");
    }
  }
}

std::optional<std::size_t> RingSignature::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) {
      return k;
    }
  }
  return std::nullopt;
}

bool RingSignature::conforms(const ExponentVector& exponents) const {
  if (exponents.size() != names_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0 && !invertible_[k]) {
      return false;
    }
  }
  return true;
}

Ring make_ring(std::vector<std::string> names, std::vector<bool> invertible) {
  return std::make_shared<const RingSignature>(std::move(names), std::move(invertible));
}

Ring indexed_ring(std::string_view prefix, int count) {
  if (count < 0) {
    throw std::invalid_argument("indexed_ring: negative variable count");
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    names.push_back(std::string(prefix) + std::to_string(k));
  }
  return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

int grlex_compare(const ExponentVector& a, const ExponentVector& b) {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) {
    return da < db ? -1 : 1;
  }
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) {
      return a[k] < b[k] ? -1 : 1;
    }
  }
  if (a.size() != b.size()) {
    return a.size() < b.size() ? -1 : 1;
  }
  return 0;
}

std::size_t ExponentHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(e));
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

using Accumulator = std::unordered_map<ExponentVector, Integer, ExponentHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exps, coeff] : acc) {
    if (coeff != 0) {
      out.push_back(Term{exps, std::move(coeff)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.exponents, y.exponents) > 0; });
  return out;
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r[k] = a[k] + b[k];
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) {
    throw std::invalid_argument("polynomial: null ring");
  }
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
  for (const auto& t : terms) {
    if (!ring_->conforms(t.exponents)) {
      throw std::invalid_argument("polynomial: exponent vector does not conform to ring signature");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.exponents, y.exponents) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponents == t.exponents) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) {
        terms_.pop_back();
      }
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(Ring ring, const Integer& value) {
  const std::size_t n = ring->size();
  return Polynomial(std::move(ring), {Term{ExponentVector(n, 0), value}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, int exponent) {
  if (index >= ring->size()) {
    throw std::out_of_range("polynomial: variable index out of range");
  }
  ExponentVector exps(ring->size(), 0);
  exps[index] = exponent;
  return Polynomial(std::move(ring), {Term{std::move(exps), 1}});
}

Polynomial Polynomial::monomial(Ring ring, ExponentVector exponents, const Integer& coeff) {
  return Polynomial(std::move(ring), {Term{std::move(exponents), coeff}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) {
    throw std::domain_error("leading term of the zero polynomial");
  }
  return terms_.front();
}

Integer Polynomial::coefficient(const ExponentVector& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const ExponentVector& e) {
                               return grlex_compare(t.exponents, e) > 0;
                             });
  if (it != terms_.end() && it->exponents == exponents) {
    return it->coeff;
  }
  return 0;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) {
    return 0;
  }
  const auto& e = terms_.front().exponents;
  return std::accumulate(e.begin(), e.end(), 0);
}

void Polynomial::require_same_ring(const Polynomial& other, const char* op) const {
  if (!same_ring(ring_, other.ring_)) {
    throw std::invalid_argument(std::string("polynomial ") + op + ": ring signature mismatch");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff = -t.coeff;
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other, "add");
  if (this == &other) {
    return *this *= Integer(2);
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c;
    if (a == terms_.end()) {
      c = -1;
    } else if (b == other.terms_.end()) {
      c = 1;
    } else {
      c = grlex_compare(a->exponents, b->exponents);
    }
    if (c > 0) {
      merged.push_back(std::move(*a++));
    } else if (c < 0) {
      merged.push_back(*b++);
    } else {
      Integer sum = a->coeff + b->coeff;
      if (sum != 0) {
        merged.push_back(Term{std::move(a->exponents), std::move(sum)});
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "mul");
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) {
    return r;
  }
  // Multiplying by a single term is a translation in exponent space, which
  // preserves graded-lex order.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Polynomial& single = a.terms_.size() == 1 ? a : b;
    const Polynomial& other = a.terms_.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      r.terms_.push_back(Term{add_exponents(s.exponents, t.exponents), s.coeff * t.coeff});
    }
    return r;
  }
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Integer& slot = acc[add_exponents(x.exponents, y.exponents)];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  r.terms_ = drain(acc);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coeff *= scalar;
  }
  return *this;
}

Polynomial Polynomial::pow(long k) const {
  if (k < 0) {
    auto inv = monomial_inverse(*this);
    if (!inv) {
      throw std::domain_error("negative power of a non-unit polynomial");
    }
    return inv->pow(-k);
  }
  Polynomial result = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) {
      result *= base;
    }
    k >>= 1;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::optional<Polynomial> monomial_inverse(const Polynomial& p) {
  if (p.term_count() != 1) {
    return std::nullopt;
  }
  const Term& t = p.terms().front();
  if (t.coeff != 1 && t.coeff != -1) {
    return std::nullopt;
  }
  ExponentVector inv(t.exponents.size());
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (t.exponents[k] != 0 && !p.signature().invertible(k)) {
      return std::nullopt;
    }
    inv[k] = -t.exponents[k];
  }
  return Polynomial::monomial(p.ring(), std::move(inv), t.coeff);
}

namespace {

// Recursive Horner evaluation: the terms are grouped by the exponent of one
// variable at a time, so the work is dominated by multiplications by the
// (usually small) images rather than by products of large powers.
template <class Value, class Ops>
Value horner(std::vector<const Term*>& terms, std::size_t begin, std::size_t end, std::size_t var,
             Ops& ops) {
  if (var == ops.variable_count()) {
    Integer sum = 0;
    for (std::size_t k = begin; k < end; ++k) {
      sum += terms[k]->coeff;
    }
    return ops.constant(sum);
  }
  std::stable_sort(terms.begin() + static_cast<std::ptrdiff_t>(begin),
                   terms.begin() + static_cast<std::ptrdiff_t>(end),
                   [var](const Term* x, const Term* y) { return x->exponents[var] > y->exponents[var]; });
  std::optional<Value> acc;
  int previous = 0;
  std::size_t k = begin;
  while (k < end) {
    const int e = terms[k]->exponents[var];
    std::size_t stop = k;
    while (stop < end && terms[stop]->exponents[var] == e) {
      ++stop;
    }
    Value inner = horner<Value>(terms, k, stop, var + 1, ops);
    if (acc) {
      *acc = ops.add(ops.mul(*acc, ops.power(var, previous - e)), inner);
    } else {
      acc = std::move(inner);
    }
    previous = e;
    k = stop;
  }
  if (previous != 0) {
    *acc = ops.mul(*acc, ops.power(var, previous));
  }
  return std::move(*acc);
}

class PolynomialOps {
 public:
  PolynomialOps(std::span<const Polynomial> images, std::span<const std::optional<Polynomial>> inverses,
                const Ring& target)
      : images_(images), target_(target), cache_(images.size()) {
    inverses_.resize(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (k < inverses.size() && inverses[k]) {
        if (!same_ring(inverses[k]->ring(), target)) {
          throw std::invalid_argument("substitute: inverse image lives in the wrong ring");
        }
        if (*inverses[k] * images[k] != Polynomial::constant(target, 1)) {
          throw std::invalid_argument("substitute: supplied inverse is not an inverse");
        }
        inverses_[k] = inverses[k];
      } else {
        inverses_[k] = monomial_inverse(images[k]);
      }
    }
  }

  std::size_t variable_count() const { return images_.size(); }
  Polynomial constant(const Integer& c) const { return Polynomial::constant(target_, c); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }

  const Polynomial& power(std::size_t var, int e) {
    auto& slot = cache_[var];
    if (auto it = slot.find(e); it != slot.end()) {
      return it->second;
    }
    Polynomial value(target_);
    if (e >= 0) {
      value = images_[var].pow(e);
    } else {
      if (!inverses_[var]) {
        throw std::domain_error("substitute: negative power of a non-invertible image");
      }
      value = inverses_[var]->pow(-e);
    }
    return slot.emplace(e, std::move(value)).first->second;
  }

 private:
  std::span<const Polynomial> images_;
  Ring target_;
  std::vector<std::optional<Polynomial>> inverses_;
  std::vector<std::map<int, Polynomial>> cache_;
};

class IntegerOps {
 public:
  explicit IntegerOps(std::span<const Integer> values) : values_(values) {}

  std::size_t variable_count() const { return values_.size(); }
  Integer constant(const Integer& c) const { return c; }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }

  Integer power(std::size_t var, int e) const {
    const Integer& v = values_[var];
    if (e < 0) {
      if (v != 1 && v != -1) {
        throw std::domain_error("evaluate: negative power of a non-unit value");
      }
      e = -e;
    }
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  }

 private:
  std::span<const Integer> values_;
};

}  // namespace

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const Ring& target,
                      std::span<const std::optional<Polynomial>> inverses) {
  if (images.size() != p.signature().size()) {
    throw std::invalid_argument("substitute: need exactly one image per variable");
  }
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) {
      throw std::invalid_argument("substitute: images must share the target ring");
    }
  }
  if (p.is_zero()) {
    return Polynomial(target);
  }
  PolynomialOps ops(images, inverses, target);
  std::vector<const Term*> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    terms.push_back(&t);
  }
  return horner<Polynomial>(terms, 0, terms.size(), 0, ops);
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const Ring& target) {
  std::vector<Polynomial> ordered;
  ordered.reserve(p.signature().size());
  for (const auto& name : p.signature().names()) {
    auto it = images.find(name);
    if (it == images.end()) {
      throw std::invalid_argument("substitute: missing image for variable '" + name + "'");
    }
    ordered.push_back(it->second);
  }
  return substitute(p, ordered, target);
}

Integer evaluate(const Polynomial& p, std::span<const Integer> values) {
  if (values.size() != p.signature().size()) {
    throw std::invalid_argument("evaluate: need exactly one value per variable");
  }
  if (p.is_zero()) {
    return 0;
  }
  IntegerOps ops(values);
  std::vector<const Term*> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    terms.push_back(&t);
  }
  return horner<Integer>(terms, 0, terms.size(), 0, ops);
}

Polynomial change_ring(const Polynomial& p, const Ring& target) {
  const auto& src = p.signature();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    map[k] = target->index_of(src.name(k));
  }
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    ExponentVector e(target->size(), 0);
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (t.exponents[k] == 0) {
        continue;
      }
      if (!map[k]) {
        throw std::invalid_argument("change_ring: variable '" + src.name(k) + "' missing from target");
      }
      e[*map[k]] = t.exponents[k];
    }
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace powelem
