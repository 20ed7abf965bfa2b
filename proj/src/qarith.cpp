#include "powelem/qarith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace powelem {

namespace {

using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

// Quotient of a by a monic divisor; the remainder must vanish.
Dense divide_monic_exact(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    trim(a);
    if (!a.empty()) {
      throw std::logic_error("cyclotomic: inexact division");
    }
    return {};
  }
  Dense q(a.size() - db, Integer(0));
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) {
      continue;
    }
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      a[k - db + j] -= c * b[j];
    }
  }
  trim(a);
  if (!a.empty()) {
    throw std::logic_error("cyclotomic: inexact division");
  }
  return q;
}

class CyclotomicCache {
 public:
  const Dense& get(int order) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(order); it != cache_.end()) {
        return it->second;
      }
    }
    // x^N - 1 divided by Phi_m for every proper divisor m of N.
    Dense value(static_cast<std::size_t>(order) + 1, Integer(0));
    value.front() = -1;
    value.back() = 1;
    for (int m = 1; m < order; ++m) {
      if (order % m == 0) {
        value = divide_monic_exact(std::move(value), get(m));
      }
    }
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(order, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, Dense> cache_;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache instance;
  return instance;
}

void check_order(int order) {
  if (order < 1) {
    throw std::invalid_argument("root of unity order must be at least 1");
  }
}

long mod_floor(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Dense form of a univariate Laurent polynomial: coefficient of x^(low + k)
// at position k.
struct ShiftedDense {
  long low = 0;
  Dense coeffs;
};

ShiftedDense to_shifted(const Polynomial& p) {
  if (p.signature().size() != 1) {
    throw std::invalid_argument("expected a univariate polynomial");
  }
  ShiftedDense out;
  if (p.is_zero()) {
    return out;
  }
  long low = p.terms().front().exponents[0];
  long high = low;
  for (const auto& t : p.terms()) {
    low = std::min<long>(low, t.exponents[0]);
    high = std::max<long>(high, t.exponents[0]);
  }
  out.low = low;
  out.coeffs.assign(static_cast<std::size_t>(high - low + 1), Integer(0));
  for (const auto& t : p.terms()) {
    out.coeffs[static_cast<std::size_t>(t.exponents[0] - low)] = t.coeff;
  }
  return out;
}

}  // namespace

const std::vector<Integer>& cyclotomic_coefficients(int order) {
  check_order(order);
  return cyclotomic_cache().get(order);
}

Polynomial cyclotomic_poly(int order) {
  static const Ring ring = make_ring({"x"});
  const Dense& c = cyclotomic_coefficients(order);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    terms.push_back(Term{{static_cast<int>(k)}, c[k]});
  }
  return Polynomial(ring, std::move(terms));
}

int euler_phi(int order) {
  check_order(order);
  int result = order;
  int m = order;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) {
        m /= p;
      }
      result -= result / p;
    }
  }
  if (m > 1) {
    result -= result / m;
  }
  return result;
}

CyclotomicInteger CyclotomicInteger::reduce(int order, std::vector<Integer> coefficients) {
  const Dense& phi = cyclotomic_coefficients(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coefficients.size(); k-- > deg;) {
    const Integer c = coefficients[k];
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= deg; ++j) {
      coefficients[k - deg + j] -= c * phi[j];
    }
  }
  coefficients.resize(deg, Integer(0));
  return CyclotomicInteger(order, std::move(coefficients));
}

CyclotomicInteger CyclotomicInteger::from_integer(int order, const Integer& value) {
  return reduce(order, {value});
}

CyclotomicInteger CyclotomicInteger::root_power(int order, long k) {
  check_order(order);
  Dense c(static_cast<std::size_t>(mod_floor(k, order)) + 1, Integer(0));
  c.back() = 1;
  return reduce(order, std::move(c));
}

bool CyclotomicInteger::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

void CyclotomicInteger::require_same_order(const CyclotomicInteger& other) const {
  if (order_ != other.order_) {
    throw std::invalid_argument("cyclotomic integers of different orders");
  }
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] -= other.coeffs_[k];
  }
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_same_order(b);
  Dense product(a.coeffs_.size() + b.coeffs_.size(), Integer(0));
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    if (a.coeffs_[x] == 0) {
      continue;
    }
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y) {
      mpz_addmul(product[x + y].get_mpz_t(), a.coeffs_[x].get_mpz_t(), b.coeffs_[y].get_mpz_t());
    }
  }
  return CyclotomicInteger::reduce(a.order_, std::move(product));
}

CyclotomicInteger operator*(CyclotomicInteger a, const Integer& s) {
  for (auto& c : a.coeffs_) {
    c *= s;
  }
  return a;
}

CyclotomicInteger CyclotomicInteger::pow(unsigned long k) const {
  CyclotomicInteger result = from_integer(order_, 1);
  CyclotomicInteger base = *this;
  while (k > 0) {
    if (k & 1) {
      result = result * base;
    }
    k >>= 1;
    if (k > 0) {
      base = base * base;
    }
  }
  return result;
}

Ring q_ring() {
  static const Ring ring = make_ring({"q"}, {true});
  return ring;
}

Polynomial qint(int i) {
  if (i < 0) {
    throw std::invalid_argument("qint: i must be nonnegative");
  }
  std::vector<Term> terms;
  for (int e = i - 1; e >= 1 - i; e -= 2) {
    terms.push_back(Term{{e}, 1});
  }
  return Polynomial(q_ring(), std::move(terms));
}

Polynomial qfactorial(int i) {
  if (i < 0) {
    throw std::invalid_argument("qfactorial: i must be nonnegative");
  }
  Polynomial result = Polynomial::constant(q_ring(), 1);
  for (int k = 2; k <= i; ++k) {
    result *= qint(k);
  }
  return result;
}

Polynomial qbinom(int i, int j) {
  if (j < 0 || j > i) {
    throw std::invalid_argument("qbinom: need 0 <= j <= i");
  }
  Polynomial result = qfactorial(i);
  for (int k = 2; k <= j; ++k) {
    result = exact_divide(result, qint(k));
  }
  for (int k = 2; k <= i - j; ++k) {
    result = exact_divide(result, qint(k));
  }
  return result;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("exact_divide: ring mismatch");
  }
  if (b.is_zero()) {
    throw std::domain_error("exact_divide: division by zero");
  }
  if (a.is_zero()) {
    return a;
  }
  ShiftedDense num = to_shifted(a);
  const ShiftedDense den = to_shifted(b);
  const std::size_t db = den.coeffs.size() - 1;
  const Integer& lead = den.coeffs.back();
  if (num.coeffs.size() < den.coeffs.size()) {
    throw std::domain_error("exact_divide: inexact division");
  }
  Dense quotient(num.coeffs.size() - db, Integer(0));
  for (std::size_t k = num.coeffs.size(); k-- > db;) {
    const Integer& c = num.coeffs[k];
    if (c == 0) {
      continue;
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("exact_divide: inexact division");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      num.coeffs[k - db + j] -= q * den.coeffs[j];
    }
    quotient[k - db] = std::move(q);
  }
  for (const auto& c : num.coeffs) {
    if (c != 0) {
      throw std::domain_error("exact_divide: inexact division");
    }
  }
  std::vector<Term> terms;
  const long shift = num.low - den.low;
  for (std::size_t k = 0; k < quotient.size(); ++k) {
    terms.push_back(Term{{static_cast<int>(shift + static_cast<long>(k))}, quotient[k]});
  }
  return Polynomial(a.ring(), std::move(terms));
}

CyclotomicInteger eval_at_root(const Polynomial& f, int order, long k) {
  if (f.signature().size() != 1) {
    throw std::invalid_argument("eval_at_root: expected a univariate polynomial");
  }
  check_order(order);
  Dense acc(static_cast<std::size_t>(order), Integer(0));
  for (const auto& t : f.terms()) {
    acc[static_cast<std::size_t>(mod_floor(k * t.exponents[0], order))] += t.coeff;
  }
  return CyclotomicInteger::reduce(order, std::move(acc));
}

HypothesisReport hypothesis_check(int d, int n, int order) {
  if (d < 2 || n < 1) {
    throw std::invalid_argument("hypothesis_check: need d >= 2 and n >= 1");
  }
  check_order(order);
  HypothesisReport r;
  r.cond_a = (2 * n) % order == 0;
  for (int i = 2; i <= d / 2; ++i) {
    if ((2 * d * i) % order == 0) {
      r.violations.push_back(i);
    }
  }
  return r;
}

HypothesisReport hypothesis_check_by_powers(int d, int n, int order) {
  if (d < 2 || n < 1) {
    throw std::invalid_argument("hypothesis_check: need d >= 2 and n >= 1");
  }
  const auto zeta = CyclotomicInteger::root_power(order, 1);
  const auto one = CyclotomicInteger::from_integer(order, 1);
  HypothesisReport r;
  r.cond_a = zeta.pow(2UL * static_cast<unsigned long>(n)) == one;
  const auto q = zeta.pow(static_cast<unsigned long>(d));
  for (int i = 2; i <= d / 2; ++i) {
    if (q.pow(2UL * static_cast<unsigned long>(i)) == one) {
      r.violations.push_back(i);
    }
  }
  return r;
}

VerificationReport verify_hypothesis(int d, int n, int order) {
  VerificationReport report{.check = "hypothesis", .case_tuple = CaseTuple{d, n, 0, order}};
  run_timed(report, [&] {
    const HypothesisReport divisibility = hypothesis_check(d, n, order);
    const HypothesisReport powers = hypothesis_check_by_powers(d, n, order);
    report.passed = divisibility == powers;
    report.details = {{"cond_a", divisibility.cond_a}, {"violations", divisibility.violations}};
    if (!report.passed) {
      report.witness = "divisibility and cyclotomic powers disagree";
    }
  });
  return report;
}

}  // namespace powelem
