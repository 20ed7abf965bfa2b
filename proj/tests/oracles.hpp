#pragma once

// Independent reference computations used only by the tests. None of these go
// through the code paths they are used to check.

#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "powelem/matrix.hpp"
#include "powelem/poly.hpp"
#include "powelem/qarith.hpp"

namespace powelem::oracle {

/// E^(n,i) in Z[lambda1..lambdad] by bitmask enumeration of i-subsets.
inline Polynomial power_elementary_by_bitmask(const Ring& lambda, int d, int n, int i) {
  std::vector<Term> terms;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) != i) {
      continue;
    }
    ExponentVector e(static_cast<std::size_t>(d), 0);
    for (int k = 0; k < d; ++k) {
      if (mask & (1u << k)) {
        e[static_cast<std::size_t>(k)] = n;
      }
    }
    terms.push_back(Term{e, 1});
  }
  return Polynomial(lambda, terms);
}

inline Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Power sums p_k in Z[e1..ed] by Newton's identities:
///   p_k = sum_(j=1)^(min(k-1,d)) (-1)^(j-1) e_j p_(k-j) + [k <= d] (-1)^(k-1) k e_k.
inline std::vector<Polynomial> newton_power_sums(const Ring& e_ring, int d, int max_k) {
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(e_ring, d));
  for (int k = 1; k <= max_k; ++k) {
    Polynomial value(e_ring);
    for (int j = 1; j <= std::min(k - 1, d); ++j) {
      Polynomial term = Polynomial::variable(e_ring, static_cast<std::size_t>(j - 1)) *
                        p[static_cast<std::size_t>(k - j)];
      value += (j % 2 == 1) ? term : -term;
    }
    if (k <= d) {
      Polynomial top = Polynomial::variable(e_ring, static_cast<std::size_t>(k - 1)) * Integer(k);
      value += (k % 2 == 1) ? top : -top;
    }
    p.push_back(value);
  }
  return p;
}

/// det(A + t Id) by Laplace expansion over Z[t]; returns coefficients of
/// t^(d-1), ..., t^0.
inline std::vector<Integer> char_poly_by_laplace(const SqMatrix& a) {
  const int d = a.dimension();
  const Ring ring = make_ring({"t"});
  std::vector<std::vector<Polynomial>> m;
  for (int r = 0; r < d; ++r) {
    std::vector<Polynomial> row;
    for (int c = 0; c < d; ++c) {
      Polynomial entry = Polynomial::constant(ring, a.at(r, c));
      if (r == c) {
        entry += Polynomial::variable(ring, 0);
      }
      row.push_back(entry);
    }
    m.push_back(row);
  }
  std::function<Polynomial(std::vector<int>, int)> det = [&](std::vector<int> cols, int row) {
    if (cols.empty()) {
      return Polynomial::constant(ring, 1);
    }
    Polynomial total(ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial term = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[k])] * det(rest, row + 1);
      total += (k % 2 == 0) ? term : -term;
    }
    return total;
  };
  std::vector<int> all(static_cast<std::size_t>(d));
  std::iota(all.begin(), all.end(), 0);
  const Polynomial p = det(all, 0);
  std::vector<Integer> out;
  for (int k = d - 1; k >= 0; --k) {
    out.push_back(p.coefficient({k}));
  }
  return out;
}

inline SqMatrix naive_power(const SqMatrix& a, int n) {
  SqMatrix r = a;
  for (int k = 1; k < n; ++k) {
    r = r * a;
  }
  return r;
}

inline int totient_by_gcd(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    count += std::gcd(k, n) == 1 ? 1 : 0;
  }
  return count;
}

/// zeta^k by k repeated multiplications by zeta.
inline CyclotomicInteger zeta_power_by_steps(int order, long k) {
  const auto zeta = CyclotomicInteger::root_power(order, 1);
  auto r = CyclotomicInteger::from_integer(order, 1);
  for (long s = 0; s < k; ++s) {
    r = r * zeta;
  }
  return r;
}

/// Parses a display such as "e_1^6-6 e_1^4 e_2+9 e_1^2 e_2^2" into Z[e1..ed].
inline Polynomial parse_display(const std::string& display, const Ring& e_ring) {
  static const std::regex term_re(R"(([+-]?)\s*(\d*)\s*((?:e_\d(?:\^\d+)?\s*)+))");
  static const std::regex factor_re(R"(e_(\d)(?:\^(\d+))?)");
  std::vector<Term> terms;
  for (auto it = std::sregex_iterator(display.begin(), display.end(), term_re); it != std::sregex_iterator();
       ++it) {
    Term t{ExponentVector(e_ring->size(), 0), 1};
    if (!(*it)[2].str().empty()) {
      t.coeff = Integer((*it)[2].str());
    }
    if ((*it)[1].str() == "-") {
      t.coeff = -t.coeff;
    }
    const std::string factors = (*it)[3].str();
    for (auto f = std::sregex_iterator(factors.begin(), factors.end(), factor_re); f != std::sregex_iterator();
         ++f) {
      const int var = std::stoi((*f)[1].str());
      const int power = (*f)[2].str().empty() ? 1 : std::stoi((*f)[2].str());
      t.exponents[static_cast<std::size_t>(var - 1)] += power;
    }
    terms.push_back(t);
  }
  return Polynomial(e_ring, terms);
}

/// The four displayed P_4^(6,i), i = 1..4, verbatim.
inline const std::vector<std::string>& published_p46() {
  static const std::vector<std::string> displays{
      "e_1^6-6 e_1^4 e_2+9 e_1^2 e_2^2-2 e_2^3+6 e_1^3 e_3-12 e_1 e_2 e_3+3 e_3^2-6 e_1^2 e_4+6 e_2 e_4",
      "e_2^6-6 e_1 e_2^4 e_3+9 e_1^2 e_2^2 e_3^2+6 e_2^3 e_3^2-2 e_1^3 e_3^3-12 e_1 e_2 e_3^3+3 e_3^4+6 "
      "e_1^2 e_2^3 e_4-6 e_2^4 e_4 -12 e_1^3 e_2 e_3 e_4+18 e_1^2 e_3^2 e_4+3 e_1^4 e_4^2+9 e_2^2 "
      "e_4^2-18 e_1 e_3 e_4^2+2 e_4^3",
      "e_3^6-6 e_2 e_3^4 e_4+9 e_2^2 e_3^2 e_4^2+6 e_1 e_3^3 e_4^2-2 e_2^3 e_4^3-12 e_1 e_2 e_3 e_4^3-6 "
      "e_3^2 e_4^3+3 e_1^2 e_4^4+6 e_2 e_4^4",
      "e_4^6",
  };
  return displays;
}

/// Random polynomial with up to `max_terms` terms, exponents in [lo, hi]
/// (clamped at 0 on non-invertible variables), |coeff| <= max_coeff.
inline Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_terms, int lo, int hi,
                                    int max_coeff) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<Term> terms;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    ExponentVector e(ring->size());
    for (std::size_t v = 0; v < e.size(); ++v) {
      e[v] = exp(rng);
      if (!ring->invertible(v) && e[v] < 0) {
        e[v] = -e[v];
      }
    }
    terms.push_back(Term{e, coeff(rng)});
  }
  return Polynomial(ring, terms);
}

}  // namespace powelem::oracle
