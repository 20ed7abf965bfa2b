#include "powelem/matrix.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "powelem/power_poly.hpp"

namespace powelem {

SqMatrix::SqMatrix(int d) : d_(d) {
  if (d < 1) {
    throw std::invalid_argument("matrix dimension must be at least 1");
  }
  entries_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), Integer(0));
}

SqMatrix::SqMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : SqMatrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d_) {
      throw std::invalid_argument("matrix rows must all have length d");
    }
    int c = 0;
    for (long v : row) {
      at(r, c++) = v;
    }
    ++r;
  }
}

SqMatrix SqMatrix::identity(int d) {
  SqMatrix m(d);
  for (int k = 0; k < d; ++k) {
    m.at(k, k) = 1;
  }
  return m;
}

std::size_t SqMatrix::index(int row, int col) const {
  if (row < 0 || row >= d_ || col < 0 || col >= d_) {
    throw std::out_of_range("matrix index out of range");
  }
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(col);
}

Integer SqMatrix::trace() const {
  Integer t = 0;
  for (int k = 0; k < d_; ++k) {
    t += at(k, k);
  }
  return t;
}

Integer SqMatrix::determinant() const {
  SqMatrix m = *this;
  Integer previous = 1;
  int sign = 1;
  for (int k = 0; k < d_ - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = k + 1;
      while (swap < d_ && m.at(swap, k) == 0) {
        ++swap;
      }
      if (swap == d_) {
        return 0;
      }
      for (int c = 0; c < d_; ++c) {
        std::swap(m.at(k, c), m.at(swap, c));
      }
      sign = -sign;
    }
    for (int r = k + 1; r < d_; ++r) {
      for (int c = k + 1; c < d_; ++c) {
        Integer v = m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m.at(r, c) = std::move(v);
      }
    }
    previous = m.at(k, k);
  }
  return sign * m.at(d_ - 1, d_ - 1);
}

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  if (a.d_ != b.d_) {
    throw std::invalid_argument("matrix dimensions differ");
  }
  SqMatrix r(a.d_);
  for (int i = 0; i < a.d_; ++i) {
    for (int k = 0; k < a.d_; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) {
        continue;
      }
      for (int j = 0; j < a.d_; ++j) {
        mpz_addmul(r.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
      }
    }
  }
  return r;
}

std::vector<Integer> char_poly_coefficients(const SqMatrix& a) {
  const int d = a.dimension();
  // c[k] is the coefficient of t^k in det(t Id - A).
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1, Integer(0));
  c[static_cast<std::size_t>(d)] = 1;
  SqMatrix m(d);
  for (int k = 1; k <= d; ++k) {
    m = a * m;
    for (int j = 0; j < d; ++j) {
      m.at(j, j) += c[static_cast<std::size_t>(d - k + 1)];
    }
    Integer t = (a * m).trace();
    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("Faddeev-LeVerrier: inexact division");
    }
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(d - k)] = -t;
  }
  std::vector<Integer> e(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    const Integer& v = c[static_cast<std::size_t>(d - i)];
    e[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? v : Integer(-v);
  }
  return e;
}

SqMatrix mat_pow(const SqMatrix& a, int n) {
  if (n < 1) {
    throw std::invalid_argument("mat_pow: n must be at least 1");
  }
  SqMatrix result = SqMatrix::identity(a.dimension());
  SqMatrix base = a;
  while (n > 0) {
    if (n & 1) {
      result = result * base;
    }
    n >>= 1;
    if (n > 0) {
      base = base * base;
    }
  }
  return result;
}

SqMatrix random_sl_matrix(int d, std::uint64_t seed, int steps) {
  if (d < 2) {
    throw std::invalid_argument("random_sl_matrix: d must be at least 2");
  }
  if (steps < 1) {
    throw std::invalid_argument("random_sl_matrix: steps must be at least 1");
  }
  static constexpr long kValues[] = {-2, -1, 1, 2};
  std::mt19937_64 rng(seed);
  const auto dd = static_cast<std::uint64_t>(d);
  SqMatrix m = SqMatrix::identity(d);
  for (int s = 0; s < steps; ++s) {
    const auto row = static_cast<int>(rng() % dd);
    auto col = static_cast<int>(rng() % (dd - 1));
    if (col >= row) {
      ++col;
    }
    const long value = kValues[rng() % 4];
    // Left-multiplying by Id + value*E(row,col) adds value * (row col) to row.
    for (int j = 0; j < d; ++j) {
      m.at(row, j) += value * m.at(col, j);
    }
  }
  return m;
}

VerificationReport verify_on_matrix(const SqMatrix& a, int n, int i) {
  const int d = a.dimension();
  if (d < 2 || n < 1 || i < 1 || i > d - 1) {
    throw std::invalid_argument("verify_on_matrix: need d >= 2, n >= 1 and 1 <= i <= d-1");
  }
  if (a.determinant() != 1) {
    throw std::invalid_argument("verify_on_matrix: determinant is not 1");
  }
  VerificationReport report{.check = "oracle", .case_tuple = CaseTuple{d, n, i, std::nullopt}};
  run_timed(report, [&] {
    const Integer lhs = char_poly_coefficients(mat_pow(a, n))[static_cast<std::size_t>(i - 1)];
    std::vector<Integer> values = char_poly_coefficients(a);
    values.pop_back();
    const Integer rhs = evaluate(reduced_power_elementary_poly({d, n, i}), values);
    report.passed = lhs == rhs;
    if (!report.passed) {
      report.witness = "E(A^n)=" + lhs.get_str() + " Phat(E(A))=" + rhs.get_str();
    }
  });
  return report;
}

}  // namespace powelem
