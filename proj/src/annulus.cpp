#include "powelem/annulus.hpp"

#include <mutex>
#include <stdexcept>

#include "powelem/poly_io.hpp"
#include "powelem/power_poly.hpp"

namespace powelem {

namespace {

constexpr std::size_t kZeta = 0;
constexpr std::size_t kTwist = 1;

void check_d(int d) {
  if (d < 2) {
    throw std::invalid_argument("annulus: d must be at least 2");
  }
}

void check_j(int d, int j) {
  check_d(d);
  if (j < 1 || j > d - 1) {
    throw std::invalid_argument("annulus: j must lie in 1..d-1");
  }
}

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// c * zeta^z * T^t * X_x, with X_0 = 1.
Polynomial term(const Ring& ring, int c, int z, int t, int x) {
  ExponentVector e(ring->size(), 0);
  e[kZeta] = z;
  e[kTwist] = t;
  if (x > 0) {
    e[kTwist + static_cast<std::size_t>(x)] = 1;
  }
  return Polynomial::monomial(ring, std::move(e), c);
}

}  // namespace

Ring annulus_ring(int d) {
  check_d(d);
  static std::mutex mutex;
  static std::map<int, Ring> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[d];
  if (!slot) {
    std::vector<std::string> names{"zeta", "T"};
    std::vector<bool> flags{true, true};
    for (int j = 1; j <= d - 2; ++j) {
      names.push_back("X" + std::to_string(j));
      flags.push_back(false);
    }
    slot = make_ring(std::move(names), std::move(flags));
  }
  return slot;
}

Polynomial i_bullet_L(int d, int j) {
  check_j(d, j);
  const Ring ring = annulus_ring(d);
  if (j == d - 1) {
    return term(ring, sign(d - 2), 1, 1, d - 2) + term(ring, 1, 1 - d, -1, 0);
  }
  if (j == 1) {
    return term(ring, 1, d - 1, 1, 0) - term(ring, 1, -1, 0, 1);
  }
  return term(ring, sign(j - 1), d - j, 1, j - 1) + term(ring, sign(j), -j, 0, j);
}

Polynomial L_bullet_i(int d, int j) { return mirror(i_bullet_L(d, j)); }

Polynomial mirror(const Polynomial& element) {
  std::vector<Term> terms(element.terms().begin(), element.terms().end());
  for (auto& t : terms) {
    t.exponents[kZeta] = -t.exponents[kZeta];
  }
  return Polynomial(element.ring(), std::move(terms));
}

std::vector<Polynomial> psi_images(int d) {
  check_d(d);
  const Ring ring = annulus_ring(d);
  std::vector<Polynomial> images;
  for (int j = 1; j <= d - 2; ++j) {
    images.push_back(term(ring, sign(j), -j, 0, j));
  }
  images.push_back(term(ring, 1, 1 - d, -1, 0));
  return images;
}

Polynomial psi(const Polynomial& p) {
  const int d = static_cast<int>(p.signature().size()) + 1;
  if (!same_ring(p.ring(), main_identity_ring(d))) {
    throw std::invalid_argument("psi: argument must live in Z[x1..x(d-2), x(d-1)^+-1]");
  }
  return substitute(p, psi_images(d), annulus_ring(d));
}

Polynomial thread_bullet_I(int d, int n, int i, Side side) {
  check_d(d);
  if (n < 1 || i < 1 || i > d - 1) {
    throw std::invalid_argument("thread_bullet_I: need n >= 1 and 1 <= i <= d-1");
  }
  std::vector<Polynomial> args;
  for (int j = 1; j <= d - 1; ++j) {
    args.push_back(side == Side::right ? i_bullet_L(d, j) : L_bullet_i(d, j));
  }
  return substitute(reduced_power_elementary_poly({d, n, i}), args, annulus_ring(d));
}

SpecializedElement specialize(const Polynomial& element, int order) {
  if (order < 1) {
    throw std::invalid_argument("specialize: order must be at least 1");
  }
  if (element.signature().size() < 2 || element.signature().name(kZeta) != "zeta") {
    throw std::invalid_argument("specialize: expected an annulus element");
  }
  std::map<ExponentVector, std::vector<Integer>, GrlexGreater> dense;
  for (const auto& t : element.terms()) {
    ExponentVector key(t.exponents.begin() + 1, t.exponents.end());
    auto [it, inserted] = dense.try_emplace(std::move(key));
    if (inserted) {
      it->second.assign(static_cast<std::size_t>(order), Integer(0));
    }
    long r = t.exponents[kZeta] % order;
    if (r < 0) {
      r += order;
    }
    it->second[static_cast<std::size_t>(r)] += t.coeff;
  }
  SpecializedElement out{.order = order};
  for (auto& [key, coeffs] : dense) {
    auto value = CyclotomicInteger::reduce(order, std::move(coeffs));
    if (!value.is_zero()) {
      out.coefficients.emplace(key, std::move(value));
    }
  }
  return out;
}

VerificationReport verify_prop_power_times_I(int d, int n, int i, int order) {
  VerificationReport report{.check = "annulus", .case_tuple = CaseTuple{d, n, i, order}};
  run_timed(report, [&] {
    const Polynomial difference =
        thread_bullet_I(d, n, i, Side::right) - thread_bullet_I(d, n, i, Side::left);
    const SpecializedElement reduced = specialize(difference, order);
    report.passed = reduced.is_zero();
    if (!report.passed) {
      const auto& [key, value] = *reduced.coefficients.begin();
      ExponentVector e{0};
      e.insert(e.end(), key.begin(), key.end());
      std::string coeffs;
      for (const auto& c : value.coefficients()) {
        coeffs += (coeffs.empty() ? "" : ", ") + c.get_str();
      }
      report.witness = term_to_text(difference.signature(), Term{e, 1}) + " -> [" + coeffs + "]";
    }
    bool psi_consistent = true;
    const auto ys = main_identity_arguments(d);
    for (int j = 1; j <= d - 1; ++j) {
      psi_consistent = psi_consistent && psi(ys[static_cast<std::size_t>(j - 1)]) == i_bullet_L(d, j);
    }
    report.details = {
        {"generic_nonzero", !difference.is_zero()},
        {"psi_consistent", psi_consistent},
        {"psi_convention",
         "psi(x_j) = (-1)^j zeta^-j X_j, psi(x_(d-1)) = zeta^(1-d) T^-1; the variant with zeta^+j "
         "on X_j does not satisfy psi(y_j) = I.L_j"},
    };
  });
  return report;
}

}  // namespace powelem
