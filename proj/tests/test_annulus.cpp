#include <gtest/gtest.h>

#include "powelem/annulus.hpp"
#include "powelem/poly_io.hpp"
#include "powelem/power_poly.hpp"
#include "powelem/symmetric.hpp"

namespace powelem {
namespace {

Polynomial element(int d, const std::string& text) { return parse_text(text, annulus_ring(d)); }

// zeta^a T^t as an annulus element.
Polynomial zt(int d, int a, int t) {
  ExponentVector e(annulus_ring(d)->size(), 0);
  e[0] = a;
  e[1] = t;
  return Polynomial::monomial(annulus_ring(d), e);
}

// X_j with X_0 = 1 and X_(d-1) = (-1)^(d-1) T^-1.
Polynomial unified_x(int d, int j) {
  if (j == 0) {
    return Polynomial::constant(annulus_ring(d), 1);
  }
  if (j == d - 1) {
    return (d % 2 == 0 ? -zt(d, 0, -1) : zt(d, 0, -1));
  }
  return Polynomial::variable(annulus_ring(d), static_cast<std::size_t>(j + 1));
}

Polynomial sign(int d, int k) { return Polynomial::constant(annulus_ring(d), k % 2 == 0 ? 1 : -1); }

TEST(Annulus, RingLayout) {
  const Ring r = annulus_ring(4);
  ASSERT_EQ(r->size(), 4u);
  EXPECT_EQ(r->name(0), "zeta");
  EXPECT_EQ(r->name(1), "T");
  EXPECT_EQ(r->name(2), "X1");
  EXPECT_TRUE(r->invertible(0));
  EXPECT_TRUE(r->invertible(1));
  EXPECT_FALSE(r->invertible(2));
  EXPECT_THROW(annulus_ring(1), std::invalid_argument);
}

TEST(Annulus, IBulletLExamples) {
  EXPECT_EQ(i_bullet_L(2, 1), element(2, "zeta*T + zeta^-1*T^-1"));
  EXPECT_EQ(i_bullet_L(3, 1), element(3, "zeta^2*T - zeta^-1*X1"));
  EXPECT_EQ(i_bullet_L(4, 2), element(4, "-zeta^2*T*X1 + zeta^-2*X2"));
  EXPECT_EQ(i_bullet_L(4, 3), element(4, "zeta*T*X2 + zeta^-3*T^-1"));
  EXPECT_THROW(i_bullet_L(4, 4), std::invalid_argument);
  EXPECT_THROW(i_bullet_L(4, 0), std::invalid_argument);
}

TEST(Annulus, LBulletIExamples) {
  EXPECT_EQ(L_bullet_i(2, 1), element(2, "zeta^-1*T + zeta*T^-1"));
  EXPECT_EQ(L_bullet_i(3, 1), element(3, "zeta^-2*T - zeta*X1"));
  for (int d = 2; d <= 6; ++d) {
    for (int j = 1; j < d; ++j) {
      EXPECT_EQ(L_bullet_i(d, j), mirror(i_bullet_L(d, j)));
      EXPECT_EQ(mirror(mirror(i_bullet_L(d, j))), i_bullet_L(d, j));
    }
  }
}

TEST(Annulus, UnifiedBranchConvention) {
  // The middle branch with X_0 = 1 and X_(d-1) = (-1)^(d-1) T^-1 covers every j.
  for (int d = 2; d <= 6; ++d) {
    for (int j = 1; j < d; ++j) {
      const Polynomial middle = sign(d, j - 1) * zt(d, d - j, 1) * unified_x(d, j - 1) +
                                sign(d, j) * zt(d, -j, 0) * unified_x(d, j);
      EXPECT_EQ(middle, i_bullet_L(d, j)) << d << " " << j;
    }
  }
}

TEST(Annulus, PsiExamples) {
  for (int d = 2; d <= 6; ++d) {
    const Ring x = main_identity_ring(d);
    EXPECT_EQ(psi(Polynomial::variable(x, static_cast<std::size_t>(d - 2), -1)), zt(d, d - 1, 1));
  }
  const auto y = main_identity_arguments(3);
  EXPECT_EQ(psi(y[0]), element(3, "zeta^2*T - zeta^-1*X1"));
  const Ring x3 = main_identity_ring(3);
  const Polynomial x1 = Polynomial::variable(x3, 0);
  const Polynomial x2 = Polynomial::variable(x3, 1);
  EXPECT_EQ(psi(x1 * x2), psi(x1) * psi(x2));
  EXPECT_EQ(psi(x1), element(3, "-zeta^-1*X1"));
  EXPECT_THROW(psi(Polynomial::variable(elementary_ring(2), 0)), std::invalid_argument);
}

TEST(Annulus, PsiConsistency) {
  for (int d = 2; d <= 6; ++d) {
    const auto y = main_identity_arguments(d);
    for (int j = 1; j < d; ++j) {
      EXPECT_EQ(psi(y[static_cast<std::size_t>(j - 1)]), i_bullet_L(d, j)) << d << " " << j;
    }
  }
}

TEST(Annulus, OppositeZetaSignBreaksConsistency) {
  for (int d = 3; d <= 6; ++d) {
    std::vector<Polynomial> images = psi_images(d);
    for (int j = 1; j <= d - 2; ++j) {
      images[static_cast<std::size_t>(j - 1)] = sign(d, j) * zt(d, j, 0) *
                                                Polynomial::variable(annulus_ring(d), static_cast<std::size_t>(j + 1));
    }
    const auto y = main_identity_arguments(d);
    bool all_match = true;
    for (int j = 1; j < d; ++j) {
      all_match = all_match && substitute(y[static_cast<std::size_t>(j - 1)], images, annulus_ring(d)) == i_bullet_L(d, j);
      all_match = all_match && substitute(y[static_cast<std::size_t>(j - 1)], images, annulus_ring(d)) == L_bullet_i(d, j);
    }
    EXPECT_FALSE(all_match) << d;
  }
}

TEST(Annulus, ThreadExamples) {
  EXPECT_EQ(thread_bullet_I(2, 2, 1, Side::right), element(2, "zeta^2*T^2 + zeta^-2*T^-2"));
  EXPECT_EQ(thread_bullet_I(2, 2, 1, Side::left), element(2, "zeta^-2*T^2 + zeta^2*T^-2"));
  for (int d = 2; d <= 5; ++d) {
    for (int i = 1; i < d; ++i) {
      EXPECT_EQ(thread_bullet_I(d, 1, i, Side::right), i_bullet_L(d, i));
      EXPECT_EQ(thread_bullet_I(d, 1, i, Side::left), L_bullet_i(d, i));
    }
  }
  EXPECT_THROW(thread_bullet_I(3, 2, 3, Side::right), std::invalid_argument);
}

TEST(Annulus, TransportOfMainIdentity) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 5; ++n) {
      for (int i = 1; i < d; ++i) {
        EXPECT_EQ(thread_bullet_I(d, n, i, Side::right), psi(main_identity_rhs(d, n, i))) << d << n << i;
        EXPECT_EQ(thread_bullet_I(d, n, i, Side::left), mirror(thread_bullet_I(d, n, i, Side::right)));
      }
    }
  }
}

TEST(Annulus, ClosedForm) {
  for (int d = 2; d <= 5; ++d) {
    const Ring target = annulus_ring(d);
    std::vector<Polynomial> q_images;
    for (int j = 1; j < d; ++j) {
      q_images.push_back(unified_x(d, j));
    }
    for (int n = 1; n <= 4; ++n) {
      auto q_k = [&](int k) {
        if (k == 0) {
          return Polynomial::constant(target, 1);
        }
        return substitute(power_elementary_poly({d - 1, n, k}), q_images, target);
      };
      for (int i = 1; i < d; ++i) {
        const Polynomial expected = sign(d, n * (i - 1)) * zt(d, n * (d - i), n) * q_k(i - 1) +
                                    sign(d, n * i) * zt(d, -n * i, 0) * q_k(i);
        EXPECT_EQ(thread_bullet_I(d, n, i, Side::right), expected) << d << n << i;
      }
    }
  }
}

TEST(Annulus, SpecializeDropsZeros) {
  const Polynomial diff = element(2, "zeta^2*T^2 - zeta^-2*T^2 + 3*T");
  const auto at4 = specialize(diff, 4);
  ASSERT_EQ(at4.coefficients.size(), 1u);
  EXPECT_EQ(at4.coefficients.begin()->first, (ExponentVector{1}));
  EXPECT_EQ(at4.coefficients.begin()->second, CyclotomicInteger::from_integer(4, 3));
  EXPECT_EQ(specialize(diff, 3).coefficients.size(), 2u);
  EXPECT_TRUE(specialize(Polynomial(annulus_ring(3)), 5).is_zero());
}

TEST(Annulus, VerifyExamples) {
  const auto pass = verify_prop_power_times_I(2, 2, 1, 4);
  EXPECT_TRUE(pass.passed);
  EXPECT_EQ(pass.check, "annulus");
  EXPECT_EQ(pass.case_tuple, (CaseTuple{2, 2, 1, 4}));
  EXPECT_EQ(pass.details["generic_nonzero"], true);
  EXPECT_EQ(pass.details["psi_consistent"], true);
  EXPECT_TRUE(pass.details.contains("psi_convention"));

  const auto fail = verify_prop_power_times_I(2, 2, 1, 3);
  EXPECT_FALSE(fail.passed);
  ASSERT_TRUE(fail.witness.has_value());
  EXPECT_EQ(fail.details["generic_nonzero"], true);

  for (int d = 2; d <= 4; ++d) {
    for (int i = 1; i < d; ++i) {
      EXPECT_TRUE(verify_prop_power_times_I(d, 3, i, 1).passed);
    }
  }
}

TEST(Annulus, PositiveAndNegativeSweep) {
  const std::vector<std::pair<int, int>> grid{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};
  for (const auto& [d, n] : grid) {
    for (int i = 1; i < d; ++i) {
      bool some_failure = false;
      for (int order = 1; order <= 2 * n + 2; ++order) {
        const auto r = verify_prop_power_times_I(d, n, i, order);
        EXPECT_TRUE(r.details["generic_nonzero"].get<bool>()) << d << n << i;
        if ((2 * n) % order == 0) {
          EXPECT_TRUE(r.passed) << d << n << i << " N=" << order;
        } else {
          some_failure = some_failure || !r.passed;
        }
      }
      EXPECT_TRUE(some_failure) << d << n << i;
    }
  }
}

}  // namespace
}  // namespace powelem
