#include "powelem/power_poly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "powelem/poly_io.hpp"
#include "powelem/symmetric.hpp"

namespace powelem {

namespace {

class PowerPolyCache {
 public:
  Polynomial get(const PowerPolyKey& key) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
      }
    }
    // Computed outside the lock; a concurrent duplicate computation is
    // harmless because the first insertion wins and both values agree.
    Polynomial value = compute(key);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  static Polynomial compute(const PowerPolyKey& key) {
    return to_elementary_basis(power_elementary_symmetric(key.d, key.n, key.i));
  }

  std::shared_mutex mutex_;
  std::map<PowerPolyKey, Polynomial> cache_;
};

PowerPolyCache& cache() {
  static PowerPolyCache instance;
  return instance;
}

CaseTuple case_of(const PowerPolyKey& key) { return CaseTuple{key.d, key.n, key.i, std::nullopt}; }

void finish(VerificationReport& report, const Polynomial& lhs, const Polynomial& rhs) {
  report.witness = difference_witness(lhs, rhs);
  report.passed = !report.witness;
}

Ring cached_main_ring(int d) {
  static std::mutex mutex;
  static std::map<int, Ring> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[d];
  if (!slot) {
    std::vector<std::string> names;
    std::vector<bool> flags;
    for (int j = 1; j <= d - 1; ++j) {
      names.push_back("x" + std::to_string(j));
      flags.push_back(j == d - 1);
    }
    slot = make_ring(std::move(names), std::move(flags));
  }
  return slot;
}

void check_main_case(int d, int n, int i) {
  if (d < 2 || n < 1 || i < 1 || i > d - 1) {
    throw std::invalid_argument("main identity: need d >= 2, n >= 1 and 1 <= i <= d-1");
  }
}

}  // namespace

void PowerPolyKey::validate() const {
  if (d < 1) {
    throw std::invalid_argument("power polynomial key: d must be at least 1");
  }
  if (n < 1) {
    throw std::invalid_argument("power polynomial key: n must be at least 1");
  }
  if (i < 0 || i > d) {
    throw std::invalid_argument("power polynomial key: i must lie in 0..d");
  }
}

Polynomial power_elementary_poly(const PowerPolyKey& key) {
  key.validate();
  return cache().get(key);
}

Polynomial reduced_power_elementary_poly(const PowerPolyKey& key) {
  key.validate();
  if (key.d < 2) {
    throw std::invalid_argument("reduced power polynomial: d must be at least 2");
  }
  const Ring target = elementary_ring(key.d - 1);
  std::vector<Polynomial> images;
  for (int j = 0; j < key.d - 1; ++j) {
    images.push_back(Polynomial::variable(target, static_cast<std::size_t>(j)));
  }
  images.push_back(Polynomial::constant(target, 1));
  return substitute(power_elementary_poly(key), images, target);
}

Polynomial chebyshev_reference(int n) {
  if (n < 0) {
    throw std::invalid_argument("chebyshev_reference: n must be nonnegative");
  }
  const Ring ring = elementary_ring(1);
  const Polynomial e1 = Polynomial::variable(ring, 0);
  Polynomial previous = Polynomial::constant(ring, 2);
  if (n == 0) {
    return previous;
  }
  Polynomial current = e1;
  for (int k = 1; k < n; ++k) {
    Polynomial next = e1 * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

VerificationReport verify_defining_property(const PowerPolyKey& key) {
  key.validate();
  VerificationReport report{.check = "defining", .case_tuple = case_of(key)};
  run_timed(report, [&] {
    finish(report, from_elementary_basis(power_elementary_poly(key)),
           power_elementary_symmetric(key.d, key.n, key.i));
  });
  return report;
}

VerificationReport verify_homogeneity(const PowerPolyKey& key) {
  key.validate();
  VerificationReport report{.check = "homogeneity", .case_tuple = case_of(key)};
  run_timed(report, [&] {
    const Polynomial p = power_elementary_poly(key);
    std::vector<std::string> names{"theta"};
  for (int j = 1; j <= key.d; ++j) {
    names.push_back("e" + std::to_string(j));
  }
    const Ring ring = make_ring(std::move(names));
    const Polynomial theta = Polynomial::variable(ring, 0);
    std::vector<Polynomial> scaled;
    for (int j = 1; j <= key.d; ++j) {
      scaled.push_back(theta.pow(j) * Polynomial::variable(ring, static_cast<std::size_t>(j)));
    }
    const Polynomial lhs = substitute(p, scaled, ring);
    const Polynomial rhs = theta.pow(static_cast<long>(key.n) * key.i) * change_ring(p, ring);
    finish(report, lhs, rhs);
  });
  return report;
}

Ring main_identity_ring(int d) {
  if (d < 2) {
    throw std::invalid_argument("main_identity_ring: d must be at least 2");
  }
  return cached_main_ring(d);
}

std::vector<Polynomial> main_identity_arguments(int d) {
  const Ring ring = main_identity_ring(d);
  const auto last = static_cast<std::size_t>(d - 2);
  const Polynomial inverse_last = Polynomial::variable(ring, last, -1);
  std::vector<Polynomial> ys;
  ys.push_back(inverse_last + Polynomial::variable(ring, 0));
  for (std::size_t j = 1; j <= last; ++j) {
    ys.push_back(Polynomial::variable(ring, j - 1) * inverse_last + Polynomial::variable(ring, j));
  }
  return ys;
}

Polynomial main_identity_lhs(int d, int n, int i) {
  check_main_case(d, n, i);
  return substitute(reduced_power_elementary_poly({d, n, i}), main_identity_arguments(d),
                    main_identity_ring(d));
}

Polynomial main_identity_rhs(int d, int n, int i) {
  check_main_case(d, n, i);
  const Ring ring = main_identity_ring(d);
  std::vector<Polynomial> xs;
  for (int j = 0; j < d - 1; ++j) {
    xs.push_back(Polynomial::variable(ring, static_cast<std::size_t>(j)));
  }
  const Polynomial lower = substitute(power_elementary_poly({d - 1, n, i - 1}), xs, ring);
  const Polynomial upper = substitute(power_elementary_poly({d - 1, n, i}), xs, ring);
  return Polynomial::variable(ring, static_cast<std::size_t>(d - 2), -n) * lower + upper;
}

VerificationReport verify_main_identity(int d, int n, int i) {
  check_main_case(d, n, i);
  VerificationReport report{.check = "identity", .case_tuple = CaseTuple{d, n, i, std::nullopt}};
  run_timed(report, [&] { finish(report, main_identity_lhs(d, n, i), main_identity_rhs(d, n, i)); });
  return report;
}

}  // namespace powelem
