#include "powelem/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace powelem {

namespace {

Ring cached_indexed_ring(const char* prefix, int count) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, Ring> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{prefix, count}];
  if (!slot) {
    slot = indexed_ring(prefix, count);
  }
  return slot;
}

void check_index(int d, int i) {
  if (d < 1) {
    throw std::invalid_argument("symmetric: d must be at least 1");
  }
  if (i < 0 || i > d) {
    throw std::invalid_argument("symmetric: index i must lie in 0..d");
  }
}

// All k-element subsets of {0..d-1}, as index lists.
std::vector<std::vector<int>> subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int j = start; j < d; ++j) {
      current.push_back(j);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

bool weakly_decreasing(const ExponentVector& a) {
  return std::is_sorted(a.begin(), a.end(), std::greater<>());
}

void sort_decreasing(ExponentVector& a) { std::sort(a.begin(), a.end(), std::greater<>()); }

// A symmetric polynomial stored by its coefficients on weakly decreasing
// exponent vectors; every other coefficient follows by permutation.
using Dominant = std::unordered_map<ExponentVector, Integer, ExponentHash>;

class ElementaryProducts {
 public:
  explicit ElementaryProducts(int d) : d_(d) {
    subsets_.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
      subsets_[static_cast<std::size_t>(k)] = subsets(d, k);
    }
    cache_.emplace(ExponentVector(static_cast<std::size_t>(d), 0),
                   Dominant{{ExponentVector(static_cast<std::size_t>(d), 0), Integer(1)}});
  }

  // Dominant part of E^(1)^m1 ... E^(d)^md.
  const Dominant& product(const ExponentVector& m) {
    if (auto it = cache_.find(m); it != cache_.end()) {
      return it->second;
    }
    std::size_t k = 0;
    while (m[k] == 0) {
      ++k;
    }
    ExponentVector smaller = m;
    --smaller[k];
    Dominant value = times_elementary(product(smaller), static_cast<int>(k) + 1);
    return cache_.emplace(m, std::move(value)).first->second;
  }

 private:
  // Coefficient of lambda^a in G * E^(k) is the sum over k-subsets S with
  // a - 1_S >= 0 of G's coefficient at a - 1_S, which by symmetry is G's
  // coefficient at the sorted vector.
  Dominant times_elementary(const Dominant& g, int k) const {
    const auto& subs = subsets_[static_cast<std::size_t>(k)];
    std::unordered_set<ExponentVector, ExponentHash> targets;
    for (const auto& [b, coeff] : g) {
      for (const auto& s : subs) {
        ExponentVector a = b;
        for (int j : s) {
          ++a[static_cast<std::size_t>(j)];
        }
        sort_decreasing(a);
        targets.insert(std::move(a));
      }
    }
    Dominant out;
    out.reserve(targets.size());
    for (const auto& a : targets) {
      Integer sum = 0;
      for (const auto& s : subs) {
        ExponentVector b = a;
        bool ok = true;
        for (int j : s) {
          if (--b[static_cast<std::size_t>(j)] < 0) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        sort_decreasing(b);
        if (auto it = g.find(b); it != g.end()) {
          sum += it->second;
        }
      }
      if (sum != 0) {
        out.emplace(a, std::move(sum));
      }
    }
    return out;
  }

  int d_;
  std::vector<std::vector<std::vector<int>>> subsets_;
  std::unordered_map<ExponentVector, Dominant, ExponentHash> cache_;
};

}  // namespace

Ring lambda_ring(int d) { return cached_indexed_ring("lambda", d); }

Ring elementary_ring(int d) { return cached_indexed_ring("e", d); }

Polynomial elementary_symmetric(int d, int i) { return power_elementary_symmetric(d, 1, i); }

Polynomial power_elementary_symmetric(int d, int n, int i) {
  check_index(d, i);
  if (n < 1) {
    throw std::invalid_argument("power_elementary_symmetric: n must be at least 1");
  }
  std::vector<Term> terms;
  for (const auto& s : subsets(d, i)) {
    ExponentVector e(static_cast<std::size_t>(d), 0);
    for (int j : s) {
      e[static_cast<std::size_t>(j)] = n;
    }
    terms.push_back(Term{std::move(e), 1});
  }
  return Polynomial(lambda_ring(d), std::move(terms));
}

bool is_symmetric(const Polynomial& p) {
  const std::size_t d = p.signature().size();
  std::unordered_map<ExponentVector, const Integer*, ExponentHash> lookup;
  lookup.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    lookup.emplace(t.exponents, &t.coeff);
  }
  for (std::size_t k = 0; k + 1 < d; ++k) {
    for (const auto& t : p.terms()) {
      ExponentVector swapped = t.exponents;
      std::swap(swapped[k], swapped[k + 1]);
      auto it = lookup.find(swapped);
      if (it == lookup.end() || *it->second != t.coeff) {
        return false;
      }
    }
  }
  return true;
}

Polynomial to_elementary_basis(const Polynomial& p) {
  const int d = static_cast<int>(p.signature().size());
  if (d < 1) {
    throw std::invalid_argument("to_elementary_basis: need at least one variable");
  }
  if (!is_symmetric(p)) {
    throw std::invalid_argument("to_elementary_basis: input is not symmetric");
  }
  std::map<ExponentVector, Integer, GrlexGreater> remainder;
  for (const auto& t : p.terms()) {
    for (int e : t.exponents) {
      if (e < 0) {
        throw std::invalid_argument("to_elementary_basis: negative exponent");
      }
    }
    if (weakly_decreasing(t.exponents)) {
      remainder.emplace(t.exponents, t.coeff);
    }
  }

  ElementaryProducts products(d);
  std::vector<Term> result;
  while (!remainder.empty()) {
    const ExponentVector lead = remainder.begin()->first;
    const Integer c = remainder.begin()->second;
    if (!weakly_decreasing(lead)) {
      throw std::invalid_argument("to_elementary_basis: leading exponent not weakly decreasing");
    }
    ExponentVector m(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < m.size(); ++k) {
      m[k] = lead[k] - (k + 1 < m.size() ? lead[k + 1] : 0);
    }
    for (const auto& [a, coeff] : products.product(m)) {
      auto [it, inserted] = remainder.try_emplace(a, 0);
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), coeff.get_mpz_t());
      if (it->second == 0) {
        remainder.erase(it);
      }
    }
    // Termination measure: the leading exponent strictly decreases.
    if (!remainder.empty() && grlex_compare(remainder.begin()->first, lead) >= 0) {
      throw std::logic_error("to_elementary_basis: leading term failed to decrease");
    }
    result.push_back(Term{std::move(m), c});
  }
  return Polynomial(elementary_ring(d), std::move(result));
}

Polynomial from_elementary_basis(const Polynomial& q) {
  const int d = static_cast<int>(q.signature().size());
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(d));
  for (int j = 1; j <= d; ++j) {
    images.push_back(elementary_symmetric(d, j));
  }
  return substitute(q, images, lambda_ring(d));
}

}  // namespace powelem
