#ifndef ZC1_TESTS_ORACLES_HPP
#define ZC1_TESTS_ORACLES_HPP

// Independent test oracles: a floating-point shadow of the exact
// cyclotomic arithmetic, a brute-force box scanner for the constraint
// systems, and a full table-isomorphism check. These deliberately avoid
// the code paths they are used to verify.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "zc1/engine.hpp"
#include "zc1/numtheory.hpp"

namespace oracles {

using zc1::Cyclotomic;
using zc1::PartialAugmentationVector;

// zeta_n -> exp(2*pi*i/n); exact operations must commute with this map.
inline std::complex<double> shadow(const Cyclotomic& x) {
  constexpr double tau = 6.283185307179586476925286766559;
  std::complex<double> acc = 0.0;
  for (auto& [e, c] : x.coefficients()) {
    double angle = tau * static_cast<double>(e) / static_cast<double>(x.order());
    acc += c.to_double() * std::polar(1.0, angle);
  }
  return acc;
}

inline std::complex<double> shadow_root(std::int64_t n, std::int64_t e) {
  constexpr double tau = 6.283185307179586476925286766559;
  return std::polar(1.0, tau * static_cast<double>(e) / static_cast<double>(n));
}

// Small random cyclotomic built from a handful of roots of unity.
inline Cyclotomic random_cyclotomic(std::mt19937& rng, std::int64_t max_order = 12) {
  std::uniform_int_distribution<std::int64_t> order_dist(1, max_order);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  std::uniform_int_distribution<int> den_dist(1, 3);
  std::uniform_int_distribution<int> terms_dist(0, 3);
  std::int64_t n = order_dist(rng);
  Cyclotomic acc;
  int terms = terms_dist(rng);
  for (int t = 0; t <= terms; ++t) {
    std::uniform_int_distribution<std::int64_t> exp_dist(0, n - 1);
    acc = acc + Cyclotomic::root_of_unity(n, exp_dist(rng)) *
                    zc1::Rational(coeff_dist(rng), den_dist(rng));
  }
  return acc;
}

// Exhaustive scan of the derived box: the reference implementation of
// enumerate_solutions for small systems.
inline std::vector<PartialAugmentationVector> scan_box(const zc1::ConstraintSystem& sys,
                                                       const zc1::DerivedBox& box) {
  std::vector<PartialAugmentationVector> found;
  std::size_t n = sys.free_indices.size();
  if (n == 0 || !box.feasible) return found;
  std::vector<std::int64_t> x(n, 0);

  auto accept = [&]() {
    std::int64_t sum = 0;
    for (std::int64_t v : x) sum += v;
    if (sum != 1) return false;
    for (const auto& mc : sys.forms) {
      zc1::Rational value = mc.form.eval(x);
      if (!value.is_integer()) return false;
      if (value.sign() < 0 || value > mc.degree) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (accept()) {
        PartialAugmentationVector pav;
        pav.order = sys.order;
        pav.values.assign(static_cast<std::size_t>(sys.class_count), 0);
        for (std::size_t j = 0; j < n; ++j)
          pav.values[static_cast<std::size_t>(sys.free_indices[j])] = x[j];
        found.push_back(std::move(pav));
      }
      return;
    }
    for (std::int64_t v = box.lo[i]; v <= box.hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

// Full table isomorphism: a class bijection preserving order, size and
// power maps together with a character bijection matching all values.
inline bool tables_isomorphic(const zc1::CharacterTable& a, const zc1::CharacterTable& b) {
  int m = a.class_count();
  if (b.class_count() != m) return false;
  if (a.group_order != b.group_order || a.exponent != b.exponent) return false;

  std::vector<int> image(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);

  auto class_ok = [&](int i, int j) {
    const auto& ca = a.classes[static_cast<std::size_t>(i)];
    const auto& cb = b.classes[static_cast<std::size_t>(j)];
    if (ca.element_order != cb.element_order || ca.size != cb.size) return false;
    for (auto& [q, t] : ca.power_map) {
      auto it = cb.power_map.find(q);
      if (it == cb.power_map.end()) return false;
      int mapped = (t == i) ? j : image[static_cast<std::size_t>(t)];
      if (mapped >= 0 && mapped != it->second) return false;
    }
    for (int k = 0; k < m; ++k) {
      if (image[static_cast<std::size_t>(k)] < 0) continue;
      for (auto& [q, t] : a.classes[static_cast<std::size_t>(k)].power_map)
        if (t == i &&
            b.classes[static_cast<std::size_t>(image[static_cast<std::size_t>(k)])]
                    .power_map.at(q) != j)
          return false;
    }
    return true;
  };

  // with a class bijection fixed, characters must match as value rows
  auto characters_match = [&]() {
    std::vector<bool> taken(static_cast<std::size_t>(m), false);
    for (int r = 0; r < m; ++r) {
      bool matched = false;
      for (int s = 0; s < m && !matched; ++s) {
        if (taken[static_cast<std::size_t>(s)]) continue;
        bool all = true;
        for (int c = 0; c < m && all; ++c)
          all = (a.value(r, c) == b.value(s, image[static_cast<std::size_t>(c)]));
        if (all) {
          taken[static_cast<std::size_t>(s)] = true;
          matched = true;
        }
      }
      if (!matched) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return characters_match();
    for (int j = 0; j < m; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (i == 0 && j != 0) continue;
      if (!class_ok(i, j)) continue;
      image[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = true;
      if (self(self, i + 1)) return true;
      image[static_cast<std::size_t>(i)] = -1;
      used[static_cast<std::size_t>(j)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// The coherent all-trivial profile of a group element in class `cls`:
// every proper power chosen as the indicator of the power-map image.
inline zc1::PowerProfile trivial_profile(const zc1::CharacterTable& t, int cls,
                                         std::int64_t k) {
  zc1::PowerProfile profile;
  profile.order = k;
  for (std::int64_t d : zc1::divisors(k)) {
    if (d == 1 || d == k) continue;
    zc1::PowerAssignment a;
    a.power = d;
    a.power_order = k / d;
    a.vector.order = k / d;
    a.vector.values.assign(static_cast<std::size_t>(t.class_count()), 0);
    a.vector.values[static_cast<std::size_t>(t.power_class(cls, d))] = 1;
    profile.assignments.push_back(std::move(a));
  }
  return profile;
}

}  // namespace oracles

#endif
