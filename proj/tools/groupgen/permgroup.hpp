#ifndef ZC1_TOOLS_PERMGROUP_HPP
#define ZC1_TOOLS_PERMGROUP_HPP

// Brute-force permutation-group machinery used to derive and re-verify the
// frozen class metadata (sizes, power maps, fusions) of the built-in
// tables. Deliberately naive: the groups involved have at most 120
// elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace permgroup {

using Perm = std::vector<int>;

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

inline Perm power(const Perm& a, std::int64_t e) {
  Perm r = identity(static_cast<int>(a.size()));
  for (std::int64_t i = 0; i < e; ++i) r = compose(a, r);
  return r;
}

inline std::int64_t element_order(const Perm& a) {
  Perm x = a;
  std::int64_t k = 1;
  Perm id = identity(static_cast<int>(a.size()));
  while (x != id) {
    x = compose(a, x);
    ++k;
  }
  return k;
}

// cycle notation helper: cycles({{0,1,2}}, n) is the 3-cycle (0 1 2)
inline Perm cycles(const std::vector<std::vector<int>>& cs, int n) {
  Perm p = identity(n);
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

inline std::vector<Perm> generate(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen;
  std::vector<Perm> queue{identity(n)};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = compose(g, queue[head]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

struct ClassData {
  std::vector<Perm> representatives;
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> sizes;
  std::vector<std::map<std::int64_t, int>> power_maps;  // prime -> class index
  std::int64_t group_order = 0;
  std::int64_t exponent = 1;

  int class_of(const Perm& x, const std::vector<std::vector<Perm>>& classes) const;
};

struct Group {
  std::vector<Perm> elements;
  std::vector<std::vector<Perm>> classes;  // identity class first
  ClassData data;

  int class_of(const Perm& x) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::find(classes[i].begin(), classes[i].end(), x) != classes[i].end())
        return static_cast<int>(i);
    throw std::logic_error("element not in any class");
  }
};

inline Group analyze_group(const std::vector<Perm>& gens, int n) {
  Group g;
  g.elements = generate(gens, n);
  std::set<Perm> remaining(g.elements.begin(), g.elements.end());
  while (!remaining.empty()) {
    Perm rep = *remaining.begin();
    std::set<Perm> cls;
    for (const Perm& x : g.elements)
      cls.insert(compose(compose(x, rep), inverse(x)));
    std::vector<Perm> cvec(cls.begin(), cls.end());
    for (const Perm& x : cvec) remaining.erase(x);
    g.classes.push_back(std::move(cvec));
  }
  // identity class first, then ascending (order, size) for determinism
  std::stable_sort(g.classes.begin(), g.classes.end(),
                   [](const std::vector<Perm>& a, const std::vector<Perm>& b) {
                     auto ka = std::make_pair(element_order(a[0]), a.size());
                     auto kb = std::make_pair(element_order(b[0]), b.size());
                     return ka < kb;
                   });

  g.data.group_order = static_cast<std::int64_t>(g.elements.size());
  for (const auto& cls : g.classes) {
    g.data.representatives.push_back(cls[0]);
    g.data.orders.push_back(element_order(cls[0]));
    g.data.sizes.push_back(static_cast<std::int64_t>(cls.size()));
    g.data.exponent = std::lcm(g.data.exponent, g.data.orders.back());
  }
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q <= g.data.exponent; ++q) {
    bool prime = q >= 2;
    for (std::int64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (prime && g.data.exponent % q == 0) primes.push_back(q);
  }
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    std::map<std::int64_t, int> pm;
    for (std::int64_t q : primes) pm[q] = g.class_of(power(g.data.representatives[i], q));
    g.data.power_maps.push_back(std::move(pm));
  }
  return g;
}

// Standard constructions used by the built-ins.
inline Group make_s4() {
  return analyze_group({cycles({{0, 1}}, 4), cycles({{0, 1, 2, 3}}, 4)}, 4);
}

inline Group make_s5() {
  return analyze_group({cycles({{0, 1}}, 5), cycles({{0, 1, 2, 3, 4}}, 5)}, 5);
}

inline Group make_s4xc2() {
  return analyze_group(
      {cycles({{0, 1}}, 6), cycles({{0, 1, 2, 3}}, 6), cycles({{4, 5}}, 6)}, 6);
}

inline Group make_a4xs3() {
  return analyze_group({cycles({{0, 1, 2}}, 7), cycles({{0, 1}, {2, 3}}, 7),
                        cycles({{4, 5}}, 7), cycles({{4, 5, 6}}, 7)},
                       7);
}

// All bijections between two class structures that preserve element order,
// class size and every power map (the identity class is pinned to index 0).
struct ClassStructure {
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> sizes;
  std::vector<std::map<std::int64_t, int>> power_maps;
};

inline std::vector<std::vector<int>> structure_bijections(const ClassStructure& a,
                                                          const ClassStructure& b) {
  std::vector<std::vector<int>> results;
  std::size_t m = a.orders.size();
  if (b.orders.size() != m) return results;
  std::vector<int> image(m, -1);
  std::vector<bool> used(m, false);

  auto consistent = [&](std::size_t i, int j) {
    if (a.orders[i] != b.orders[static_cast<std::size_t>(j)]) return false;
    if (a.sizes[i] != b.sizes[static_cast<std::size_t>(j)]) return false;
    for (const auto& [q, target] : a.power_maps[i]) {
      auto it = b.power_maps[static_cast<std::size_t>(j)].find(q);
      if (it == b.power_maps[static_cast<std::size_t>(j)].end()) return false;
      int mapped = (target == static_cast<int>(i)) ? j : image[static_cast<std::size_t>(target)];
      if (mapped >= 0 && mapped != it->second) return false;
    }
    // reverse direction: anything already mapped onto j must power-commute
    for (std::size_t k = 0; k < m; ++k) {
      if (image[k] < 0) continue;
      for (const auto& [q, target] : a.power_maps[k]) {
        if (static_cast<std::size_t>(target) == i &&
            b.power_maps[static_cast<std::size_t>(image[k])].at(q) != j)
          return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      results.push_back(image);
      return;
    }
    for (int j = 0; j < static_cast<int>(m); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (i == 0 && j != 0) continue;  // identity to identity
      if (!consistent(i, j)) continue;
      image[i] = j;
      used[static_cast<std::size_t>(j)] = true;
      self(self, i + 1);
      image[i] = -1;
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  rec(rec, 0);
  return results;
}

}  // namespace permgroup

#endif
