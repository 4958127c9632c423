#include "zc1/engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "zc1/numtheory.hpp"

namespace zc1 {

int PartialAugmentationVector::single_support() const {
  int found = -1;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == 0) continue;
    if (found >= 0 || values[j] != 1) return -1;
    found = static_cast<int>(j);
  }
  return found;
}

const PartialAugmentationVector* PowerProfile::vector_for_power(std::int64_t d) const {
  for (const auto& a : assignments)
    if (a.power == d) return &a.vector;
  return nullptr;
}

Rational AffineForm::eval(std::span<const std::int64_t> x) const {
  assert(x.size() == coeffs.size());
  Rational acc = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (x[i] == 0 || coeffs[i].is_zero()) continue;
    acc += coeffs[i] * Rational(x[i]);
  }
  return acc;
}

std::vector<PartialAugmentationVector> SolutionSet::all_solutions() const {
  std::vector<PartialAugmentationVector> out;
  for (const auto& e : entries)
    out.insert(out.end(), e.solutions.begin(), e.solutions.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SolutionSet::has_solutions() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ProfileSolutions& e) { return !e.solutions.empty(); });
}

std::vector<std::int64_t> admissible_orders(const CharacterTable& table) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : divisors(table.exponent))
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<int> forced_zero_classes(const CharacterTable& table, std::int64_t k) {
  std::vector<int> out;
  for (int i = 0; i < table.class_count(); ++i) {
    const ClassInfo& c = table.classes[static_cast<std::size_t>(i)];
    bool forced = (i == 0) || c.is_central();
    if (!forced)
      for (std::int64_t p : prime_factors(c.element_order))
        if (k % p != 0) {
          forced = true;
          break;
        }
    if (forced) out.push_back(i);
  }
  return out;
}

namespace {

void check_profile(const CharacterTable& table, std::int64_t k, const PowerProfile& profile) {
  if (profile.order != k) throw EngineError("profile order does not match the analyzed order");
  std::set<std::int64_t> seen;
  for (const auto& a : profile.assignments) {
    if (a.power <= 1 || a.power >= k || k % a.power != 0)
      throw EngineError("profile contains an assignment for a non-proper power");
    if (a.power_order != k / a.power)
      throw EngineError("profile assignment order mismatch");
    if (a.vector.order != a.power_order ||
        static_cast<int>(a.vector.values.size()) != table.class_count())
      throw EngineError("profile assignment vector has wrong shape");
    if (!seen.insert(a.power).second) throw EngineError("duplicate profile assignment");
  }
  for (std::int64_t d : divisors(k))
    if (d > 1 && d < k && !seen.count(d))
      throw EngineError("profile is missing the assignment for power " + std::to_string(d));

  // coherence: a trivial choice pins every deeper choice through the power map
  for (const auto& a : profile.assignments) {
    int c = a.vector.single_support();
    if (c < 0) continue;
    if (table.power_class(c, a.power_order) != 0)
      throw EngineError("incoherent profile: chain does not reach the identity");
    for (const auto& b : profile.assignments) {
      if (b.power_order >= a.power_order || a.power_order % b.power_order != 0) continue;
      int expected = table.power_class(c, a.power_order / b.power_order);
      if (b.vector.single_support() != expected)
        throw EngineError("incoherent profile: power-map chain mismatch");
    }
  }
}

Cyclotomic character_of_vector(const CharacterTable& table, int chi,
                               const PartialAugmentationVector& w) {
  Cyclotomic acc;
  for (int j = 0; j < table.class_count(); ++j) {
    std::int64_t v = w.values[static_cast<std::size_t>(j)];
    if (v != 0) acc = acc + table.value(chi, j) * Rational(v);
  }
  return acc;
}

}  // namespace

AffineForm multiplicity_form(const CharacterTable& table, std::int64_t k,
                             const PowerProfile& profile, int chi, std::int64_t l) {
  if (l < 0 || l >= k) throw EngineError("residue out of range");
  check_profile(table, k, profile);

  Rational inv_k = Rational(1) / Rational(k);
  std::vector<int> forced = forced_zero_classes(table, k);
  std::set<int> forced_set(forced.begin(), forced.end());

  AffineForm form;
  // d = 1: coefficients over the free classes
  for (int j = 0; j < table.class_count(); ++j) {
    if (forced_set.count(j)) continue;
    form.coeffs.push_back(inv_k * normalized_trace_twisted(table.value(chi, j), k, l));
  }
  // proper powers contribute constants through the profile
  Rational constant(0);
  for (std::int64_t d : divisors(k)) {
    if (d == 1) continue;
    std::int64_t m = k / d;  // order of u^d; field Q(zeta_m)
    Cyclotomic value;
    if (d == k) {
      value = table.value(chi, 0);  // chi(u^k) = chi(1)
    } else {
      const PartialAugmentationVector* w = profile.vector_for_power(d);
      assert(w != nullptr);
      value = character_of_vector(table, chi, *w);
    }
    constant += inv_k * normalized_trace_twisted(value, m, l);
  }
  form.constant = constant;
  return form;
}

ConstraintSystem build_system(const CharacterTable& table, std::int64_t k,
                              const PowerProfile& profile) {
  check_profile(table, k, profile);
  ConstraintSystem sys;
  sys.order = k;
  sys.profile = profile;
  sys.class_count = table.class_count();
  std::vector<int> forced = forced_zero_classes(table, k);
  std::set<int> forced_set(forced.begin(), forced.end());
  for (int j = 0; j < table.class_count(); ++j)
    if (!forced_set.count(j)) sys.free_indices.push_back(j);
  for (int chi = 0; chi < table.class_count(); ++chi)
    for (std::int64_t l = 0; l < k; ++l)
      sys.forms.push_back({chi, l, multiplicity_form(table, k, profile, chi, l),
                           table.degree(chi)});
  return sys;
}

// ---------------------------------------------------------------------------
// Exact integer enumeration: Fourier-Motzkin bounds + depth-first search
// with interval propagation.

namespace {

// c + a.x >= 0 as a primitive integer row [c, a_1, ..., a_n]
using FmRow = std::vector<mpz_class>;

void normalize_row(FmRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row) v /= g;
}

constexpr std::size_t kFmRowCap = 100000;

// Row with the set of original inequalities it was combined from, for
// Imbert's redundancy criterion: after e eliminations every irredundant
// inequality is a combination of at most e + 1 original rows.
struct FmTracked {
  FmRow row;
  std::vector<std::uint64_t> ancestors;

  static std::vector<std::uint64_t> singleton(std::size_t idx, std::size_t universe) {
    std::vector<std::uint64_t> bits((universe + 63) / 64, 0);
    bits[idx / 64] |= std::uint64_t{1} << (idx % 64);
    return bits;
  }
};

std::size_t popcount_union(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& out) {
  out.resize(a.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] | b[i];
    count += static_cast<std::size_t>(__builtin_popcountll(out[i]));
  }
  return count;
}

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
  std::size_t count = 0;
  for (std::uint64_t w : bits) count += static_cast<std::size_t>(__builtin_popcountll(w));
  return count;
}

// Keyed by coefficient vector; only the tightest constant is binding. The
// recorded history is the smallest among merged rows: understating the
// history keeps Imbert's redundancy test conservative, never lossy.
using FmSystem = std::map<std::vector<mpz_class>, FmTracked>;

void fm_insert(FmSystem& sys, FmTracked&& t) {
  std::vector<mpz_class> key(t.row.begin() + 1, t.row.end());
  auto it = sys.find(key);
  if (it == sys.end()) {
    sys.emplace(std::move(key), std::move(t));
    return;
  }
  FmTracked& kept = it->second;
  if (t.row[0] < kept.row[0]) kept.row = std::move(t.row);
  std::size_t pa = popcount(kept.ancestors), pb = popcount(t.ancestors);
  if (pb < pa || (pb == pa && t.ancestors < kept.ancestors))
    kept.ancestors = std::move(t.ancestors);
}

// Eliminates variable `var` (1-based position in the row). `elim_no` is the
// 1-based count of eliminations performed including this one. Returns false
// if a constant row certifies infeasibility.
bool fm_eliminate(FmSystem& sys, std::size_t var, std::size_t elim_no) {
  std::vector<const FmTracked*> pos, neg;
  FmSystem out;
  for (const auto& [key, t] : sys) {
    int s = sgn(t.row[var]);
    if (s > 0)
      pos.push_back(&t);
    else if (s < 0)
      neg.push_back(&t);
  }
  for (const auto& [key, t] : sys)
    if (sgn(t.row[var]) == 0) fm_insert(out, FmTracked(t));
  std::vector<std::uint64_t> anc;
  for (const FmTracked* p : pos) {
    for (const FmTracked* n : neg) {
      if (popcount_union(p->ancestors, n->ancestors, anc) > elim_no + 1)
        continue;  // Imbert: redundant combination
      FmRow combo(p->row.size());
      mpz_class np = -n->row[var];  // > 0
      const mpz_class& pv = p->row[var];
      for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] = np * p->row[i] + pv * n->row[i];
      assert(combo[var] == 0);
      normalize_row(combo);
      bool all_zero = std::all_of(combo.begin() + 1, combo.end(),
                                  [](const mpz_class& v) { return v == 0; });
      if (all_zero) {
        if (combo[0] < 0) return false;  // 0 >= positive constant: infeasible
        continue;
      }
      fm_insert(out, {std::move(combo), anc});
      if (out.size() > kFmRowCap)
        throw EngineError("Fourier-Motzkin elimination exceeded the row cap");
    }
  }
  sys = std::move(out);
  return true;
}

using Box = DerivedBox;

// Exact per-variable integer bounds by eliminating all other variables.
Box fm_bounds(const std::vector<FmRow>& base, std::size_t nvars) {
  Box box;
  box.lo.assign(nvars, 0);
  box.hi.assign(nvars, 0);
  for (std::size_t target = 0; target < nvars; ++target) {
    FmSystem rows;
    for (std::size_t i = 0; i < base.size(); ++i)
      fm_insert(rows, {base[i], FmTracked::singleton(i, base.size())});
    std::vector<std::size_t> todo;
    for (std::size_t v = 0; v < nvars; ++v)
      if (v != target) todo.push_back(v);
    std::size_t elim_no = 0;
    bool feasible = true;
    while (!todo.empty() && feasible) {
      // eliminate the variable with the fewest pos*neg combinations first
      std::size_t best = 0;
      std::size_t best_cost = static_cast<std::size_t>(-1);
      for (std::size_t i = 0; i < todo.size(); ++i) {
        std::size_t var = todo[i] + 1;
        std::size_t np = 0, nn = 0;
        for (const auto& [key, t] : rows) {
          int s = sgn(t.row[var]);
          if (s > 0) ++np;
          else if (s < 0) ++nn;
        }
        if (np * nn < best_cost) {
          best_cost = np * nn;
          best = i;
        }
      }
      std::size_t var = todo[best] + 1;
      todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(best));
      feasible = fm_eliminate(rows, var, ++elim_no);
    }
    if (!feasible) {
      box.feasible = false;
      return box;
    }
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const auto& [key, t] : rows) {
      int s = sgn(t.row[target + 1]);
      if (s == 0) {
        if (t.row[0] < 0) {
          box.feasible = false;
          return box;
        }
        continue;
      }
      // c + a*x >= 0  =>  x >= -c/a (a > 0)  or  x <= c/(-a) (a < 0)
      Rational bound(mpq_class(-t.row[0], t.row[target + 1]));
      if (s > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi)
      throw EngineError("unbounded system: no finite box for a free variable");
    mpz_class l = lo.ceil(), h = hi.floor();
    if (l > h) {
      box.feasible = false;
      return box;
    }
    if (!l.fits_slong_p() || !h.fits_slong_p())
      throw EngineError("derived bounds exceed machine range");
    box.lo[target] = l.get_si();
    box.hi[target] = h.get_si();
  }
  return box;
}

struct DedupedForm {
  std::vector<Rational> coeffs;
  Rational lo;  // always 0 for multiplicity forms
  Rational hi;  // min degree among duplicates
  Rational constant;
};

// Distinct constraint forms of the system, plus the normalization
// sum(nu) = 1 as an exact pseudo-form with interval [1, 1].
std::vector<DedupedForm> deduped_forms(const ConstraintSystem& system) {
  std::size_t n = system.free_indices.size();
  std::vector<DedupedForm> forms;
  for (const auto& mc : system.forms) {
    bool merged = false;
    for (auto& f : forms) {
      if (f.coeffs == mc.form.coeffs && f.constant == mc.form.constant) {
        if (mc.degree < f.hi) f.hi = mc.degree;
        merged = true;
        break;
      }
    }
    if (!merged) forms.push_back({mc.form.coeffs, Rational(0), mc.degree, mc.form.constant});
  }
  DedupedForm norm;
  norm.coeffs.assign(n, Rational(1));
  norm.constant = Rational(0);
  norm.lo = Rational(1);
  norm.hi = Rational(1);
  forms.push_back(std::move(norm));
  return forms;
}

std::vector<FmRow> system_rows(const std::vector<DedupedForm>& forms, std::size_t n) {
  std::vector<FmRow> rows;
  auto add_row = [&](const Rational& constant, const std::vector<Rational>& coeffs,
                     bool negate_coeffs) {
    mpz_class denom = constant.denominator();
    for (const auto& c : coeffs)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.denominator().get_mpz_t());
    auto scaled = [&](const Rational& v) {
      return mpz_class(v.numerator() * (denom / v.denominator()));
    };
    FmRow row(n + 1);
    row[0] = scaled(constant);
    for (std::size_t i = 0; i < n; ++i)
      row[i + 1] = negate_coeffs ? mpz_class(-scaled(coeffs[i])) : scaled(coeffs[i]);
    normalize_row(row);
    bool all_zero = std::all_of(row.begin() + 1, row.end(),
                                [](const mpz_class& v) { return v == 0; });
    if (!all_zero) rows.push_back(std::move(row));
  };
  for (const auto& f : forms) {
    add_row(f.constant - f.lo, f.coeffs, false);  // form - lo >= 0
    add_row(f.hi - f.constant, f.coeffs, true);   // hi - form >= 0
  }
  // same coefficient vector: only the tightest constant binds
  std::map<std::vector<mpz_class>, mpz_class> tight;
  for (const auto& r : rows) {
    std::vector<mpz_class> key(r.begin() + 1, r.end());
    auto it = tight.find(key);
    if (it == tight.end())
      tight.emplace(std::move(key), r[0]);
    else if (r[0] < it->second)
      it->second = r[0];
  }
  rows.clear();
  for (const auto& [key, c] : tight) {
    FmRow r;
    r.reserve(key.size() + 1);
    r.push_back(c);
    r.insert(r.end(), key.begin(), key.end());
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

DerivedBox derive_bounds(const ConstraintSystem& system) {
  std::size_t n = system.free_indices.size();
  if (n == 0) return {{}, {}, false};
  return fm_bounds(system_rows(deduped_forms(system), n), n);
}

std::vector<PartialAugmentationVector> enumerate_solutions(const ConstraintSystem& system) {
  std::size_t n = system.free_indices.size();
  std::vector<PartialAugmentationVector> result;
  if (n == 0) return result;  // normalization sum(nu) = 1 is unsatisfiable

  std::vector<DedupedForm> forms = deduped_forms(system);
  Box box = derive_bounds(system);
  if (!box.feasible) return result;

  // depth-first search with incremental interval propagation
  struct FormState {
    std::vector<Rational> coeffs;
    Rational lo, hi;
    Rational partial;   // constant + assigned part
    Rational min_rest;  // bounds contribution of unassigned vars
    Rational max_rest;
    int unassigned = 0;
  };
  std::vector<FormState> st;
  st.reserve(forms.size());
  for (const auto& f : forms) {
    FormState s;
    s.coeffs = f.coeffs;
    s.lo = f.lo;
    s.hi = f.hi;
    s.partial = f.constant;
    s.min_rest = Rational(0);
    s.max_rest = Rational(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (s.coeffs[i].is_zero()) continue;
      ++s.unassigned;
      Rational a = s.coeffs[i] * Rational(box.lo[i]);
      Rational b = s.coeffs[i] * Rational(box.hi[i]);
      s.min_rest += std::min(a, b);
      s.max_rest += std::max(a, b);
    }
    st.push_back(std::move(s));
  }

  // tighter variables first
  std::vector<std::size_t> var_order(n);
  for (std::size_t i = 0; i < n; ++i) var_order[i] = i;
  std::sort(var_order.begin(), var_order.end(), [&](std::size_t a, std::size_t b) {
    auto wa = box.hi[a] - box.lo[a], wb = box.hi[b] - box.lo[b];
    return wa != wb ? wa < wb : a < b;
  });

  std::vector<std::int64_t> assignment(n, 0);
  std::vector<std::int64_t> chosen;  // solutions, flattened

  auto feasible_all = [&]() {
    for (const auto& s : st) {
      if (s.partial + s.max_rest < s.lo) return false;
      if (s.partial + s.min_rest > s.hi) return false;
      if (s.unassigned == 0) {
        const Rational& v = s.partial;
        if (v < s.lo || v > s.hi || !v.is_integer()) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      chosen.insert(chosen.end(), assignment.begin(), assignment.end());
      return;
    }
    std::size_t var = var_order[depth];
    for (std::int64_t v = box.lo[var]; v <= box.hi[var]; ++v) {
      assignment[var] = v;
      // apply
      std::vector<std::pair<std::size_t, std::array<Rational, 3>>> saved;
      for (std::size_t fi = 0; fi < st.size(); ++fi) {
        FormState& s = st[fi];
        if (s.coeffs[var].is_zero()) continue;
        saved.push_back({fi, {s.partial, s.min_rest, s.max_rest}});
        Rational a = s.coeffs[var] * Rational(box.lo[var]);
        Rational b = s.coeffs[var] * Rational(box.hi[var]);
        s.min_rest -= std::min(a, b);
        s.max_rest -= std::max(a, b);
        s.partial += s.coeffs[var] * Rational(v);
        --s.unassigned;
      }
      if (feasible_all()) self(self, depth + 1);
      // undo
      for (auto& [fi, vals] : saved) {
        FormState& s = st[fi];
        s.partial = vals[0];
        s.min_rest = vals[1];
        s.max_rest = vals[2];
        ++s.unassigned;
      }
    }
    assignment[var] = 0;
  };
  dfs(dfs, 0);

  // expand to full class vectors, sort lexicographically
  std::size_t count = chosen.size() / n;
  for (std::size_t s = 0; s < count; ++s) {
    PartialAugmentationVector pav;
    pav.order = system.order;
    pav.values.assign(static_cast<std::size_t>(system.class_count), 0);
    for (std::size_t i = 0; i < n; ++i)
      pav.values[static_cast<std::size_t>(system.free_indices[i])] = chosen[s * n + i];
    result.push_back(std::move(pav));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Profiles and order-by-order analysis

std::vector<PowerProfile> power_profiles(const CharacterTable& table, std::int64_t k,
                                         const PriorSolutions& prior) {
  std::vector<std::int64_t> ds;  // proper powers, ascending
  for (std::int64_t d : divisors(k))
    if (d > 1 && d < k) ds.push_back(d);

  // candidate vectors per power order m = k/d: prior solutions plus central
  // indicators of element order exactly m
  std::map<std::int64_t, std::vector<PartialAugmentationVector>> candidates;
  for (std::int64_t d : ds) {
    std::int64_t m = k / d;
    if (candidates.count(m)) continue;
    auto it = prior.find(m);
    if (it == prior.end())
      throw EngineError("missing prior solution set for order " + std::to_string(m));
    std::vector<PartialAugmentationVector> cand = it->second.all_solutions();
    for (int j = 0; j < table.class_count(); ++j) {
      const ClassInfo& c = table.classes[static_cast<std::size_t>(j)];
      if (c.is_central() && c.element_order == m) {
        PartialAugmentationVector central;
        central.order = m;
        central.values.assign(static_cast<std::size_t>(table.class_count()), 0);
        central.values[static_cast<std::size_t>(j)] = 1;
        cand.push_back(std::move(central));
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    candidates.emplace(m, std::move(cand));
  }

  std::vector<PowerProfile> out;
  PowerProfile current;
  current.order = k;

  auto coherent = [&](const PowerProfile& p) {
    for (const auto& a : p.assignments) {
      int c = a.vector.single_support();
      if (c < 0) continue;
      if (table.power_class(c, a.power_order) != 0) return false;
      for (const auto& b : p.assignments) {
        if (b.power_order >= a.power_order || a.power_order % b.power_order != 0) continue;
        if (b.vector.single_support() !=
            table.power_class(c, a.power_order / b.power_order))
          return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == ds.size()) {
      if (coherent(current)) out.push_back(current);
      return;
    }
    std::int64_t d = ds[idx];
    for (const auto& cand : candidates.at(k / d)) {
      current.assignments.push_back({d, k / d, cand});
      self(self, idx + 1);
      current.assignments.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

SolutionSet analyze_order(const CharacterTable& table, std::int64_t k,
                          const PriorSolutions& prior) {
  auto orders = admissible_orders(table);
  if (std::find(orders.begin(), orders.end(), k) == orders.end())
    throw EngineError("order " + std::to_string(k) +
                      " does not divide the exponent of the group");
  SolutionSet set;
  set.order = k;
  for (const auto& profile : power_profiles(table, k, prior)) {
    ConstraintSystem sys = build_system(table, k, profile);
    set.entries.push_back({profile, enumerate_solutions(sys)});
  }
  return set;
}

AnalysisReport analyze_all(const CharacterTable& table, const AnalyzeOptions& options) {
  std::vector<std::int64_t> admissible = admissible_orders(table);
  std::set<std::int64_t> requested(options.orders.begin(), options.orders.end());
  for (std::int64_t r : requested)
    if (std::find(admissible.begin(), admissible.end(), r) == admissible.end())
      throw EngineError("requested order " + std::to_string(r) +
                        " does not divide the exponent of the group");
  std::set<std::int64_t> compute;
  for (std::int64_t k : admissible) {
    if (requested.empty() || requested.count(k)) {
      for (std::int64_t d : divisors(k))
        if (d > 1) compute.insert(d);
    }
  }

  AnalysisReport report;
  report.table = table;
  PriorSolutions prior;
  for (std::int64_t k : admissible) {
    if (!compute.count(k)) continue;
    SolutionSet set = analyze_order(table, k, prior);
    if (requested.empty() || requested.count(k)) {
      report.orders.push_back(k);
      report.by_order.emplace(k, set);
    }
    if (options.trivial_priors) {
      SolutionSet restricted;
      restricted.order = set.order;
      for (const auto& e : set.entries) {
        ProfileSolutions ps;
        ps.profile = e.profile;
        for (const auto& v : e.solutions)
          if (is_trivial_solution(table, v, e.profile)) ps.solutions.push_back(v);
        restricted.entries.push_back(std::move(ps));
      }
      prior.emplace(k, std::move(restricted));
    } else {
      prior.emplace(k, std::move(set));
    }
  }
  return report;
}

bool is_trivial_solution(const CharacterTable& table, const PartialAugmentationVector& v,
                         const PowerProfile& profile) {
  int c = v.single_support();
  if (c < 0) return false;
  if (table.power_class(c, v.order) != 0) return false;  // class order must divide k
  for (const auto& a : profile.assignments) {
    int expected = table.power_class(c, a.power);
    if (a.vector.single_support() != expected) return false;
  }
  return true;
}

}  // namespace zc1
