#include <doctest.h>

#include "support/oracles.hpp"
#include "zc1/engine.hpp"

using namespace zc1;

namespace {

PartialAugmentationVector indicator(const CharacterTable& t, std::int64_t order,
                                    const char* class_name) {
  PartialAugmentationVector v;
  v.order = order;
  v.values.assign(static_cast<std::size_t>(t.class_count()), 0);
  v.values[static_cast<std::size_t>(t.class_index(class_name))] = 1;
  return v;
}

std::vector<std::string> support_names(const CharacterTable& t,
                                       const PartialAugmentationVector& v) {
  std::vector<std::string> out;
  for (int j = 0; j < t.class_count(); ++j)
    if (v.values[static_cast<std::size_t>(j)] != 0)
      out.push_back(t.classes[static_cast<std::size_t>(j)].name + "=" +
                    std::to_string(v.values[static_cast<std::size_t>(j)]));
  return out;
}

Rational coeff_of(const CharacterTable& t, const ConstraintSystem& sys,
                  const AffineForm& form, const char* class_name) {
  int idx = t.class_index(class_name);
  for (std::size_t i = 0; i < sys.free_indices.size(); ++i)
    if (sys.free_indices[i] == idx) return form.coeffs[i];
  FAIL("class not free: ", class_name);
  return Rational(0);
}

const CharacterTable kTrivialGroup = parse_table(R"({
  "name": "1", "group_order": 1, "exponent": 1,
  "classes": [{"name": "1a", "order": 1, "size": 1, "power_map": {}}],
  "irreducibles": [[1]]})");

}  // namespace

TEST_CASE("admissible orders are the divisors of the exponent") {
  CHECK(admissible_orders(builtin_table("A4xS3")) == std::vector<std::int64_t>{2, 3, 6});
  CHECK(admissible_orders(builtin_table("S4xC2")) ==
        std::vector<std::int64_t>{2, 3, 4, 6, 12});
  CHECK(admissible_orders(kTrivialGroup).empty());
}

TEST_CASE("forced-zero classes") {
  const CharacterTable& t = builtin_table("A4xS3");
  auto names = [&](std::int64_t k) {
    std::vector<std::string> out;
    for (int j : forced_zero_classes(t, k))
      out.push_back(t.classes[static_cast<std::size_t>(j)].name);
    return out;
  };
  // k = 2: every class of order 3 or 6 dies
  CHECK(names(2) == std::vector<std::string>{"1a", "3a", "3b", "6a", "6b", "3c", "3d",
                                             "3e", "6c"});
  // k = 3: every class of order 2 or 6 dies
  CHECK(names(3) == std::vector<std::string>{"1a", "2a", "2b", "6a", "6b", "2c", "6c"});
  // k = 6: every prime divides k, so only the identity is forced; the
  // vanishing the classical analysis states for the order-2/3 classes is a
  // consequence of the constraints, not an a-priori rule
  CHECK(names(6) == std::vector<std::string>{"1a"});

  // central classes are always forced
  const CharacterTable& s = builtin_table("S4xC2");
  auto forced2 = forced_zero_classes(s, 2);
  CHECK(std::find(forced2.begin(), forced2.end(), s.class_index("2b")) != forced2.end());
}

TEST_CASE("multiplicity forms reproduce the published order-2 system") {
  const CharacterTable& t = builtin_table("A4xS3");
  PowerProfile profile;
  profile.order = 2;
  ConstraintSystem sys = build_system(t, 2, profile);
  CHECK(sys.free_indices.size() == 3);  // 2a, 2b, 2c

  auto form = [&](int chi, std::int64_t l) { return multiplicity_form(t, 2, profile, chi, l); };
  // mu_0(u, chi_2) = (1 + nu_2a - nu_2b - nu_2c)/2
  AffineForm m02 = form(1, 0);
  CHECK(m02.constant == Rational(1, 2));
  CHECK(coeff_of(t, sys, m02, "2a") == Rational(1, 2));
  CHECK(coeff_of(t, sys, m02, "2b") == Rational(-1, 2));
  CHECK(coeff_of(t, sys, m02, "2c") == Rational(-1, 2));
  // mu_1(u, chi_2) = (1 - nu_2a + nu_2b + nu_2c)/2
  AffineForm m12 = form(1, 1);
  CHECK(m12.constant == Rational(1, 2));
  CHECK(coeff_of(t, sys, m12, "2a") == Rational(-1, 2));
  // mu_0(u, chi_7) = nu_2a + 1 and mu_1(u, chi_7) = 1 - nu_2a
  AffineForm m07 = form(6, 0);
  CHECK(m07.constant == Rational(1));
  CHECK(coeff_of(t, sys, m07, "2a") == Rational(1));
  CHECK(coeff_of(t, sys, m07, "2b") == Rational(0));
  AffineForm m17 = form(6, 1);
  CHECK(m17.constant == Rational(1));
  CHECK(coeff_of(t, sys, m17, "2a") == Rational(-1));
  // mu_0(u, chi_11) = (3 - nu_2a + 3 nu_2b - nu_2c)/2
  AffineForm m011 = form(10, 0);
  CHECK(m011.constant == Rational(3, 2));
  CHECK(coeff_of(t, sys, m011, "2a") == Rational(-1, 2));
  CHECK(coeff_of(t, sys, m011, "2b") == Rational(3, 2));
  CHECK(coeff_of(t, sys, m011, "2c") == Rational(-1, 2));
}

TEST_CASE("multiplicity forms reproduce the published order-3 system") {
  const CharacterTable& t = builtin_table("A4xS3");
  PowerProfile profile;
  profile.order = 3;
  ConstraintSystem sys = build_system(t, 3, profile);
  CHECK(sys.free_indices.size() == 5);  // 3a .. 3e

  // mu_0(u, chi_10) = 2 nu_3c + 1
  AffineForm m = multiplicity_form(t, 3, profile, 9, 0);
  CHECK(m.constant == Rational(1));
  CHECK(coeff_of(t, sys, m, "3c") == Rational(2));
  CHECK(coeff_of(t, sys, m, "3a") == Rational(0));
  // mu_0(u, chi_3) = (-nu1 - nu2 + 2 nu3 - nu4 - nu5 + 1)/3
  AffineForm m3 = multiplicity_form(t, 3, profile, 2, 0);
  CHECK(m3.constant == Rational(1, 3));
  CHECK(coeff_of(t, sys, m3, "3a") == Rational(-1, 3));
  CHECK(coeff_of(t, sys, m3, "3c") == Rational(2, 3));
  // mu_0(u, chi_7) = (4 nu1 + 4 nu2 - 2 nu3 - 2 nu4 - 2 nu5 + 2)/3
  AffineForm m7 = multiplicity_form(t, 3, profile, 6, 0);
  CHECK(m7.constant == Rational(2, 3));
  CHECK(coeff_of(t, sys, m7, "3a") == Rational(4, 3));
  CHECK(coeff_of(t, sys, m7, "3c") == Rational(-2, 3));
}

TEST_CASE("trivial character forms evaluate to 1 at l = 0 and 0 otherwise") {
  const CharacterTable& t = builtin_table("S4xC2");
  PowerProfile profile;
  profile.order = 2;
  ConstraintSystem sys = build_system(t, 2, profile);
  std::size_t n = sys.free_indices.size();
  // arbitrary integer points on the normalization hyperplane
  std::vector<std::vector<std::int64_t>> points = {
      {1, 0, 0, 0, 0, 0}, {0, -2, 3, 0, 0, 0}, {5, -1, -1, -2, 1, -1}};
  for (auto& x : points) {
    REQUIRE(x.size() == n);
    for (std::int64_t l = 0; l < 2; ++l) {
      AffineForm f = multiplicity_form(t, 2, profile, 0, l);
      CHECK(f.eval(x) == Rational(l == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("telescoping: the forms of one character sum to its degree exactly") {
  auto check_table = [](const CharacterTable& t, std::int64_t k, const PowerProfile& prof) {
    ConstraintSystem sys = build_system(t, k, prof);
    for (int chi = 0; chi < t.class_count(); ++chi) {
      Rational const_sum(0);
      std::vector<Rational> coeff_sum(sys.free_indices.size(), Rational(0));
      for (const auto& mc : sys.forms) {
        if (mc.character != chi) continue;
        const_sum += mc.form.constant;
        for (std::size_t i = 0; i < coeff_sum.size(); ++i)
          coeff_sum[i] += mc.form.coeffs[i];
      }
      CHECK(const_sum == t.degree(chi));
      for (const auto& c : coeff_sum) CHECK(c == Rational(0));
    }
  };

  const CharacterTable& a = builtin_table("A4xS3");
  PowerProfile p2;
  p2.order = 2;
  check_table(a, 2, p2);
  PowerProfile p3;
  p3.order = 3;
  check_table(a, 3, p3);
  // order 6 under the trivial profile of a 6a element
  check_table(a, 6, oracles::trivial_profile(a, a.class_index("6a"), 6));
  // a nontrivial chain vector also telescopes
  const CharacterTable& s = builtin_table("S4xC2");
  PriorSolutions prior;
  for (std::int64_t k : {2, 3}) prior.emplace(k, analyze_order(s, k, prior));
  for (const auto& prof : power_profiles(s, 4, prior)) check_table(s, 4, prof);
}

TEST_CASE("published solution sets at orders 2 and 3") {
  const CharacterTable& t = builtin_table("A4xS3");
  SolutionSet s2 = analyze_order(t, 2, {});
  REQUIRE(s2.entries.size() == 1);
  CHECK(s2.all_solutions() ==
        std::vector<PartialAugmentationVector>{indicator(t, 2, "2c"), indicator(t, 2, "2b"),
                                               indicator(t, 2, "2a")});
  SolutionSet s3 = analyze_order(t, 3, {});
  CHECK(s3.all_solutions().size() == 5);
  for (const char* c : {"3a", "3b", "3c", "3d", "3e"}) {
    auto v = indicator(t, 3, c);
    auto all = s3.all_solutions();
    CHECK(std::find(all.begin(), all.end(), v) != all.end());
  }
}

TEST_CASE("order 6 case analysis of A4 x S3") {
  const CharacterTable& t = builtin_table("A4xS3");
  PriorSolutions prior;
  prior.emplace(2, analyze_order(t, 2, prior));
  prior.emplace(3, analyze_order(t, 3, prior));

  auto profiles = power_profiles(t, 6, prior);
  CHECK(profiles.size() == 15);  // 3 involution choices x 5 order-3 choices

  SolutionSet s6 = analyze_order(t, 6, prior);
  int infeasible = 0;
  std::map<std::string, std::string> survivor_by_profile;
  for (const auto& e : s6.entries) {
    if (e.solutions.empty()) {
      ++infeasible;
      continue;
    }
    const auto* u2 = e.profile.vector_for_power(2);
    const auto* u3 = e.profile.vector_for_power(3);
    REQUIRE(u2 != nullptr);
    REQUIRE(u3 != nullptr);
    std::string key = t.classes[static_cast<std::size_t>(u3->single_support())].name + "," +
                      t.classes[static_cast<std::size_t>(u2->single_support())].name;
    REQUIRE(e.solutions.size() == 1);
    survivor_by_profile[key] = support_names(t, e.solutions[0])[0];
  }
  // the three feasible cases carry exactly the trivial units of 6a, 6b, 6c
  CHECK(infeasible == 12);
  REQUIRE(survivor_by_profile.size() == 3);
  CHECK(survivor_by_profile.at("2b,3b") == "6a=1");
  CHECK(survivor_by_profile.at("2b,3a") == "6b=1");
  CHECK(survivor_by_profile.at("2a,3c") == "6c=1");
  for (const auto& e : s6.entries)
    for (const auto& v : e.solutions) CHECK(is_trivial_solution(t, v, e.profile));
}

TEST_CASE("involutions of S4 x C2: 4 trivial and 22 nontrivial candidates") {
  const CharacterTable& t = builtin_table("S4xC2");
  SolutionSet s2 = analyze_order(t, 2, {});
  REQUIRE(s2.entries.size() == 1);
  int trivial = 0, nontrivial = 0;
  for (const auto& v : s2.entries[0].solutions) {
    if (is_trivial_solution(t, v, s2.entries[0].profile))
      ++trivial;
    else
      ++nontrivial;
  }
  CHECK(trivial == 4);
  CHECK(nontrivial == 22);

  // among the 22, exactly 20 carry a nonzero total on the order-4 classes
  int order4_loaded = 0;
  int i4a = t.class_index("4a"), i4b = t.class_index("4b");
  for (const auto& v : s2.entries[0].solutions) {
    if (is_trivial_solution(t, v, s2.entries[0].profile)) continue;
    if (v.values[static_cast<std::size_t>(i4a)] + v.values[static_cast<std::size_t>(i4b)] != 0)
      ++order4_loaded;
  }
  CHECK(order4_loaded == 20);

  // the two famous exceptional vectors are present
  PartialAugmentationVector v1, v2;
  v1.order = v2.order = 2;
  v1.values.assign(10, 0);
  v2.values.assign(10, 0);
  v1.values[static_cast<std::size_t>(t.class_index("2a"))] = 1;
  v1.values[static_cast<std::size_t>(i4a)] = -1;
  v1.values[static_cast<std::size_t>(i4b)] = 1;
  v2.values[static_cast<std::size_t>(t.class_index("2d"))] = 1;
  v2.values[static_cast<std::size_t>(i4a)] = 1;
  v2.values[static_cast<std::size_t>(i4b)] = -1;
  auto all = s2.all_solutions();
  CHECK(std::find(all.begin(), all.end(), v1) != all.end());
  CHECK(std::find(all.begin(), all.end(), v2) != all.end());
}

TEST_CASE("normalization alone pins a unique involution class") {
  // C2 x C2-free example: S4 at order 12 has no coherent profile at all
  const CharacterTable& s4 = builtin_table("S4");
  PriorSolutions prior;
  for (std::int64_t k : {2, 3, 4, 6}) prior.emplace(k, analyze_order(s4, k, prior));
  CHECK(power_profiles(s4, 12, prior).empty());
}

TEST_CASE("enumeration equals the brute-force box scan (<= 6 free variables)") {
  auto check_systems = [](const CharacterTable& t, std::int64_t max_order) {
    PriorSolutions prior;
    for (std::int64_t k : admissible_orders(t)) {
      if (k > max_order) break;
      SolutionSet set;
      set.order = k;
      for (const auto& prof : power_profiles(t, k, prior)) {
        ConstraintSystem sys = build_system(t, k, prof);
        auto solutions = enumerate_solutions(sys);
        if (sys.free_indices.size() <= 6) {
          auto scanned = oracles::scan_box(sys, derive_bounds(sys));
          CHECK(scanned == solutions);
        }
        set.entries.push_back({prof, std::move(solutions)});
      }
      prior.emplace(k, std::move(set));
    }
  };
  check_systems(builtin_table("A4xS3"), 3);
  check_systems(builtin_table("S4"), 6);
  check_systems(builtin_table("S4xC2"), 4);
}

TEST_CASE("trivial units satisfy their systems and match direct evaluation") {
  std::vector<const CharacterTable*> tables;
  for (const auto& name : builtin_table_names()) tables.push_back(&builtin_table(name));

  for (const CharacterTable* tp : tables) {
    const CharacterTable& t = *tp;
    for (int c = 1; c < t.class_count(); ++c) {
      if (t.classes[static_cast<std::size_t>(c)].is_central()) continue;
      std::int64_t k = t.classes[static_cast<std::size_t>(c)].element_order;
      PowerProfile profile = oracles::trivial_profile(t, c, k);
      ConstraintSystem sys = build_system(t, k, profile);

      std::vector<std::int64_t> x(sys.free_indices.size(), 0);
      for (std::size_t i = 0; i < sys.free_indices.size(); ++i)
        if (sys.free_indices[i] == c) x[i] = 1;

      for (const auto& mc : sys.forms) {
        Rational value = mc.form.eval(x);
        CHECK(value.is_integer());
        CHECK(value.sign() >= 0);
        CHECK(value <= mc.degree);
        // direct evaluation of the trace formula with chi(u^d) = chi(c^d)
        Rational direct(0);
        for (std::int64_t d : divisors(k)) {
          std::int64_t m = k / d;
          Cyclotomic val = t.value(mc.character, t.power_class(c, d));
          direct += normalized_trace(val * Cyclotomic::root_of_unity(m, -mc.residue), m);
        }
        direct = direct / Rational(k);
        CHECK(value == direct);
      }

      // the indicator vector is among the enumerated solutions
      auto sols = enumerate_solutions(sys);
      PartialAugmentationVector expect;
      expect.order = k;
      expect.values.assign(static_cast<std::size_t>(t.class_count()), 0);
      expect.values[static_cast<std::size_t>(c)] = 1;
      CHECK(std::find(sols.begin(), sols.end(), expect) != sols.end());
      CHECK(is_trivial_solution(t, expect, profile));
    }
  }
}

TEST_CASE("profile machinery") {
  const CharacterTable& t = builtin_table("S4xC2");
  PriorSolutions prior;
  SolutionSet s2 = analyze_order(t, 2, {});
  // keep only the four genuine involutions as priors
  SolutionSet trivial2;
  trivial2.order = 2;
  for (const auto& e : s2.entries) {
    ProfileSolutions ps;
    ps.profile = e.profile;
    for (const auto& v : e.solutions)
      if (is_trivial_solution(t, v, e.profile)) ps.solutions.push_back(v);
    trivial2.entries.push_back(ps);
  }
  prior.emplace(2, trivial2);

  // 4 trivial involutions + the central class 2b as chi(u^2) options
  auto profs4 = power_profiles(t, 4, prior);
  CHECK(profs4.size() == 5);
  bool found_central = false;
  for (const auto& p : profs4) {
    int c = p.assignments[0].vector.single_support();
    if (c == t.class_index("2b")) found_central = true;
  }
  CHECK(found_central);

  // order 6 requires priors for 2 and 3
  CHECK_THROWS_AS(power_profiles(t, 6, prior), EngineError);
  prior.emplace(3, analyze_order(t, 3, prior));
  auto profs6 = power_profiles(t, 6, prior);
  CHECK(profs6.size() == 5);

  // prime order: a single empty profile
  auto profs2 = power_profiles(t, 2, {});
  REQUIRE(profs2.size() == 1);
  CHECK(profs2[0].assignments.empty());

  // incoherent profiles are rejected by the builder
  PowerProfile bad;
  bad.order = 4;
  PowerAssignment a;
  a.power = 2;
  a.power_order = 2;
  a.vector.order = 2;
  a.vector.values.assign(10, 0);
  a.vector.values[static_cast<std::size_t>(t.class_index("4a"))] = 1;  // order-4 class
  bad.assignments.push_back(a);
  CHECK_THROWS_AS(build_system(t, 4, bad), EngineError);
}

TEST_CASE("analyze_order rejects inadmissible orders") {
  CHECK_THROWS_AS(analyze_order(builtin_table("A4xS3"), 5, {}), EngineError);
  CHECK_THROWS_AS(analyze_all(builtin_table("A4xS3"), {.orders = {5}}), EngineError);
}

TEST_CASE("analyze_all is deterministic and covers the admissible orders") {
  const CharacterTable& t = builtin_table("A4xS3");
  AnalysisReport r1 = analyze_all(t);
  AnalysisReport r2 = analyze_all(t);
  CHECK(r1.orders == std::vector<std::int64_t>{2, 3, 6});
  REQUIRE(r2.orders == r1.orders);
  for (std::int64_t k : r1.orders) {
    CHECK(r1.by_order.at(k).all_solutions() == r2.by_order.at(k).all_solutions());
    CHECK(r1.by_order.at(k).entries.size() == r2.by_order.at(k).entries.size());
  }
  // order filter computes priors silently but reports only what was asked
  AnalysisReport r6 = analyze_all(t, {.orders = {6}});
  CHECK(r6.orders == std::vector<std::int64_t>{6});
  CHECK(r6.by_order.at(6).all_solutions() == r1.by_order.at(6).all_solutions());
}

TEST_CASE("S4 at order 2 keeps five nontrivial candidates") {
  // the constraint method alone does not settle S4 involutions; the five
  // nontrivial vectors below survive every multiplicity constraint
  const CharacterTable& t = builtin_table("S4");
  SolutionSet s2 = analyze_order(t, 2, {});
  auto all = s2.all_solutions();
  CHECK(all.size() == 7);
  int trivial = 0;
  for (const auto& v : all)
    if (is_trivial_solution(t, v, s2.entries[0].profile)) ++trivial;
  CHECK(trivial == 2);
  // spot-check one survivor: (nu_2a, nu_2b, nu_4a) = (-1, 1, 1)
  PartialAugmentationVector v;
  v.order = 2;
  v.values = {0, -1, 1, 0, 1};
  CHECK(std::find(all.begin(), all.end(), v) != all.end());
}

TEST_CASE("unbounded systems are reported as a distinct failure") {
  // x - y bounded and x + y + z = 1 leave the direction (1, 1, -2) free
  ConstraintSystem sys;
  sys.order = 2;
  sys.class_count = 4;
  sys.free_indices = {1, 2, 3};
  MultiplicityConstraint mc;
  mc.character = 0;
  mc.residue = 0;
  mc.form.constant = Rational(0);
  mc.form.coeffs = {Rational(1), Rational(-1), Rational(0)};
  mc.degree = Rational(5);
  sys.forms.push_back(mc);
  CHECK_THROWS_WITH_AS(enumerate_solutions(sys), doctest::Contains("unbounded"),
                       EngineError);
}
