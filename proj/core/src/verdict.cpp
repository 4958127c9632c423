#include "zc1/verdict.hpp"

#include <algorithm>

#include "zc1/numtheory.hpp"

namespace zc1 {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Proved: return "Proved";
    case VerdictKind::OpenWithCandidates: return "OpenWithCandidates";
    case VerdictKind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

bool is_trivial(const PartialAugmentationVector& v, const PowerProfile& profile) {
  if (v.single_support() < 0) return false;
  for (const auto& a : profile.assignments)
    if (a.vector.single_support() < 0) return false;
  return true;
}

SolutionSet quotient_filter(const SolutionSet& solutions, const ClassFusion& fusion,
                            const CharacterTable& source,
                            const AnalysisReport& quotient_report) {
  const CharacterTable& target = quotient_report.table;
  ValidationReport fus_rep = validate_fusion(fusion, source, target);
  if (!fus_rep.ok())
    throw EngineError("fusion does not match the tables:\n" + fus_rep.str());

  std::int64_t k = solutions.order;
  // the report must cover every admissible quotient order dividing k,
  // otherwise genuine images could be filtered away
  for (std::int64_t q : admissible_orders(target))
    if (k % q == 0 && !quotient_report.by_order.count(q))
      throw EngineError("quotient report misses order " + std::to_string(q));
  // quotient solutions at orders dividing k, for the membership clause
  std::vector<PartialAugmentationVector> acceptable;
  for (const auto& [order, set] : quotient_report.by_order) {
    if (order <= 1 || k % order != 0) continue;
    auto sols = set.all_solutions();
    acceptable.insert(acceptable.end(), sols.begin(), sols.end());
  }

  auto keeps = [&](const PartialAugmentationVector& v) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(target.class_count()), 0);
    for (int c = 0; c < source.class_count(); ++c)
      w[static_cast<std::size_t>(fusion.map[static_cast<std::size_t>(c)])] +=
          v.values[static_cast<std::size_t>(c)];

    int support = -1;
    bool single = true;
    for (std::size_t d = 0; d < w.size(); ++d) {
      if (w[d] == 0) continue;
      if (support >= 0 || w[d] != 1) {
        single = false;
        break;
      }
      support = static_cast<int>(d);
    }
    if (single && support == 0) return true;  // image is the identity
    if (single && support > 0 &&
        k % target.classes[static_cast<std::size_t>(support)].element_order == 0)
      return true;  // image is a trivial unit of order dividing k
    for (const auto& q : acceptable)
      if (q.values == w) return true;
    return false;
  };

  SolutionSet out;
  out.order = solutions.order;
  for (const auto& e : solutions.entries) {
    ProfileSolutions ps;
    ps.profile = e.profile;
    for (const auto& v : e.solutions)
      if (keeps(v)) ps.solutions.push_back(v);
    out.entries.push_back(std::move(ps));
  }
  return out;
}

SolutionSet c2_sign_filter(const SolutionSet& solutions, const CharacterTable& table,
                           bool factor_zc1_known) {
  std::vector<int> partner;
  bool found = false;
  for (int z : central_involution_classes(table)) {
    if (auto pairing = derive_c2_pairing(table, z)) {
      partner = *pairing;
      found = true;
      break;
    }
  }
  if (!found)
    throw EngineError(
        "table lacks C2 pairing metadata: no central involution induces a "
        "consistent class pairing");
  if (!factor_zc1_known) return solutions;  // nothing may be asserted

  auto keeps = [&](const PartialAugmentationVector& v) {
    int pairs_summing_one = 0;
    for (int c = 0; c < table.class_count(); ++c) {
      int d = partner[static_cast<std::size_t>(c)];
      if (d < c) continue;  // visit each pair once
      std::int64_t n1 = v.values[static_cast<std::size_t>(c)];
      std::int64_t n2 = v.values[static_cast<std::size_t>(d)];
      std::int64_t sum = n1 + n2, diff = n1 - n2;
      if (sum != 0 && sum != 1) return false;
      if (diff < -1 || diff > 1) return false;
      if (sum == 0 && n1 != 0) return false;  // pair must vanish entirely
      if (sum == 1) ++pairs_summing_one;      // here {n1, n2} = {0, 1} given diff
    }
    return pairs_summing_one == 1;
  };

  SolutionSet out;
  out.order = solutions.order;
  for (const auto& e : solutions.entries) {
    ProfileSolutions ps;
    ps.profile = e.profile;
    for (const auto& v : e.solutions)
      if (keeps(v)) ps.solutions.push_back(v);
    out.entries.push_back(std::move(ps));
  }
  return out;
}

SolutionSet restrict_to_trivial(const CharacterTable& table, const SolutionSet& set) {
  SolutionSet out;
  out.order = set.order;
  for (const auto& e : set.entries) {
    ProfileSolutions ps;
    ps.profile = e.profile;
    for (const auto& v : e.solutions)
      if (is_trivial_solution(table, v, e.profile)) ps.solutions.push_back(v);
    out.entries.push_back(std::move(ps));
  }
  return out;
}

AnalysisReport restrict_to_trivial(const AnalysisReport& report) {
  AnalysisReport out;
  out.table = report.table;
  out.orders = report.orders;
  for (const auto& [k, set] : report.by_order)
    out.by_order.emplace(k, restrict_to_trivial(report.table, set));
  return out;
}

namespace {

OrderVerdict classify_order(const CharacterTable& table, const SolutionSet& set) {
  OrderVerdict ov;
  ov.order = set.order;
  for (const auto& e : set.entries) {
    for (const auto& v : e.solutions) {
      if (is_trivial_solution(table, v, e.profile))
        ++ov.trivial_count;
      else if (is_trivial(v, e.profile))
        ++ov.order_excluded_count;
      else
        ov.nontrivial.push_back({e.profile, v});
    }
  }
  return ov;
}

}  // namespace

Verdict zc1_verdict(const CharacterTable& table,
                    const std::map<std::int64_t, SolutionSet>& survivors,
                    std::vector<std::string> applied_filters) {
  Verdict verdict;
  verdict.applied_filters = std::move(applied_filters);
  bool open = false;
  for (const auto& [k, set] : survivors) {
    OrderVerdict ov = classify_order(table, set);
    open = open || !ov.nontrivial.empty();
    verdict.per_order.push_back(std::move(ov));
  }
  verdict.kind = open ? VerdictKind::OpenWithCandidates : VerdictKind::Proved;
  return verdict;
}

Verdict p_zc3_verdict(const CharacterTable& table,
                      const std::map<std::int64_t, SolutionSet>& survivors, std::int64_t p) {
  if (!is_prime(p) || table.group_order % p != 0)
    throw std::invalid_argument("p_zc3_verdict: p = " + std::to_string(p) +
                                " is not a prime dividing the group order");
  std::int64_t p_part = 1;
  std::int64_t rest = table.group_order;
  while (rest % p == 0) {
    p_part *= p;
    rest /= p;
  }
  Verdict verdict;
  bool open = false;
  for (std::int64_t q = p; q <= p_part; q *= p) {
    if (table.exponent % q != 0) break;  // no elements (or units) of that order
    auto it = survivors.find(q);
    if (it == survivors.end()) {
      verdict.kind = VerdictKind::NotApplicable;  // order q was not analyzed
      return verdict;
    }
    OrderVerdict ov = classify_order(table, it->second);
    open = open || !ov.nontrivial.empty();
    verdict.per_order.push_back(std::move(ov));
  }
  verdict.kind = open ? VerdictKind::OpenWithCandidates : VerdictKind::Proved;
  return verdict;
}

bool unique_class_shortcut(const CharacterTable& table, std::int64_t k, bool* inconsistent) {
  if (inconsistent) *inconsistent = false;
  std::size_t forced = forced_zero_classes(table, k).size();
  std::size_t free_count = static_cast<std::size_t>(table.class_count()) - forced;
  if (free_count == 0 && inconsistent) *inconsistent = true;
  return free_count == 1;
}

}  // namespace zc1
