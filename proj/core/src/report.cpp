#include "zc1/report.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "zc1/numtheory.hpp"

namespace zc1 {

using ordered_json = nlohmann::ordered_json;

FullAnalysis analyze_with_filters(const CharacterTable& table, const FilterConfig& config) {
  FullAnalysis out;
  out.base = analyze_all(table, config.analyze);
  out.trivial_priors = config.analyze.trivial_priors;

  std::vector<std::string> filter_names;
  const std::map<std::int64_t, SolutionSet>* current = &out.base.by_order;

  if (config.fusion) {
    if (!config.quotient)
      throw EngineError("quotient filter requested without a quotient table");
    AnalysisReport quotient_report = analyze_all(*config.quotient);
    bool assume = config.quotient_zc1_known || config.fusion->target_zc1_known;
    if (assume) quotient_report = restrict_to_trivial(quotient_report);
    FilterStep step;
    step.name = "quotient:" + config.quotient->name + (assume ? " (ZC-1 known)" : "");
    for (const auto& [k, set] : *current)
      step.after.emplace(k, quotient_filter(set, *config.fusion, table, quotient_report));
    filter_names.push_back(step.name);
    out.filters.push_back(std::move(step));
    current = &out.filters.back().after;
  }

  if (config.c2_sign) {
    FilterStep step;
    step.name = std::string("c2-sign") +
                (config.factor_zc1_known ? " (factor ZC-1 known)" : " (no-op: factor not asserted)");
    for (const auto& [k, set] : *current)
      step.after.emplace(k, c2_sign_filter(set, table, config.factor_zc1_known));
    filter_names.push_back(step.name);
    out.filters.push_back(std::move(step));
    current = &out.filters.back().after;
  }

  out.zc1 = zc1_verdict(table, *current, filter_names);
  for (std::int64_t p : prime_factors(table.group_order))
    out.p_zc3.emplace_back(p, p_zc3_verdict(table, *current, p));
  return out;
}

namespace {

std::string vector_support(const CharacterTable& t, const PartialAugmentationVector& v) {
  std::string s;
  for (int j = 0; j < t.class_count(); ++j) {
    if (v.values[static_cast<std::size_t>(j)] == 0) continue;
    if (!s.empty()) s += " ";
    s += t.classes[static_cast<std::size_t>(j)].name + "=" +
         std::to_string(v.values[static_cast<std::size_t>(j)]);
  }
  return s.empty() ? "0" : s;
}

std::string profile_label(const CharacterTable& t, const PowerProfile& p) {
  if (p.assignments.empty()) return "chi(u^" + std::to_string(p.order) + ")=chi(1)";
  std::string s;
  for (const auto& a : p.assignments) {
    if (!s.empty()) s += ", ";
    int c = a.vector.single_support();
    s += "chi(u^" + std::to_string(a.power) + ")=";
    s += c >= 0 ? "chi(" + t.classes[static_cast<std::size_t>(c)].name + ")"
                : "<nontrivial order-" + std::to_string(a.power_order) + " choice: " +
                      vector_support(t, a.vector) + ">";
  }
  return s;
}

const char* classification_of(const CharacterTable& t, const PartialAugmentationVector& v,
                              const PowerProfile& prof) {
  if (is_trivial_solution(t, v, prof)) return "trivial";
  if (is_trivial(v, prof)) return "order_excluded";
  return "nontrivial";
}

void render_sets_text(std::ostringstream& os, const CharacterTable& t,
                      const std::map<std::int64_t, SolutionSet>& sets, bool with_structure) {
  for (const auto& [k, set] : sets) {
    os << "order " << k << "\n";
    if (with_structure) {
      auto forced = forced_zero_classes(t, k);
      os << "  forced zero:";
      for (int j : forced) os << " " << t.classes[static_cast<std::size_t>(j)].name;
      os << "\n  free:";
      std::set<int> forced_set(forced.begin(), forced.end());
      for (int j = 0; j < t.class_count(); ++j)
        if (!forced_set.count(j)) os << " " << t.classes[static_cast<std::size_t>(j)].name;
      os << "\n";
    }
    int trivial = 0, excluded = 0, nontrivial = 0, infeasible = 0;
    for (std::size_t i = 0; i < set.entries.size(); ++i) {
      const auto& e = set.entries[i];
      os << "  case " << (i + 1) << ": " << profile_label(t, e.profile) << "\n";
      if (e.solutions.empty()) {
        os << "    no integral solutions\n";
        ++infeasible;
        continue;
      }
      for (const auto& v : e.solutions) {
        const char* cls = classification_of(t, v, e.profile);
        os << "    solution: " << vector_support(t, v) << "  [" << cls << "]\n";
        if (cls[0] == 't')
          ++trivial;
        else if (cls[0] == 'o')
          ++excluded;
        else
          ++nontrivial;
      }
    }
    os << "  summary: " << set.entries.size() << " case(s), " << infeasible
       << " without solutions; " << trivial << " trivial, " << excluded
       << " order-excluded, " << nontrivial << " nontrivial\n";
  }
}

ordered_json vector_json(const PartialAugmentationVector& v) {
  ordered_json out;
  out["order"] = v.order;
  out["values"] = v.values;
  return out;
}

ordered_json profile_json(const CharacterTable& t, const PowerProfile& p) {
  ordered_json powers = ordered_json::array();
  for (const auto& a : p.assignments) {
    ordered_json ja;
    ja["power"] = a.power;
    ja["order"] = a.power_order;
    int c = a.vector.single_support();
    if (c >= 0) ja["class"] = t.classes[static_cast<std::size_t>(c)].name;
    ja["values"] = a.vector.values;
    powers.push_back(std::move(ja));
  }
  return powers;
}

ordered_json sets_json(const CharacterTable& t, const std::map<std::int64_t, SolutionSet>& sets,
                       bool with_structure) {
  ordered_json orders = ordered_json::array();
  for (const auto& [k, set] : sets) {
    ordered_json jo;
    jo["order"] = k;
    if (with_structure) {
      auto forced = forced_zero_classes(t, k);
      std::set<int> forced_set(forced.begin(), forced.end());
      ordered_json fz = ordered_json::array(), fr = ordered_json::array();
      for (int j = 0; j < t.class_count(); ++j) {
        const auto& name = t.classes[static_cast<std::size_t>(j)].name;
        if (forced_set.count(j))
          fz.push_back(name);
        else
          fr.push_back(name);
      }
      jo["forced_zero"] = std::move(fz);
      jo["free_classes"] = std::move(fr);
    }
    ordered_json cases = ordered_json::array();
    int trivial = 0, excluded = 0, nontrivial = 0;
    for (const auto& e : set.entries) {
      ordered_json jc;
      jc["powers"] = profile_json(t, e.profile);
      ordered_json sols = ordered_json::array();
      for (const auto& v : e.solutions) {
        ordered_json js = vector_json(v);
        const char* cls = classification_of(t, v, e.profile);
        js["classification"] = cls;
        if (cls[0] == 't')
          ++trivial;
        else if (cls[0] == 'o')
          ++excluded;
        else
          ++nontrivial;
        sols.push_back(std::move(js));
      }
      jc["solutions"] = std::move(sols);
      cases.push_back(std::move(jc));
    }
    jo["cases"] = std::move(cases);
    jo["counts"] = {{"trivial", trivial},
                    {"order_excluded", excluded},
                    {"nontrivial", nontrivial}};
    orders.push_back(std::move(jo));
  }
  return orders;
}

ordered_json verdict_json(const CharacterTable& t, const Verdict& v) {
  ordered_json out;
  out["kind"] = to_string(v.kind);
  ordered_json per_order = ordered_json::array();
  for (const auto& ov : v.per_order) {
    ordered_json jo;
    jo["order"] = ov.order;
    jo["trivial"] = ov.trivial_count;
    jo["order_excluded"] = ov.order_excluded_count;
    ordered_json nts = ordered_json::array();
    for (const auto& ref : ov.nontrivial) {
      ordered_json jn = vector_json(ref.vector);
      jn["support"] = vector_support(t, ref.vector);
      jn["powers"] = profile_json(t, ref.profile);
      nts.push_back(std::move(jn));
    }
    jo["nontrivial"] = std::move(nts);
    per_order.push_back(std::move(jo));
  }
  out["per_order"] = std::move(per_order);
  if (!v.applied_filters.empty()) out["filters"] = v.applied_filters;
  return out;
}

}  // namespace

std::string render_text(const FullAnalysis& analysis) {
  const CharacterTable& t = analysis.base.table;
  std::ostringstream os;
  os << "table " << t.name << ": group order " << t.group_order << ", exponent "
     << t.exponent << ", " << t.class_count() << " classes\n";
  os << "admissible orders:";
  for (std::int64_t k : admissible_orders(t)) os << " " << k;
  os << "\nanalyzed orders:";
  for (std::int64_t k : analysis.base.orders) os << " " << k;
  os << "\n";
  if (analysis.trivial_priors)
    os << "note: profile candidates restricted to trivial solutions of lower orders\n";
  os << "\n";
  render_sets_text(os, t, analysis.base.by_order, true);

  for (const auto& step : analysis.filters) {
    os << "\nafter filter " << step.name << ":\n";
    render_sets_text(os, t, step.after, false);
  }

  os << "\nverdict ZC-1: " << to_string(analysis.zc1.kind) << "\n";
  for (const auto& ov : analysis.zc1.per_order) {
    os << "  order " << ov.order << ": " << ov.trivial_count << " trivial, "
       << ov.order_excluded_count << " order-excluded, " << ov.nontrivial.size()
       << " nontrivial";
    os << "\n";
    for (const auto& ref : ov.nontrivial)
      os << "    open candidate: " << vector_support(t, ref.vector) << " under "
         << profile_label(t, ref.profile) << "\n";
  }
  for (const auto& [p, v] : analysis.p_zc3)
    os << "verdict p-ZC-3 (p=" << p << "): " << to_string(v.kind) << "\n";
  return os.str();
}

std::string render_json(const FullAnalysis& analysis) {
  const CharacterTable& t = analysis.base.table;
  ordered_json out;
  out["schema_version"] = 1;
  out["generator"] = "zc1";
  ordered_json jt;
  jt["name"] = t.name;
  jt["group_order"] = t.group_order;
  jt["exponent"] = t.exponent;
  ordered_json names = ordered_json::array();
  for (const auto& c : t.classes) names.push_back(c.name);
  jt["class_names"] = std::move(names);
  out["table"] = std::move(jt);
  out["admissible_orders"] = admissible_orders(t);
  out["analyzed_orders"] = analysis.base.orders;
  out["trivial_priors"] = analysis.trivial_priors;
  out["orders"] = sets_json(t, analysis.base.by_order, true);
  ordered_json filters = ordered_json::array();
  for (const auto& step : analysis.filters) {
    ordered_json jf;
    jf["name"] = step.name;
    jf["orders"] = sets_json(t, step.after, false);
    filters.push_back(std::move(jf));
  }
  out["filters"] = std::move(filters);
  ordered_json verdicts;
  verdicts["zc1"] = verdict_json(t, analysis.zc1);
  ordered_json pz = ordered_json::array();
  for (const auto& [p, v] : analysis.p_zc3) {
    ordered_json jp = verdict_json(t, v);
    jp["p"] = p;
    pz.push_back(std::move(jp));
  }
  verdicts["p_zc3"] = std::move(pz);
  out["verdicts"] = std::move(verdicts);
  return out.dump(2) + "\n";
}

std::string render_psl2_text(const OrderPReport& report, const Verdict& verdict) {
  std::ostringstream os;
  const auto& params = report.params;
  os << "PSL(2," << params.p << "): group order " << params.group_order << ", exponent "
     << params.exponent << ", epsilon = " << (params.epsilon > 0 ? "+1" : "-1") << "\n";
  os << "order-" << params.p << " analysis (free classes: the two classes of order "
     << params.p << ")\n";
  for (const auto& e : report.solutions.entries)
    for (const auto& v : e.solutions) {
      os << "  solution: nu2=" << v.values[1] << " nu3=" << v.values[2] << "\n";
    }
  os << "mu_l(u, chi3) by residue l (trace of sqrt(eps p) * z^-l):\n";
  for (const auto& mu : report.mu_chi3) {
    os << "  l=" << mu.residue << ": trace=" << mu.twist_trace
       << "  mu(nu2=0)=" << mu.mu_nu2_0.str() << "  mu(nu2=1)=" << mu.mu_nu2_1.str();
    if (mu.residue == 0)
      os << "  [(1+eps)/2]";
    else
      os << "  [" << (mu.twist_trace > 0 ? "1 - nu2" : "nu2") << "]";
    os << "\n";
  }
  os << "twist-trace closed form: matches (-l/p)*eps*p: "
     << (report.matches_eps_form ? "yes" : "no") << "; matches (-l/p)*p: "
     << (report.matches_plain_form ? "yes" : "no") << "\n";
  os << "verdict p-ZC-3 (p=" << params.p << "): " << to_string(verdict.kind) << "\n";
  return os.str();
}

std::string render_psl2_json(const OrderPReport& report, const Verdict& verdict) {
  ordered_json out;
  out["schema_version"] = 1;
  out["generator"] = "zc1";
  out["p"] = report.params.p;
  out["epsilon"] = report.params.epsilon;
  out["group_order"] = report.params.group_order;
  out["exponent"] = report.params.exponent;
  ordered_json sols = ordered_json::array();
  for (const auto& e : report.solutions.entries)
    for (const auto& v : e.solutions) sols.push_back(vector_json(v));
  out["solutions"] = std::move(sols);
  ordered_json mus = ordered_json::array();
  for (const auto& mu : report.mu_chi3) {
    ordered_json jm;
    jm["l"] = mu.residue;
    jm["twist_trace"] = mu.twist_trace;
    jm["mu_nu2_0"] = mu.mu_nu2_0.str();
    jm["mu_nu2_1"] = mu.mu_nu2_1.str();
    mus.push_back(std::move(jm));
  }
  out["mu_chi3"] = std::move(mus);
  out["twist_trace_matches_eps_form"] = report.matches_eps_form;
  out["twist_trace_matches_plain_form"] = report.matches_plain_form;
  out["verdict_p_zc3"] = to_string(verdict.kind);
  return out.dump(2) + "\n";
}

}  // namespace zc1
