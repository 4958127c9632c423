#ifndef ZC1_REPORT_HPP
#define ZC1_REPORT_HPP

#include <optional>
#include <string>

#include "zc1/psl2.hpp"
#include "zc1/verdict.hpp"

namespace zc1 {

// One filter application, with the per-order solution sets that remain.
struct FilterStep {
  std::string name;
  std::map<std::int64_t, SolutionSet> after;
};

// Analysis bundle rendered by the CLI: the raw engine output, the filter
// chain, and the verdicts computed on the final surviving sets.
struct FullAnalysis {
  AnalysisReport base;
  bool trivial_priors = false;
  std::vector<FilterStep> filters;
  Verdict zc1;
  std::vector<std::pair<std::int64_t, Verdict>> p_zc3;  // one per prime | |G|

  const std::map<std::int64_t, SolutionSet>& final_sets() const {
    return filters.empty() ? base.by_order : filters.back().after;
  }
};

struct FilterConfig {
  AnalyzeOptions analyze;
  std::optional<ClassFusion> fusion;
  std::optional<CharacterTable> quotient;  // table the fusion maps onto
  bool quotient_zc1_known = false;         // restrict quotient analysis to trivial chains
  bool c2_sign = false;
  bool factor_zc1_known = false;
};

// Runs the engine, applies the configured filters order by order, and
// computes the ZC-1 verdict plus a p-ZC-3 verdict for every prime dividing
// the group order.
FullAnalysis analyze_with_filters(const CharacterTable& table, const FilterConfig& config);

// Renderers. Output is deterministic: byte-identical for identical inputs,
// LF line endings, no timestamps. The JSON document carries
// "schema_version": 1 and is the authoritative machine-readable form.
std::string render_text(const FullAnalysis& analysis);
std::string render_json(const FullAnalysis& analysis);

std::string render_psl2_text(const OrderPReport& report, const Verdict& verdict);
std::string render_psl2_json(const OrderPReport& report, const Verdict& verdict);

}  // namespace zc1

#endif
