#ifndef ZC1_VERDICT_HPP
#define ZC1_VERDICT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zc1/engine.hpp"

namespace zc1 {

enum class VerdictKind { Proved, OpenWithCandidates, NotApplicable };

std::string to_string(VerdictKind kind);

struct SurvivorRef {
  PowerProfile profile;
  PartialAugmentationVector vector;
};

// Per-order summary entering a verdict. Survivors split three ways:
//  - trivial: indicator chains matching the power maps; these are the
//    partial augmentations of actual group elements.
//  - order_excluded: single-support chains that do not match any group
//    element. No torsion unit can realize them: one class per divisor
//    certifies rational conjugacy to a group element, whose order would
//    then differ from the order of the unit.
//  - nontrivial: everything else, the genuine open candidates.
struct OrderVerdict {
  std::int64_t order = 1;
  int trivial_count = 0;
  int order_excluded_count = 0;
  std::vector<SurvivorRef> nontrivial;
};

struct Verdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  std::vector<OrderVerdict> per_order;
  std::vector<std::string> applied_filters;
};

// Single nonzero entry equal to 1, at every level of the profile chain.
// This is the hypothesis of the Theorem-D rational-conjugacy criterion; a
// solution satisfying it is never a counterexample candidate.
bool is_trivial(const PartialAugmentationVector& v, const PowerProfile& profile);

// Keeps a solution v iff its induced vector on the quotient classes
// (w_D = sum of v over the fusion fiber of D) is the identity indicator, a
// single-class indicator on a class of element order dividing the order of
// v, or matches a solution of the quotient analysis at some order dividing
// it. Passing a quotient report restricted with restrict_to_trivial()
// encodes the assertion that ZC-1 is known for the quotient group.
SolutionSet quotient_filter(const SolutionSet& solutions, const ClassFusion& fusion,
                            const CharacterTable& source,
                            const AnalysisReport& quotient_report);

// Sign filter for tables of the form G x C2, with the class pairing
// (C,1) <-> (C,t) derived from the character values around a central
// involution. With factor_zc1_known, both ring homomorphisms to ZG (the
// projection and the twist t -> -1) must map a genuine unit onto partial
// augmentations of group elements, which forces: every pair sums to 0 or 1
// with exactly one pair summing to 1, pair differences lie in {-1, 0, 1},
// and a pair summing to 0 vanishes entirely - hence a single nonzero entry
// overall. Without the assertion the filter keeps everything.
SolutionSet c2_sign_filter(const SolutionSet& solutions, const CharacterTable& table,
                           bool factor_zc1_known);

// Drops every solution that is not a power-map-consistent indicator chain.
// Models "ZC-1 is known for this group": all torsion units are rationally
// conjugate to group elements.
AnalysisReport restrict_to_trivial(const AnalysisReport& report);
SolutionSet restrict_to_trivial(const CharacterTable& table, const SolutionSet& set);

// Proved iff every surviving solution at every order is resolved by
// Theorem D (single-support chain); otherwise OpenWithCandidates with the
// exceptional vectors.
Verdict zc1_verdict(const CharacterTable& table,
                    const std::map<std::int64_t, SolutionSet>& survivors,
                    std::vector<std::string> applied_filters = {});

// Same classification restricted to the orders that are powers of p, up to
// the p-part of the group order. NotApplicable when those orders are not
// all present in the survivor map. Throws if p does not divide the group
// order.
Verdict p_zc3_verdict(const CharacterTable& table,
                      const std::map<std::int64_t, SolutionSet>& survivors, std::int64_t p);

// True iff exactly one class stays free at order k, in which case the
// normalization alone forces the unique, trivial solution. Zero free
// classes is reported through `inconsistent` (no normalized unit of that
// order can exist).
bool unique_class_shortcut(const CharacterTable& table, std::int64_t k,
                           bool* inconsistent = nullptr);

}  // namespace zc1

#endif
