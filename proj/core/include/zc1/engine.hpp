#ifndef ZC1_ENGINE_HPP
#define ZC1_ENGINE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zc1/chartab.hpp"

namespace zc1 {

// Partial augmentations of a normalized torsion unit of the given order,
// one integer per conjugacy class. Candidate solutions always vanish on the
// identity class and on central classes; chain vectors inside a PowerProfile
// may carry central support (a power of the unit can be a central element).
struct PartialAugmentationVector {
  std::int64_t order = 1;
  std::vector<std::int64_t> values;

  int single_support() const;  // class index if exactly one entry = 1, else -1

  friend bool operator==(const PartialAugmentationVector&,
                         const PartialAugmentationVector&) = default;
  friend auto operator<=>(const PartialAugmentationVector&,
                          const PartialAugmentationVector&) = default;
};

// Chosen behavior of one proper power u^d: a partial-augmentation vector of
// order k/d taken from the solutions previously computed for that order (or
// a central-class indicator).
struct PowerAssignment {
  std::int64_t power = 1;        // d, with 1 < d < k
  std::int64_t power_order = 1;  // k/d
  PartialAugmentationVector vector;

  friend bool operator==(const PowerAssignment&, const PowerAssignment&) = default;
  friend auto operator<=>(const PowerAssignment&, const PowerAssignment&) = default;
};

// One case split of the analysis at order k: a coherent choice of vectors
// for every proper power. The d = k power is always the identity assignment
// chi(u^k) = chi(1) and is left implicit.
struct PowerProfile {
  std::int64_t order = 1;
  std::vector<PowerAssignment> assignments;  // ascending by power d

  const PartialAugmentationVector* vector_for_power(std::int64_t d) const;

  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
  friend auto operator<=>(const PowerProfile&, const PowerProfile&) = default;
};

// constant + sum of coefficients over the free class indices
struct AffineForm {
  Rational constant;
  std::vector<Rational> coeffs;

  Rational eval(std::span<const std::int64_t> x) const;
};

// One multiplicity constraint: the affine form for mu_l(u, chi) together
// with its bound, the character degree.
struct MultiplicityConstraint {
  int character = 0;
  std::int64_t residue = 0;
  AffineForm form;
  Rational degree;
};

// The full system at order k under one power profile: every (chi, l) form,
// the free class indices, and the normalization sum(nu) = 1.
struct ConstraintSystem {
  std::int64_t order = 1;
  PowerProfile profile;
  std::vector<int> free_indices;
  std::vector<MultiplicityConstraint> forms;
  int class_count = 0;
};

struct ProfileSolutions {
  PowerProfile profile;
  std::vector<PartialAugmentationVector> solutions;  // empty = case eliminated
};

// All case splits at one order. Profiles with empty solution lists are
// retained: they witness the eliminations in the case analysis.
struct SolutionSet {
  std::int64_t order = 1;
  std::vector<ProfileSolutions> entries;

  std::vector<PartialAugmentationVector> all_solutions() const;  // dedup, sorted
  bool has_solutions() const;
};

using PriorSolutions = std::map<std::int64_t, SolutionSet>;

struct AnalysisReport {
  CharacterTable table;
  std::vector<std::int64_t> orders;  // reported orders, ascending
  std::map<std::int64_t, SolutionSet> by_order;
};

// Candidate orders of nontrivial torsion units: all divisors > 1 of the
// group exponent, ascending.
std::vector<std::int64_t> admissible_orders(const CharacterTable& table);

// Classes whose partial augmentation must vanish at order k: the identity
// class, every central class, and every class whose element order has a
// prime divisor not dividing k.
std::vector<int> forced_zero_classes(const CharacterTable& table, std::int64_t k);

// The affine form of mu_l(u, chi) in the free partial augmentations: the
// d = 1 term of the trace formula contributes the coefficients, the proper
// powers (resolved through the profile) and the d = k identity term
// contribute the constant.
AffineForm multiplicity_form(const CharacterTable& table, std::int64_t k,
                             const PowerProfile& profile, int chi, std::int64_t l);

ConstraintSystem build_system(const CharacterTable& table, std::int64_t k,
                              const PowerProfile& profile);

// Per-variable integer bounds derived from the system by exact
// Fourier-Motzkin elimination over {0 <= form <= degree, sum(nu) = 1}.
// `feasible = false` marks a system whose rational relaxation is already
// empty. Throws EngineError when some variable has no finite bound (cannot
// happen for a valid character table).
struct DerivedBox {
  std::vector<std::int64_t> lo, hi;  // parallel to free_indices
  bool feasible = true;
};
DerivedBox derive_bounds(const ConstraintSystem& system);

// Complete, duplicate-free, lexicographically ordered list of integer
// vectors over the free classes with sum 1 making every form a rational
// integer in [0, degree]. Throws EngineError if no finite bounding box can
// be derived (cannot happen for a valid character table).
std::vector<PartialAugmentationVector> enumerate_solutions(const ConstraintSystem& system);

// All coherent profiles at order k. Candidates for the power order m = k/d
// are the previously computed solutions at order m plus the indicators of
// central classes of element order exactly m. Coherence: a trivial choice
// at order m forces the choice at every order m/e to be the indicator of
// the power-map image, and forces the class order to divide m through the
// implicit identity assignment at d = k.
std::vector<PowerProfile> power_profiles(const CharacterTable& table, std::int64_t k,
                                         const PriorSolutions& prior);

SolutionSet analyze_order(const CharacterTable& table, std::int64_t k,
                          const PriorSolutions& prior);

struct AnalyzeOptions {
  // Restrict profile candidates at each order to Theorem-D-trivial
  // solutions of the lower orders (i.e. assume the conjecture below).
  bool trivial_priors = false;
  // Orders to report; empty = all admissible. Proper divisors are always
  // computed as priors.
  std::vector<std::int64_t> orders;
};

AnalysisReport analyze_all(const CharacterTable& table, const AnalyzeOptions& options = {});

// Theorem-D triviality along the whole profile chain: v is an indicator
// vector (single entry 1) on a class c, every chain vector is the indicator
// of the corresponding power-map image of c, and c powers to the identity
// at d = k. Certifies rational conjugacy to a group element.
bool is_trivial_solution(const CharacterTable& table, const PartialAugmentationVector& v,
                         const PowerProfile& profile);

}  // namespace zc1

#endif
