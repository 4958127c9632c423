#ifndef ZC1_PSL2_HPP
#define ZC1_PSL2_HPP

#include <cstdint>

#include "zc1/engine.hpp"
#include "zc1/verdict.hpp"

namespace zc1 {

// Structural constants of PSL(2,p) for an odd prime p >= 5.
struct PSL2Params {
  std::int64_t p = 5;
  int epsilon = 1;                // p = epsilon (mod 4), epsilon in {+1, -1}
  std::int64_t group_order = 60;  // p(p^2 - 1)/2
  std::int64_t exponent = 30;     // lcm(p, (p-1)/2, (p+1)/2)
};

PSL2Params psl2_params(std::int64_t p);

// The generic ordinary character table of PSL(2,p), instantiated exactly:
// identity, two classes of order p whose values on the half-sum characters
// involve sqrt(eps*p) materialized as the Gauss sum, a family of classes of
// orders dividing (p-1)/2 and one of orders dividing (p+1)/2, and the
// principal/discrete series with the split members replaced by the two
// half-sum characters. The construction validates the table (class count,
// sum of squared degrees, orthogonality, power maps) and throws
// TableValidationError on any inconsistency.
CharacterTable psl2_table(std::int64_t p);

// Exact trace of gauss_sum(p) * zeta_p^{-l} from Q(zeta_p) to Q: zero when
// p | l and of magnitude p otherwise.
std::int64_t trace_sqrt_twist(std::int64_t p, std::int64_t l);

// Per-residue multiplicity data for the half-sum character chi3 at order p.
struct MuChi3 {
  std::int64_t residue = 0;       // l
  std::int64_t twist_trace = 0;   // trace_sqrt_twist(p, l)
  Rational mu_nu2_0;              // mu_l(u, chi3) at nu2 = 0 (i.e. nu3 = 1)
  Rational mu_nu2_1;              // mu_l(u, chi3) at nu2 = 1
};

struct OrderPReport {
  PSL2Params params;
  SolutionSet solutions;        // engine analysis of psl2_table(p) at k = p
  std::vector<MuChi3> mu_chi3;  // l = 0 .. p-1
  // which closed form the computed twist trace matches for all l with p∤l:
  bool matches_eps_form = false;    // (-l/p) * eps * p
  bool matches_plain_form = false;  // (-l/p) * p
};

// Runs the generic engine on psl2_table(p) at order p. The forced-zero
// rules leave only the two classes of order p free, and the multiplicity
// constraints on chi3 pin the solutions to the two indicator vectors.
OrderPReport order_p_analysis(std::int64_t p);

// p-ZC-3 for PSL(2,p): the p-part of the group order is exactly p, so the
// order-p analysis decides the verdict.
Verdict p_zc3_for_psl2(std::int64_t p);

}  // namespace zc1

#endif
