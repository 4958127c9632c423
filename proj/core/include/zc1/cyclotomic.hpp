#ifndef ZC1_CYCLOTOMIC_HPP
#define ZC1_CYCLOTOMIC_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "zc1/rational.hpp"

namespace zc1 {

// An exact element of the cyclotomic field Q(zeta_n).
//
// Canonical form: a sparse polynomial in zeta_n with rational coefficients
// and exponents below phi(n), reduced modulo the n-th cyclotomic polynomial,
// with n minimized to the conductor of the value (rationals live at n = 1).
// Two equal field elements therefore always have identical stored form, and
// the stored order is the conductor. All operations return canonical values;
// instances are immutable and safe to share across threads.
class Cyclotomic {
 public:
  Cyclotomic() = default;                    // zero, order 1
  explicit Cyclotomic(const Rational& r);    // rational value, order 1
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}  // NOLINT

  // zeta_n^e (e arbitrary, reduced mod n). n >= 1.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t e);

  // Quadratic Gauss sum  sum_{v=1}^{p-1} (v/p) zeta_p^v  for an odd prime
  // p >= 5. Its square is eps*p where p = eps (mod 4), so this materializes
  // sqrt(eps*p) inside Q(zeta_p).
  static Cyclotomic gauss_sum(std::int64_t p);

  std::int64_t order() const { return order_; }  // conductor of the value
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return order_ == 1; }
  Rational rational_value() const;  // requires is_rational()

  // exponent -> nonzero coefficient, exponents < phi(order()), ascending
  const std::map<std::int64_t, Rational>& coefficients() const { return coeffs_; }

  // Galois action sigma_t : zeta_n -> zeta_n^t. Requires gcd(t, order) = 1.
  Cyclotomic galois(std::int64_t t) const;

  // Complex conjugation = sigma_{-1}.
  Cyclotomic conj() const;

  // Absolute trace to Q, computed as the honest Galois-orbit sum
  // sum_{t in (Z/nZ)^x} sigma_t(x) with n = order().
  Rational trace() const { return trace_in(order_); }

  // Trace from Q(zeta_ambient) to Q of this value viewed inside the larger
  // field; requires order() | ambient. Equals [Q(z_a):Q(z_n)] * trace().
  Rational trace_in(std::int64_t ambient) const;

  // Trace from Q(zeta_ambient) of this value times zeta_ambient^twist,
  // evaluated by linearity over cached monomial orbit sums. The workhorse
  // behind the multiplicity formula.
  Rational trace_in_twisted(std::int64_t ambient, std::int64_t twist) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator*(const Rational& s) const;
  Cyclotomic operator/(const Rational& s) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  // Human-readable rendering, e.g. "1/2 - 1/2*z5^1 + z5^3".
  std::string str() const;

 private:
  using CoeffMap = std::map<std::int64_t, Rational>;

  Cyclotomic(std::int64_t order, CoeffMap coeffs);  // canonicalizes

  static void reduce_degrees(std::int64_t n, CoeffMap& m);
  static CoeffMap apply_galois_raw(std::int64_t n, const CoeffMap& m, std::int64_t t);
  void canonicalize();
  bool try_descend(std::int64_t target);

  std::int64_t order_ = 1;
  CoeffMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// Normalized trace used by the constraint engine: for a context order k,
// NTr(y) = (phi(k)/phi(N)) * Tr_{Q(zeta_N)/Q}(y) with N = lcm(k, cond(y)).
// Agrees with Tr_{Q(zeta_k)/Q} whenever y lies in Q(zeta_k) and extends
// Q-linearly to values outside it.
Rational normalized_trace(const Cyclotomic& y, std::int64_t k);

// NTr(y * zeta_k^{-l}) without materializing the product.
Rational normalized_trace_twisted(const Cyclotomic& y, std::int64_t k, std::int64_t l);

}  // namespace zc1

#endif
