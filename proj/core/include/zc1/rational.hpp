#ifndef ZC1_RATIONAL_HPP
#define ZC1_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zc1 {

// Exact arbitrary-precision fraction, always in lowest terms with a
// positive denominator. This is the substrate of every quantity in the
// library; nothing is ever rounded.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "num", "-num" or "num/den" with den > 0 after normalization.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  // Largest integer <= value / smallest integer >= value.
  mpz_class floor() const;
  mpz_class ceil() const;

  double to_double() const { return v_.get_d(); }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace zc1

#endif
