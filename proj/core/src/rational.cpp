#include "zc1/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "zc1/errors.hpp"

namespace zc1 {

Rational::Rational(std::int64_t num, std::int64_t den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw ParseError("invalid rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) fail();
  if (num[0] == '+') num.remove_prefix(1);  // GMP rejects an explicit plus
  mpq_class v;
  if (slash == std::string_view::npos) {
    v = mpq_class(mpz_class(std::string(num)));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, false)) fail();
    mpz_class d{std::string(den)};
    if (d == 0) fail();
    v = mpq_class(mpz_class(std::string(num)), d);
  }
  v.canonicalize();
  return Rational(v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace zc1
