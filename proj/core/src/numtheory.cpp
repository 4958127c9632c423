#include "zc1/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace zc1 {

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = gcd_i64(a, b);
  std::int64_t q = a / g;
  if (q > std::numeric_limits<std::int64_t>::max() / std::abs(b))
    throw std::overflow_error("lcm_i64 overflow");
  return std::abs(q * b);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 0) n = -n;
  std::vector<std::int64_t> ps;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int mobius(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
  int count = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;  // squared factor
      ++count;
    }
  }
  if (n > 1) ++count;
  return (count % 2 == 0) ? 1 : -1;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("legendre: p = " + std::to_string(p) +
                                " is not an odd prime");
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  std::int64_t e = powmod(a, (p - 1) / 2, p);  // Euler's criterion
  return e == 1 ? 1 : -1;
}

std::int64_t trace_root_of_unity(std::int64_t m, std::int64_t a) {
  if (m < 1) throw std::invalid_argument("trace_root_of_unity: m must be >= 1");
  a %= m;
  if (a < 0) a += m;
  std::int64_t g = gcd_i64(a == 0 ? m : a, m);
  std::int64_t r = m / g;
  return mobius(r) * (euler_phi(m) / euler_phi(r));
}

}  // namespace zc1
