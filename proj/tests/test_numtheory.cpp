#include <doctest.h>

#include <set>
#include <stdexcept>

#include "zc1/numtheory.hpp"

using namespace zc1;

namespace {

std::int64_t phi_brute(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a)
    if (gcd_i64(a, n) == 1) ++count;
  return count;
}

int mobius_brute(std::int64_t n) {
  int factors = 0;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  return factors % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("phi and mobius against brute force") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(euler_phi(n) == phi_brute(n));
    CHECK(mobius(n) == mobius_brute(n));
  }
}

TEST_CASE("divisors and factorization") {
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(prime_factors(60) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<std::int64_t>{97});
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("legendre symbol matches the exhaustive-squares oracle") {
  CHECK(legendre(1, 5) == 1);
  CHECK(legendre(5, 5) == 0);
  CHECK(legendre(2, 7) == 1);  // squares mod 7 are {1, 2, 4}
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    std::set<std::int64_t> squares;
    for (std::int64_t a = 1; a < p; ++a) squares.insert(a * a % p);
    for (std::int64_t a = -p; a <= 2 * p; ++a) {
      std::int64_t r = ((a % p) + p) % p;
      int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
      CHECK(legendre(a, p) == expected);
    }
  }
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 15), std::invalid_argument);
}

TEST_CASE("closed-form root-of-unity traces") {
  CHECK(trace_root_of_unity(1, 0) == 1);
  CHECK(trace_root_of_unity(6, 1) == 1);
  CHECK(trace_root_of_unity(8, 4) == -4);   // zeta_8^4 = -1, trace -phi(8)
  CHECK(trace_root_of_unity(12, 0) == 4);   // phi(12)
  CHECK(trace_root_of_unity(5, 3) == -1);
  CHECK(trace_root_of_unity(9, 3) == -3);   // mu(3) * phi(9)/phi(3)
  CHECK_THROWS_AS(trace_root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("lcm overflow is detected") {
  CHECK(lcm_i64(4, 6) == 12);
  CHECK_THROWS_AS(lcm_i64(3037000499LL, 3037000501LL), std::overflow_error);
}
