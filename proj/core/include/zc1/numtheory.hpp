#ifndef ZC1_NUMTHEORY_HPP
#define ZC1_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace zc1 {

// Elementary number theory on machine integers. Everything here operates
// at "character table" scale (arguments are class orders, conductors and
// small primes), so plain int64 with overflow guards is enough.

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);  // throws on overflow

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
std::vector<std::int64_t> divisors(std::int64_t n);       // ascending, includes 1 and n

std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);  // in {-1, 0, 1}

// Legendre symbol (a/p) for an odd prime p: 0 if p | a, 1 for nonzero
// quadratic residues, -1 otherwise. Rejects even or composite p.
int legendre(std::int64_t a, std::int64_t p);

// Trace of zeta_m^a from Q(zeta_m) down to Q via the closed form
// mu(m/g) * phi(m) / phi(m/g) with g = gcd(a, m). Serves as the fast,
// independent counterpart of the Galois-orbit sum.
std::int64_t trace_root_of_unity(std::int64_t m, std::int64_t a);

}  // namespace zc1

#endif
