#pragma once

// Integer helpers behind the periodic-decimal machinery: splitting off the
// 2/5 part of a denominator and the multiplicative order of 10.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace decreal::nt {

struct PrimePower {
  mpz_class prime;
  unsigned exponent;
};

/// Prime factorisation of n >= 1 by trial division plus Pollard-Brent rho.
/// Throws FactorizationLimit when rho gives up on a composite cofactor.
std::vector<PrimePower> factorize(const mpz_class& n);

/// Splits |r| = s * t where s has only the prime factors 2 and 5 and
/// gcd(t, 10) = 1.
std::pair<mpz_class, mpz_class> split_two_five(const mpz_class& r);

/// Least k >= 0 with s | 10^k, for s a product of 2s and 5s.
std::uint64_t two_five_exponent(const mpz_class& s);

/// Least p >= 1 with t | 10^p - 1. Requires t >= 1 and gcd(t, 10) = 1.
mpz_class order_of_ten(const mpz_class& t);

}  // namespace decreal::nt
