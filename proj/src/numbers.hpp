#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace tracecode {

using i64 = std::int64_t;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 n);
u64 powmod(u64 base, u64 exp, u64 n);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// Distinct prime factors, ascending. Pollard rho for the large cofactors.
std::vector<u64> prime_factors(u64 n);

// base^exp, throwing Error(Errc::Overflow) when the result leaves u64.
u64 checked_pow(u64 base, unsigned exp);

// base^exp <= limit? Writes the power to *out when it fits.
bool pow_within(u64 base, unsigned exp, u64 limit, u64* out);

// Legendre symbol (y | p) in {-1, 0, 1}; y may be negative. p must be an odd prime.
int legendre(i64 p, i64 y);

// (-1)^{(p-1)t/4}. The exponent must be integral (guaranteed for odd p and
// even t, as in every lemma that uses it); anything else is rejected loudly.
int sign_exponent(i64 p, i64 t);

}  // namespace tracecode
