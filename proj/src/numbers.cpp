#include "numbers.hpp"

#include <algorithm>
#include <numeric>

namespace tracecode {

u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
}

u64 powmod(u64 base, u64 exp, u64 n) {
  u64 r = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  // Floyd cycle finding with f(x) = x^2 + c; gcd(0, n) == n restarts with the next c.
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 checked_pow(u64 base, unsigned exp) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > ~0ull) fail(Errc::Overflow, "integer power exceeds 64-bit range");
  }
  return static_cast<u64>(r);
}

bool pow_within(u64 base, unsigned exp, u64 limit, u64* out) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) return false;
  }
  if (out) *out = static_cast<u64>(r);
  return true;
}

int legendre(i64 p, i64 y) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
    fail(Errc::NotPrime, "legendre symbol needs an odd prime modulus");
  i64 r = static_cast<i64>(y % p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  u64 v = powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
  if (v == 1) return 1;
  if (v == static_cast<u64>(p - 1)) return -1;
  fail(Errc::Internal, "legendre power landed outside {1, p-1}");
}

int sign_exponent(i64 p, i64 t) {
  i64 e = (p - 1) * t;
  if (e % 4 != 0) fail(Errc::Internal, "sign exponent (p-1)t/4 is not integral");
  return ((e / 4) % 2 != 0) ? -1 : 1;
}

}  // namespace tracecode
