#include "theory.hpp"

namespace tracecode {

namespace {

void require_odd_prime(i64 p) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
    fail(Errc::NotPrime, "p must be an odd prime, got " + std::to_string(p));
}

// counting lemmas need p^{(m-3)/2} integral when m is odd
void require_counting_m(int m) {
  if (m % 2 == 1 ? m < 3 : m < 2)
    fail(Errc::UnsupportedM, "per-codeword counts need m >= 3 (odd) or m >= 2 (even)");
}

u64 apply_correction(u64 base, i64 scale, u64 offset, const char* what) {
  i64 v = static_cast<i64>(base) + scale * static_cast<i64>(offset);
  if (v < 0) fail(Errc::Internal, std::string(what) + " evaluated negative");
  return static_cast<u64>(v);
}

}  // namespace

TheoreticalDistribution predicted_distribution(i64 p, int m) {
  require_odd_prime(p);
  if (m <= 2) fail(Errc::UnsupportedM, "the weight-distribution theorems need m > 2");
  const u64 q = checked_pow(static_cast<u64>(p), static_cast<unsigned>(m));
  const u64 n = q / static_cast<u64>(p);              // p^{m-1}
  const u64 w0 = static_cast<u64>(p - 1) * (n / p);   // (p-1) p^{m-2}
  const u64 half = static_cast<u64>(p - 1) / 2;
  u64 delta, e;
  if (m % 2 == 1) {
    delta = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 3) / 2));
    e = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 1) / 2));
  } else {
    delta = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 2) / 2));
    e = delta;
  }
  TheoreticalDistribution d;
  d.p = p;
  d.m = m;
  d.table = (m % 2 == 1) ? 1 : 2;
  d.entries = {
      {0, 1},
      {w0 - delta, half * (n - e)},
      {w0, n - 1},
      {w0 + delta, half * (n + e)},
  };
  u64 total = 0;
  for (const auto& [w, c] : d.entries) total += c;
  if (total != q) fail(Errc::Internal, "table multiplicities do not sum to p^m");
  return d;
}

u64 predicted_nba(const Field& f, const FqElem& b, i64 a) {
  if (f.is_zero(b)) fail(Errc::ZeroArgument, "b must be nonzero");
  if (a <= 0 || a >= f.p()) fail(Errc::ZeroArgument, "a must be nonzero in F_p");
  require_counting_m(f.m());
  const i64 p = f.p();
  const int m = f.m();
  const u64 base = checked_pow(static_cast<u64>(p), static_cast<unsigned>(m - 2));
  const i64 t = f.trace(f.inv(b));
  if (t == 0) return base;
  if (m % 2 == 1) {
    i64 corr = sign_exponent(p, m + 1) * f.eta(b) * legendre(p, -t);
    u64 off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 3) / 2));
    return apply_correction(base, -corr, off, "n_(b,a)");
  }
  i64 corr = sign_exponent(p, m) * f.eta(b);
  u64 off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 2) / 2));
  return apply_correction(base, -corr, off, "n_(b,a)");
}

u64 predicted_nb0(const Field& f, const FqElem& b) {
  if (f.is_zero(b)) fail(Errc::ZeroArgument, "b must be nonzero");
  require_counting_m(f.m());
  const i64 p = f.p();
  const int m = f.m();
  const u64 base = checked_pow(static_cast<u64>(p), static_cast<unsigned>(m - 2));
  const i64 t = f.trace(f.inv(b));
  if (m % 2 == 0) {
    if (t != 0) return base;
    i64 corr = sign_exponent(p, m) * (p - 1) * f.eta(b);
    u64 off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 2) / 2));
    return apply_correction(base, -corr, off, "n_(b,0)");
  }
  if (t == 0) return base;
  i64 corr = sign_exponent(p, m + 1) * (p - 1) * f.eta(b) * legendre(p, -t);
  u64 off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 3) / 2));
  return apply_correction(base, corr, off, "n_(b,0)");
}

TraceZeroSplit predicted_trace_zero_split(const Field& f) {
  const i64 p = f.p();
  const int m = f.m();
  const u64 q = f.q();
  if ((q - static_cast<u64>(p)) % (2 * static_cast<u64>(p)) != 0)
    fail(Errc::Internal, "(q-p)/2p is not integral");
  const u64 base = (q - static_cast<u64>(p)) / (2 * static_cast<u64>(p));
  TraceZeroSplit s;
  if (m % 2 == 1) {
    s.nonsquares = base;
    s.squares = base;
  } else {
    u64 off = static_cast<u64>(p - 1) / 2 *
              checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 2) / 2));
    i64 sign = sign_exponent(p, m);
    s.nonsquares = apply_correction(base, sign, off, "|M|");
    s.squares = apply_correction(base, -sign, off, "|N|");
  }
  if (s.nonsquares + s.squares != q / static_cast<u64>(p) - 1)
    fail(Errc::Internal, "|M| + |N| != p^{m-1} - 1");
  return s;
}

u64 predicted_nonsquare_fiber(const Field& f, i64 a) {
  if (a <= 0 || a >= f.p()) fail(Errc::ZeroArgument, "a must be nonzero in F_p");
  const i64 p = f.p();
  const int m = f.m();
  const u64 n = f.q() / static_cast<u64>(p);  // p^{m-1}
  i64 corr;
  u64 off;
  if (m % 2 == 1) {
    corr = legendre(p, -a) * sign_exponent(p, m + 1);
    off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 1) / 2));
  } else {
    corr = sign_exponent(p, m);
    off = checked_pow(static_cast<u64>(p), static_cast<unsigned>((m - 2) / 2));
  }
  i64 num = static_cast<i64>(n) - corr * static_cast<i64>(off);
  if (num < 0 || num % 2 != 0) fail(Errc::Internal, "|M_a| formula not an even integer");
  return static_cast<u64>(num) / 2;
}

RatioCondition ratio_condition(i64 p, int m) {
  const auto d = predicted_distribution(p, m);
  RatioCondition rc;
  rc.w_min = d.entries[1].first;
  rc.w_max = d.entries.back().first;
  rc.holds = static_cast<u64>(p) * rc.w_min > static_cast<u64>(p - 1) * rc.w_max;
  return rc;
}

}  // namespace tracecode
