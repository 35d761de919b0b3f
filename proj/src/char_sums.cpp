#include "char_sums.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace tracecode {

namespace {

constexpr i64 kRootTableCap = 1 << 20;

// p-th roots of unity, table-backed for loop use
class UnityRoots {
 public:
  explicit UnityRoots(i64 p) : p_(p) {
    if (p_ <= kRootTableCap) {
      z_.resize(p_);
      for (i64 k = 0; k < p_; ++k)
        z_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_));
    }
  }
  Complex operator[](i64 t) const {
    t %= p_;
    if (t < 0) t += p_;
    if (!z_.empty()) return z_[t];
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p_));
  }

 private:
  i64 p_;
  std::vector<Complex> z_;
};

Complex i_pow(u64 k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Tr(b x^2) for every x, one pass
std::vector<i64> trace_bx2(const FieldTables& t, u64 b) {
  std::vector<i64> out(t.q());
  for (u64 x = 0; x < t.q(); ++x) out[x] = t.trace(t.mul(b, t.sqr(x)));
  return out;
}

}  // namespace

Complex additive_character(const Field& f, const FqElem& b, const FqElem& x) {
  i64 t = f.trace(f.mul(b, x));
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(f.p()));
}

Complex gauss_sum_numeric(const FieldTables& t) {
  UnityRoots z(t.p());
  Complex acc{0.0, 0.0};
  for (u64 x = 1; x < t.q(); ++x) acc += static_cast<double>(t.eta(x)) * z[t.trace(x)];
  return acc;
}

Complex gauss_sum_fp_numeric(i64 p) {
  UnityRoots z(p);
  Complex acc{0.0, 0.0};
  for (i64 y = 1; y < p; ++y) acc += static_cast<double>(legendre(p, y)) * z[y];
  return acc;
}

Complex quadratic_sum_direct(const FieldTables& t, u64 a2, u64 a1, u64 a0) {
  if (a2 == 0) fail(Errc::ZeroArgument, "quadratic sum needs a2 != 0");
  UnityRoots z(t.p());
  Complex acc{0.0, 0.0};
  for (u64 x = 0; x < t.q(); ++x) {
    u64 fx = t.add(t.add(t.mul(a2, t.sqr(x)), t.mul(a1, x)), a0);
    acc += z[t.trace(fx)];
  }
  return acc;
}

Complex lemma4_direct(const FieldTables& t, u64 b) {
  if (b == 0) fail(Errc::ZeroArgument, "b must be nonzero");
  const i64 p = t.p();
  UnityRoots z(p);
  // group the p*q terms on the shared trace value
  std::vector<u64> cnt(p, 0);
  for (u64 x = 0; x < t.q(); ++x) ++cnt[t.trace(t.mul(b, t.sqr(x)))];
  Complex acc{0.0, 0.0};
  for (i64 tv = 0; tv < p; ++tv) {
    if (cnt[tv] == 0) continue;
    Complex inner{0.0, 0.0};
    for (i64 y = 1; y < p; ++y) inner += z[y * tv];
    acc += static_cast<double>(cnt[tv]) * inner;
  }
  return acc;
}

Complex lemma5_direct(const FieldTables& t, u64 b) {
  if (b == 0) fail(Errc::ZeroArgument, "b must be nonzero");
  const i64 p = t.p();
  UnityRoots z(p);
  // joint histogram of (Tr(b x^2), Tr(x)); the (y, z) loops stay literal
  std::vector<u64> cnt(static_cast<size_t>(p) * p, 0);
  for (u64 x = 0; x < t.q(); ++x)
    ++cnt[static_cast<size_t>(t.trace(t.mul(b, t.sqr(x)))) * p + t.trace(x)];
  Complex acc{0.0, 0.0};
  for (i64 t1 = 0; t1 < p; ++t1)
    for (i64 t2 = 0; t2 < p; ++t2) {
      u64 c = cnt[static_cast<size_t>(t1) * p + t2];
      if (c == 0) continue;
      Complex inner{0.0, 0.0};
      for (i64 y = 1; y < p; ++y)
        for (i64 zz = 1; zz < p; ++zz) inner += z[y * t1 + zz * t2];
      acc += static_cast<double>(c) * inner;
    }
  return acc;
}

Complex lemma12_direct(const FieldTables& t, u64 b, i64 a) {
  if (b == 0) fail(Errc::ZeroArgument, "b must be nonzero");
  if (a % t.p() == 0) fail(Errc::ZeroArgument, "a must be nonzero in F_p");
  const i64 p = t.p();
  UnityRoots z(p);
  std::vector<u64> cnt(static_cast<size_t>(p) * p, 0);
  for (u64 x = 0; x < t.q(); ++x)
    ++cnt[static_cast<size_t>(t.trace(t.mul(b, t.sqr(x)))) * p + t.trace(x)];
  Complex acc{0.0, 0.0};
  for (i64 t1 = 0; t1 < p; ++t1)
    for (i64 t2 = 0; t2 < p; ++t2) {
      u64 c = cnt[static_cast<size_t>(t1) * p + t2];
      if (c == 0) continue;
      Complex inner{0.0, 0.0};
      for (i64 y = 1; y < p; ++y)
        for (i64 zz = 1; zz < p; ++zz) inner += z[y * t1 + zz * (t2 - a)];
      acc += static_cast<double>(c) * inner;
    }
  return acc;
}

Complex gauss_sum_closed_form(i64 p, int m) {
  if (p < 3 || (p & 1) == 0) fail(Errc::NotPrime, "p must be an odd prime");
  if (m < 1) fail(Errc::BadArgument, "m must be >= 1");
  u64 h = static_cast<u64>((p - 1) / 2) % 4;  // (p-1)^2 m / 4 = ((p-1)/2)^2 m
  u64 k = (h * h % 4) * (static_cast<u64>(m) % 4) % 4;
  Complex v = i_pow(k) * std::sqrt(std::pow(static_cast<double>(p), m));
  return (m % 2 == 0) ? -v : v;  // (-1)^{m-1}
}

Complex gauss_sum_closed_form(const Field& f) { return gauss_sum_closed_form(f.p(), f.m()); }

Complex gauss_sum_fp_closed_form(i64 p) { return gauss_sum_closed_form(p, 1); }

Complex quadratic_sum_closed_form(const Field& f, const FqElem& a2, const FqElem& a1,
                                  const FqElem& a0) {
  if (f.is_zero(a2)) fail(Errc::ZeroArgument, "quadratic sum needs a2 != 0");
  FqElem four = f.from_fp(4);
  FqElem arg = f.sub(a0, f.mul(f.mul(a1, a1), f.inv(f.mul(four, a2))));
  UnityRoots z(f.p());
  return z[f.trace(arg)] * static_cast<double>(f.eta(a2)) * gauss_sum_closed_form(f);
}

Complex lemma4_closed_form(const Field& f, const FqElem& b) {
  if (f.is_zero(b)) fail(Errc::ZeroArgument, "b must be nonzero");
  if (f.m() % 2 == 1) return {0.0, 0.0};
  return static_cast<double>((f.p() - 1) * f.eta(b)) * gauss_sum_closed_form(f);
}

Complex lemma5_closed_form(const Field& f, const FqElem& b) {
  if (f.is_zero(b)) fail(Errc::ZeroArgument, "b must be nonzero");
  const i64 p = f.p();
  const int m = f.m();
  const i64 t = f.trace(f.inv(b));
  const int eb = f.eta(b);
  if (m % 2 == 1) {
    if (t == 0) return {0.0, 0.0};
    double mag = std::sqrt(std::pow(static_cast<double>(p), m + 1));  // p^{(m+1)/2}
    return {eb * legendre(p, -t) * sign_exponent(p, m + 1) * static_cast<double>(p - 1) * mag, 0.0};
  }
  Complex g = gauss_sum_closed_form(f);
  if (t == 0) return static_cast<double>(eb) * static_cast<double>((p - 1) * (p - 1)) * g;
  return -static_cast<double>(eb * (p - 1)) * g;
}

Complex lemma12_closed_form(const Field& f, const FqElem& b, i64 a) {
  if (f.is_zero(b)) fail(Errc::ZeroArgument, "b must be nonzero");
  if (a % f.p() == 0) fail(Errc::ZeroArgument, "a must be nonzero in F_p");
  const i64 p = f.p();
  const int m = f.m();
  const i64 t = f.trace(f.inv(b));
  const int eb = f.eta(b);
  if (m % 2 == 1) {
    if (t == 0) return {0.0, 0.0};
    double mag = std::sqrt(std::pow(static_cast<double>(p), m + 1));
    return {-static_cast<double>(sign_exponent(p, m + 1) * eb * legendre(p, -t)) * mag, 0.0};
  }
  double mag = std::sqrt(std::pow(static_cast<double>(p), m));  // p^{m/2}
  int s = sign_exponent(p, m);                                  // == (-1)^{((p-1)/2)^2 m/2}
  if (t == 0) return {static_cast<double>(s * eb) * static_cast<double>(p - 1) * mag, 0.0};
  return {-static_cast<double>(s * eb) * mag, 0.0};
}

}  // namespace tracecode
