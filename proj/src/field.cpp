#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace tracecode {

namespace {

constexpr i64 kMaxPrime = (1ll << 31) - 1;  // keeps coefficient products in i64
constexpr u64 kTableCap = 1ull << 24;

// little-endian base-p digits of k, length n
std::vector<i64> digits_of(u64 k, i64 p, int n) {
  std::vector<i64> d(n, 0);
  for (int i = 0; i < n && k; ++i) {
    d[i] = static_cast<i64>(k % static_cast<u64>(p));
    k /= static_cast<u64>(p);
  }
  return d;
}

// remainder of a monic-divisor trial division; a is modified in place
bool divides(const std::vector<i64>& div, std::vector<i64> a, i64 p) {
  while (a.size() >= div.size()) {
    i64 c = a.back() % p;
    if (c != 0) {
      size_t k = a.size() - div.size();
      for (size_t i = 0; i < div.size(); ++i) a[k + i] = ((a[k + i] - c * div[i]) % p + p) % p;
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() % p == 0) a.pop_back();
  return a.empty();
}

// all monic irreducibles of degree 1..maxdeg over F_p, sieved degree by degree
std::vector<std::vector<i64>> irreducibles_up_to(i64 p, int maxdeg) {
  std::vector<std::vector<i64>> irr;
  for (int d = 1; d <= maxdeg; ++d) {
    u64 count = checked_pow(static_cast<u64>(p), static_cast<unsigned>(d));
    for (u64 k = 0; k < count; ++k) {
      std::vector<i64> cand = digits_of(k, p, d);
      cand.push_back(1);
      bool ok = true;
      for (const auto& f : irr) {
        if (2 * (f.size() - 1) > static_cast<size_t>(d)) break;
        if (divides(f, cand, p)) {
          ok = false;
          break;
        }
      }
      if (ok) irr.push_back(std::move(cand));
    }
  }
  return irr;
}

}  // namespace

bool is_irreducible(i64 p, const std::vector<i64>& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  int deg = static_cast<int>(poly.size()) - 1;
  if (deg == 1) return true;
  for (const auto& f : irreducibles_up_to(p, deg / 2)) {
    if (divides(f, poly, p)) return false;
  }
  return true;
}

Field::Field(i64 p, int m) : p_(p), m_(m) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
    fail(Errc::NotPrime, "p must be an odd prime, got " + std::to_string(p));
  if (p > kMaxPrime) fail(Errc::Overflow, "p exceeds the supported prime range");
  if (m < 1) fail(Errc::BadArgument, "extension degree m must be >= 1");
  if (!pow_within(static_cast<u64>(p), static_cast<unsigned>(2 * m - 1), ~0ull, nullptr))
    fail(Errc::Overflow, "p^(2m-1) exceeds the 64-bit enumeration range");
  q_ = checked_pow(static_cast<u64>(p), static_cast<unsigned>(m));

  auto irr = irreducibles_up_to(p_, m_ / 2);
  for (u64 k = 0; k < q_; ++k) {
    std::vector<i64> cand = digits_of(k, p_, m_);
    cand.push_back(1);
    bool ok = true;
    for (const auto& f : irr) {
      if (divides(f, cand, p_)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      modulus_ = std::move(cand);
      break;
    }
  }
  if (modulus_.empty()) fail(Errc::Internal, "no irreducible modulus found");
  find_generator();
}

Field::Field(i64 p, int m, std::vector<i64> modulus) : p_(p), m_(m) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
    fail(Errc::NotPrime, "p must be an odd prime, got " + std::to_string(p));
  if (p > kMaxPrime) fail(Errc::Overflow, "p exceeds the supported prime range");
  if (m < 1) fail(Errc::BadArgument, "extension degree m must be >= 1");
  if (!pow_within(static_cast<u64>(p), static_cast<unsigned>(2 * m - 1), ~0ull, nullptr))
    fail(Errc::Overflow, "p^(2m-1) exceeds the 64-bit enumeration range");
  q_ = checked_pow(static_cast<u64>(p), static_cast<unsigned>(m));

  if (modulus.size() != static_cast<size_t>(m) + 1)
    fail(Errc::NotIrreducible, "modulus must have degree m (m+1 coefficients)");
  for (auto& c : modulus) c = ((c % p) + p) % p;
  if (modulus.back() != 1) fail(Errc::NotIrreducible, "modulus must be monic");
  if (!is_irreducible(p_, modulus))
    fail(Errc::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
  modulus_ = std::move(modulus);
  find_generator();
}

std::string Field::modulus_csv() const {
  std::string s;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

std::vector<i64> Field::parse_modulus_csv(const std::string& csv) {
  std::vector<i64> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      i64 v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::BadArgument, "bad modulus coefficient '" + tok + "'");
    }
  }
  if (out.empty()) fail(Errc::BadArgument, "empty modulus string");
  return out;
}

FqElem Field::from_fp(i64 c) const {
  FqElem x(m_, 0);
  x[0] = ((c % p_) + p_) % p_;
  return x;
}

FqElem Field::element(u64 index) const {
  if (index >= q_) fail(Errc::BadArgument, "element index out of range");
  return digits_of(index, p_, m_);
}

u64 Field::index_of(const FqElem& x) const {
  check_elem(x);
  u64 idx = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    idx += static_cast<u64>(x[i]) * mult;
    mult *= static_cast<u64>(p_);
  }
  return idx;
}

bool Field::is_zero(const FqElem& x) const {
  check_elem(x);
  return std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
}

void Field::check_elem(const FqElem& x) const {
  if (x.size() != static_cast<size_t>(m_))
    fail(Errc::BadArgument, "element has wrong coefficient count");
  for (i64 c : x)
    if (c < 0 || c >= p_) fail(Errc::BadArgument, "element coefficient not reduced mod p");
}

FqElem Field::add(const FqElem& x, const FqElem& y) const {
  check_elem(x);
  check_elem(y);
  FqElem r(m_);
  for (int i = 0; i < m_; ++i) {
    i64 v = x[i] + y[i];
    r[i] = v >= p_ ? v - p_ : v;
  }
  return r;
}

FqElem Field::sub(const FqElem& x, const FqElem& y) const {
  check_elem(x);
  check_elem(y);
  FqElem r(m_);
  for (int i = 0; i < m_; ++i) {
    i64 v = x[i] - y[i];
    r[i] = v < 0 ? v + p_ : v;
  }
  return r;
}

FqElem Field::neg(const FqElem& x) const { return sub(zero(), x); }

FqElem Field::mul(const FqElem& x, const FqElem& y) const {
  check_elem(x);
  check_elem(y);
  std::vector<__int128> acc(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m_; ++j) acc[i + j] += static_cast<__int128>(x[i]) * y[j];
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    i64 c = static_cast<i64>(acc[k] % p_);
    if (c < 0) c += p_;
    if (c != 0)
      for (int i = 0; i < m_; ++i) acc[k - m_ + i] -= static_cast<__int128>(c) * modulus_[i];
    acc[k] = 0;
  }
  FqElem r(m_);
  for (int i = 0; i < m_; ++i) {
    i64 v = static_cast<i64>(acc[i] % p_);
    r[i] = v < 0 ? v + p_ : v;
  }
  return r;
}

FqElem Field::inv(const FqElem& x) const {
  if (is_zero(x)) fail(Errc::DivisionByZero, "inverse of zero");
  return pow(x, q_ - 2);
}

FqElem Field::pow(const FqElem& x, u64 e) const {
  check_elem(x);
  FqElem r = one(), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

i64 Field::trace(const FqElem& x) const {
  FqElem acc = x, conj = x;
  for (int i = 1; i < m_; ++i) {
    conj = pow(conj, static_cast<u64>(p_));
    acc = add(acc, conj);
  }
  for (int i = 1; i < m_; ++i)
    if (acc[i] != 0) fail(Errc::Internal, "trace left the prime field");
  return acc[0];
}

int Field::eta(const FqElem& x) const {
  if (is_zero(x)) return 0;
  FqElem r = pow(x, (q_ - 1) / 2);
  if (r == one()) return 1;
  if (r == from_fp(p_ - 1)) return -1;
  fail(Errc::Internal, "quadratic character power landed outside {1, -1}");
}

void Field::find_generator() {
  const auto factors = prime_factors(q_ - 1);
  for (u64 idx = 1; idx < q_; ++idx) {
    FqElem g = element(idx);
    bool ok = true;
    for (u64 r : factors) {
      if (pow(g, (q_ - 1) / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = std::move(g);
      generator_index_ = idx;
      return;
    }
  }
  fail(Errc::Internal, "no generator found");
}

FieldTables::FieldTables(const Field& f) : p_(f.p()), m_(f.m()), q_(f.q()) {
  if (q_ > kTableCap)
    fail(Errc::BudgetExceeded, "q = " + std::to_string(q_) + " too large for dense tables");
  trace_.resize(q_);
  log_.assign(q_, 0);
  exp_.resize(q_ - 1);
  for (u64 x = 0; x < q_; ++x) trace_[x] = f.trace(f.element(x));
  FqElem cur = f.one();
  const FqElem& g = f.generator();
  for (u64 k = 0; k < q_ - 1; ++k) {
    u64 idx = f.index_of(cur);
    exp_[k] = static_cast<std::uint32_t>(idx);
    log_[idx] = static_cast<std::uint32_t>(k);
    cur = f.mul(cur, g);
  }
  if (cur != f.one()) fail(Errc::Internal, "generator orbit did not close");
}

u64 FieldTables::log(u64 x) const {
  if (x == 0) fail(Errc::DivisionByZero, "discrete log of zero");
  return log_[x];
}

u64 FieldTables::mul(u64 x, u64 y) const {
  if (x == 0 || y == 0) return 0;
  u64 k = static_cast<u64>(log_[x]) + log_[y];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

u64 FieldTables::inv(u64 x) const {
  if (x == 0) fail(Errc::DivisionByZero, "inverse of zero");
  u64 k = log_[x];
  return exp_[k == 0 ? 0 : q_ - 1 - k];
}

u64 FieldTables::add(u64 x, u64 y) const {
  u64 r = 0, mult = 1;
  const u64 p = static_cast<u64>(p_);
  for (int i = 0; i < m_; ++i) {
    u64 d = x % p + y % p;
    if (d >= p) d -= p;
    r += d * mult;
    x /= p;
    y /= p;
    mult *= p;
  }
  return r;
}

}  // namespace tracecode
