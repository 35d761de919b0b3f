#pragma once

#include <string>
#include <vector>

#include "numbers.hpp"

namespace tracecode {

// Extension-field element in the polynomial basis: coeffs[i] is the coefficient
// of alpha^i (alpha the residue class of the indeterminate), always of length m,
// entries reduced into [0, p).
using FqElem = std::vector<i64>;

// Monic polynomial irreducibility over F_p, by trial division against every
// monic irreducible of degree <= deg/2 (built by sieve). poly is c0..cd, cd = 1.
bool is_irreducible(i64 p, const std::vector<i64>& poly);

// GF(p^m) with exact arithmetic. Immutable after construction; every operation
// is a pure function of its inputs, safe for concurrent use.
class Field {
 public:
  // Canonical modulus: scan k = 0, 1, ... and take the first k whose base-p
  // digits (c0, ..., c_{m-1}) make x^m + c_{m-1}x^{m-1} + ... + c0 irreducible.
  Field(i64 p, int m);
  // Explicit modulus, coefficients c0..cm with cm = 1; verified irreducible.
  Field(i64 p, int m, std::vector<i64> modulus);

  i64 p() const { return p_; }
  int m() const { return m_; }
  u64 q() const { return q_; }
  const std::vector<i64>& modulus() const { return modulus_; }
  std::string modulus_csv() const;
  static std::vector<i64> parse_modulus_csv(const std::string& csv);

  FqElem zero() const { return FqElem(m_, 0); }
  FqElem one() const { return from_fp(1); }
  FqElem from_fp(i64 c) const;
  // Canonical element order: index 0..q-1, base-p digits little-endian.
  FqElem element(u64 index) const;
  u64 index_of(const FqElem& x) const;
  bool is_zero(const FqElem& x) const;

  FqElem add(const FqElem& x, const FqElem& y) const;
  FqElem sub(const FqElem& x, const FqElem& y) const;
  FqElem neg(const FqElem& x) const;
  FqElem mul(const FqElem& x, const FqElem& y) const;
  FqElem inv(const FqElem& x) const;  // Errc::DivisionByZero on 0
  FqElem pow(const FqElem& x, u64 e) const;

  // Absolute trace: x + x^p + ... + x^{p^{m-1}}, an element of F_p.
  i64 trace(const FqElem& x) const;
  // Quadratic character eta: 0 at 0, else x^{(q-1)/2} mapped to {1, -1}.
  int eta(const FqElem& x) const;

  // First generator of F_q^* in canonical element order, certified against
  // the prime factorization of q - 1.
  const FqElem& generator() const { return generator_; }
  u64 generator_index() const { return generator_index_; }

 private:
  void check_elem(const FqElem& x) const;
  void find_generator();

  i64 p_ = 0;
  int m_ = 0;
  u64 q_ = 0;
  std::vector<i64> modulus_;
  FqElem generator_;
  u64 generator_index_ = 0;
};

// Dense per-element tables for exhaustive loops: absolute trace per element,
// discrete log / exponent tables over the Field's certified generator.
// Elements are addressed by canonical index. Immutable after construction.
class FieldTables {
 public:
  explicit FieldTables(const Field& f);  // Errc::BudgetExceeded when q is too large

  i64 p() const { return p_; }
  int m() const { return m_; }
  u64 q() const { return q_; }

  i64 trace(u64 x) const { return trace_[x]; }
  int eta(u64 x) const { return x == 0 ? 0 : ((log_[x] & 1u) != 0 ? -1 : 1); }
  u64 log(u64 x) const;       // x != 0
  u64 exp_at(u64 k) const { return exp_[k]; }  // k in [0, q-1)
  u64 mul(u64 x, u64 y) const;
  u64 sqr(u64 x) const { return mul(x, x); }
  u64 inv(u64 x) const;       // Errc::DivisionByZero on 0
  u64 add(u64 x, u64 y) const;  // digit-wise mod-p addition of indices

 private:
  i64 p_;
  int m_;
  u64 q_;
  std::vector<i64> trace_;
  std::vector<std::uint32_t> log_, exp_;
};

}  // namespace tracecode
