#pragma once

#include <utility>
#include <vector>

#include "field.hpp"

namespace tracecode {

// Closed-form weight distribution of C_{D_a}, a != 0. Weights ascending,
// weight 0 included with multiplicity 1; multiplicities sum to p^m.
struct TheoreticalDistribution {
  i64 p = 0;
  int m = 0;
  int table = 0;  // 1: m odd, 2: m even
  std::vector<std::pair<u64, u64>> entries;
};

// The parity-appropriate three-weight table. Errc::UnsupportedM for m <= 2.
TheoreticalDistribution predicted_distribution(i64 p, int m);

// n_{(b,a)} = |{x : Tr(x) = a, Tr(bx^2) = 0}| for a != 0, by the three-case
// closed form (p^{m-2} when Tr(b^{-1}) = 0, quadratic-character corrections
// otherwise). eta(-Tr(b^{-1})) for odd m is the Legendre symbol mod p.
u64 predicted_nba(const Field& f, const FqElem& b, i64 a);

// n_{(b,0)} by the four-case closed form (x = 0 included in the count).
u64 predicted_nb0(const Field& f, const FqElem& b);

// |M| and |N|: trace-zero elements of F_q^* split by quadratic character.
struct TraceZeroSplit {
  u64 nonsquares = 0;  // |M|, eta = -1
  u64 squares = 0;     // |N|, eta = +1
};
TraceZeroSplit predicted_trace_zero_split(const Field& f);

// |M_a| = |{x : eta(x) = -1, Tr(x) = a}| for a != 0.
u64 predicted_nonsquare_fiber(const Field& f, i64 a);

// Secret-sharing ratio condition: p * w_min > (p-1) * w_max, checked in
// integer arithmetic on the predicted extreme weights.
struct RatioCondition {
  u64 w_min = 0;
  u64 w_max = 0;
  bool holds = false;
};
RatioCondition ratio_condition(i64 p, int m);

}  // namespace tracecode
