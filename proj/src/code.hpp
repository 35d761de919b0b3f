#pragma once

#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace tracecode {

constexpr u64 kDefaultBudget = 100'000'000;  // cap on p^(2m-1) enumeration work

// Exact multiset of codeword weights over all b in F_q.
struct WeightDistribution {
  u64 length = 0;                               // n = |D_a|
  std::vector<std::pair<u64, u64>> entries;     // (weight, multiplicity), ascending
};

struct CodeSummary {
  i64 p = 0;
  int m = 0;
  i64 a = 0;
  std::string modulus_csv;
  u64 n = 0;
  int k = 0;
  u64 d = 0;
  WeightDistribution distribution;
  bool matches_theory = false;
  bool ratio_holds = false;  // p * w_min > (p-1) * w_max from the predicted table
};

// D_a: the nonzero elements of trace a, as canonical indices in ascending order.
std::vector<u64> defining_set(const Field& f, i64 a);

// c_b = (Tr(b d_1^2), ..., Tr(b d_n^2)) over the given defining set.
std::vector<i64> codeword(const Field& f, const std::vector<u64>& defset, const FqElem& b);

// Brute-force n_{(b,a)}: iterate x over the fiber {Tr(x) = a} and count
// Tr(b x^2) = 0. Includes x = 0 when a = 0. This is the oracle the theory
// module is checked against; it never touches the closed forms.
u64 count_nba(const FieldTables& t, u64 b, i64 a);
u64 count_nba(const Field& f, const FqElem& b, i64 a);

// Exhaustive weight enumeration over all b in F_q. Refuses instances with
// p^(2m-1) above the budget.
WeightDistribution weight_distribution(const Field& f, i64 a, u64 budget = kDefaultBudget);

// Parameters, distribution, and the exact-match verdict against the
// parity-appropriate table. Requires m > 2 and a != 0.
CodeSummary code_summary(const Field& f, i64 a, u64 budget = kDefaultBudget);

// Rows are c_{alpha^j}, j = 0..m-1, over the polynomial basis.
std::vector<std::vector<i64>> generator_matrix(const Field& f, i64 a);
std::string generator_matrix_csv(const Field& f, i64 a);

// Paper-style enumerator string: "1 + 6x^5 + 8x^6 + 12x^7".
std::string enumerator_text(const WeightDistribution& d);

// Deterministic JSON (sorted keys, ascending weights):
// {"a":..,"d":..,"k":..,"m":..,"matches_theory":..,"modulus":"c0,...,cm",
//  "n":..,"p":..,"weights":[{"count":..,"w":..}...],"wmin_wmax_holds":..}
std::string summary_json(const CodeSummary& s);

}  // namespace tracecode
