#include "code.hpp"

#include <json.hpp>

#include "theory.hpp"

namespace tracecode {

namespace {

void check_a(const Field& f, i64 a) {
  if (a < 0 || a >= f.p()) fail(Errc::BadArgument, "a must lie in [0, p)");
}

}  // namespace

std::vector<u64> defining_set(const Field& f, i64 a) {
  check_a(f, a);
  std::vector<u64> out;
  for (u64 x = 1; x < f.q(); ++x)
    if (f.trace(f.element(x)) == a) out.push_back(x);
  return out;
}

std::vector<i64> codeword(const Field& f, const std::vector<u64>& defset, const FqElem& b) {
  std::vector<i64> out;
  out.reserve(defset.size());
  for (u64 d : defset) {
    FqElem e = f.element(d);
    out.push_back(f.trace(f.mul(b, f.mul(e, e))));
  }
  return out;
}

u64 count_nba(const FieldTables& t, u64 b, i64 a) {
  if (b == 0) fail(Errc::ZeroArgument, "b must be nonzero");
  if (a < 0 || a >= t.p()) fail(Errc::BadArgument, "a must lie in [0, p)");
  const u64 big_q = t.q() - 1;
  const u64 lb = t.log(b);
  u64 cnt = (a == 0) ? 1 : 0;  // x = 0 satisfies both conditions
  for (u64 x = 1; x < t.q(); ++x) {
    if (t.trace(x) != a) continue;
    u64 k = lb + (2 * t.log(x)) % big_q;  // log of b * x^2
    if (k >= big_q) k -= big_q;
    if (t.trace(t.exp_at(k)) == 0) ++cnt;
  }
  return cnt;
}

u64 count_nba(const Field& f, const FqElem& b, i64 a) {
  FieldTables t(f);
  return count_nba(t, f.index_of(b), a);
}

WeightDistribution weight_distribution(const Field& f, i64 a, u64 budget) {
  check_a(f, a);
  if (!pow_within(static_cast<u64>(f.p()), static_cast<unsigned>(2 * f.m() - 1), budget, nullptr))
    fail(Errc::BudgetExceeded,
         "p^(2m-1) exceeds the enumeration budget of " + std::to_string(budget));

  FieldTables t(f);
  const u64 q = t.q();
  const u64 big_q = q - 1;

  // squared defining set, in log form
  std::vector<u64> sqlogs;
  for (u64 x = 1; x < q; ++x)
    if (t.trace(x) == a) sqlogs.push_back((2 * t.log(x)) % big_q);

  std::vector<std::uint8_t> trace_zero(big_q);
  for (u64 k = 0; k < big_q; ++k) trace_zero[k] = (t.trace(t.exp_at(k)) == 0) ? 1 : 0;

  const u64 n = sqlogs.size();
  std::vector<u64> tally(n + 1, 0);
  tally[0] = 1;  // b = 0
  for (u64 b = 1; b < q; ++b) {
    const u64 lb = t.log(b);
    u64 zeros = 0;
    for (u64 s : sqlogs) {
      u64 k = lb + s;
      if (k >= big_q) k -= big_q;
      zeros += trace_zero[k];
    }
    ++tally[n - zeros];
  }

  WeightDistribution d;
  d.length = n;
  u64 total = 0;
  for (u64 w = 0; w <= n; ++w) {
    if (tally[w]) {
      d.entries.emplace_back(w, tally[w]);
      total += tally[w];
    }
  }
  if (total != q) fail(Errc::Internal, "weight tally does not cover all of F_q");
  return d;
}

CodeSummary code_summary(const Field& f, i64 a, u64 budget) {
  if (f.m() <= 2) fail(Errc::UnsupportedM, "theorem comparison needs m > 2");
  check_a(f, a);
  if (a == 0) fail(Errc::BadArgument, "a=0 out of theorem scope");

  CodeSummary s;
  s.p = f.p();
  s.m = f.m();
  s.a = a;
  s.modulus_csv = f.modulus_csv();
  s.distribution = weight_distribution(f, a, budget);
  s.n = s.distribution.length;

  // dimension from the number of distinct codewords: the b -> c_b map is
  // linear, so |image| = q / #{b : wt(c_b) = 0}
  u64 zero_mult = s.distribution.entries.front().second;
  if (s.distribution.entries.front().first != 0 || f.q() % zero_mult != 0)
    fail(Errc::Internal, "zero-weight multiplicity is not a subgroup size");
  u64 distinct = f.q() / zero_mult;
  u64 t = 1;
  int k = 0;
  while (t < distinct) {
    t *= static_cast<u64>(f.p());
    ++k;
  }
  if (t != distinct) fail(Errc::Internal, "codeword count is not a power of p");
  s.k = k;

  s.d = 0;
  for (const auto& [w, c] : s.distribution.entries) {
    if (w > 0 && c > 0) {
      s.d = w;
      break;
    }
  }

  const auto predicted = predicted_distribution(s.p, s.m);
  s.matches_theory = (s.distribution.entries == predicted.entries);
  s.ratio_holds = ratio_condition(s.p, s.m).holds;
  return s;
}

std::vector<std::vector<i64>> generator_matrix(const Field& f, i64 a) {
  check_a(f, a);
  if (a == 0) fail(Errc::BadArgument, "a=0 out of theorem scope");
  const auto defset = defining_set(f, a);
  std::vector<std::vector<i64>> rows;
  rows.reserve(f.m());
  for (int j = 0; j < f.m(); ++j) {
    u64 alpha_j = checked_pow(static_cast<u64>(f.p()), static_cast<unsigned>(j));
    rows.push_back(codeword(f, defset, f.element(alpha_j)));
  }
  return rows;
}

std::string generator_matrix_csv(const Field& f, i64 a) {
  std::string out;
  for (const auto& row : generator_matrix(f, a)) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string enumerator_text(const WeightDistribution& d) {
  std::string s;
  for (const auto& [w, c] : d.entries) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    if (w > 0) s += "x^" + std::to_string(w);
  }
  return s;
}

std::string summary_json(const CodeSummary& s) {
  nlohmann::json j;
  j["p"] = s.p;
  j["m"] = s.m;
  j["a"] = s.a;
  j["modulus"] = s.modulus_csv;
  j["n"] = s.n;
  j["k"] = s.k;
  j["d"] = s.d;
  auto weights = nlohmann::json::array();
  for (const auto& [w, c] : s.distribution.entries) weights.push_back({{"w", w}, {"count", c}});
  j["weights"] = weights;
  j["matches_theory"] = s.matches_theory;
  j["wmin_wmax_holds"] = s.ratio_holds;
  return j.dump();
}

}  // namespace tracecode
