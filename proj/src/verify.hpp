#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace tracecode {

// One closed-form result checked against its independent computation.
enum class LemmaId {
  Gauss = 1,         // Lemma 1: numeric Gauss sums vs closed forms, |G| = sqrt(q)
  QuadraticSum = 2,  // Lemma 2: random quadratics, direct sum vs closed form
  Lemma4 = 4,
  Lemma5 = 5,
  Lemma6 = 6,        // |M|, |N| vs exhaustive scan
  Lemma7 = 7,        // |M_a| vs exhaustive scan, all a
  Lemma8 = 8,        // n_(b,0) prediction vs brute-force count
  Lemma12 = 12,
  Lemma13 = 13,      // n_(b,a) prediction vs brute-force count
};

struct LemmaCheck {
  LemmaId id{};
  std::string name;
  bool pass = false;
  u64 cases = 0;
  bool exhaustive = false;  // over b (and a where applicable)
  std::string witness;      // first failing case, empty on pass
};

// Checks one lemma on one field. Direct sums are exhaustive over b when q is
// small, sampled (seeded) otherwise. Errc::UnsupportedM when the lemma does
// not apply at this (p, m).
LemmaCheck verify_lemma(const Field& f, const FieldTables& t, LemmaId id, u64 seed);

// Every lemma applicable to this field, in id order.
std::vector<LemmaCheck> verify_field(const Field& f, u64 seed);

const char* lemma_name(LemmaId id);

}  // namespace tracecode
