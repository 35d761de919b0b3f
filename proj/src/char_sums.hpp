#pragma once

#include <complex>

#include "field.hpp"

namespace tracecode {

using Complex = std::complex<double>;

// chi_b(x) = zeta_p^{Tr(bx)}
Complex additive_character(const Field& f, const FqElem& b, const FqElem& x);

// Direct-summation values. These iterate term by term (grouping only equal
// exponents) and never use the closed forms they are checked against.
Complex gauss_sum_numeric(const FieldTables& t);            // sum_x eta(x) chi_1(x)
Complex gauss_sum_fp_numeric(i64 p);                        // same over F_p
Complex quadratic_sum_direct(const FieldTables& t, u64 a2, u64 a1, u64 a0);
Complex lemma4_direct(const FieldTables& t, u64 b);         // sum_{y in Fp*} sum_x chi_1(b y x^2)
Complex lemma5_direct(const FieldTables& t, u64 b);         // sum_{y,z in Fp*} sum_x chi_1(b y x^2 + z x)
Complex lemma12_direct(const FieldTables& t, u64 b, i64 a); // as lemma5 with zeta^{-za} weights

// Closed forms.
Complex gauss_sum_closed_form(i64 p, int m);                // (-1)^{m-1} i^{(p-1)^2 m/4} sqrt(q)
Complex gauss_sum_closed_form(const Field& f);
Complex gauss_sum_fp_closed_form(i64 p);                    // i^{(p-1)^2/4} sqrt(p)
Complex quadratic_sum_closed_form(const Field& f, const FqElem& a2, const FqElem& a1,
                                  const FqElem& a0);        // chi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G
Complex lemma4_closed_form(const Field& f, const FqElem& b);
Complex lemma5_closed_form(const Field& f, const FqElem& b);
Complex lemma12_closed_form(const Field& f, const FqElem& b, i64 a);

}  // namespace tracecode
