#include "tracecode/tracecode.h"

#include <cstring>
#include <new>
#include <string>

#include "char_sums.hpp"
#include "code.hpp"
#include "field.hpp"
#include "theory.hpp"
#include "verify.hpp"

using namespace tracecode;

struct tc_field {
  Field field;
};

struct tc_code {
  Field field;
  CodeSummary summary;
};

namespace {

thread_local std::string g_last_error;

tc_status status_of(Errc c) {
  switch (c) {
    case Errc::NotPrime: return TC_ERR_NOT_PRIME;
    case Errc::NotIrreducible: return TC_ERR_NOT_IRREDUCIBLE;
    case Errc::Overflow: return TC_ERR_OVERFLOW;
    case Errc::DivisionByZero: return TC_ERR_DIVISION_BY_ZERO;
    case Errc::ZeroArgument: return TC_ERR_ZERO_ARGUMENT;
    case Errc::UnsupportedM: return TC_ERR_UNSUPPORTED_M;
    case Errc::BudgetExceeded: return TC_ERR_BUDGET_EXCEEDED;
    case Errc::BadArgument: return TC_ERR_BAD_ARGUMENT;
    case Errc::Io: return TC_ERR_IO;
    case Errc::Internal: return TC_ERR_INTERNAL;
  }
  return TC_ERR_INTERNAL;
}

template <typename Fn>
tc_status guarded(Fn&& fn) {
  try {
    fn();
    return TC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TC_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tc_status check_element(const tc_field* f, uint64_t x) {
  if (f == nullptr) {
    g_last_error = "null field handle";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (x >= f->field.q()) {
    g_last_error = "element index out of range";
    return TC_ERR_BAD_ARGUMENT;
  }
  return TC_OK;
}

}  // namespace

extern "C" {

const char* tc_status_name(tc_status s) {
  switch (s) {
    case TC_OK: return "TC_OK";
    case TC_ERR_NOT_PRIME: return "TC_ERR_NOT_PRIME";
    case TC_ERR_NOT_IRREDUCIBLE: return "TC_ERR_NOT_IRREDUCIBLE";
    case TC_ERR_OVERFLOW: return "TC_ERR_OVERFLOW";
    case TC_ERR_DIVISION_BY_ZERO: return "TC_ERR_DIVISION_BY_ZERO";
    case TC_ERR_ZERO_ARGUMENT: return "TC_ERR_ZERO_ARGUMENT";
    case TC_ERR_UNSUPPORTED_M: return "TC_ERR_UNSUPPORTED_M";
    case TC_ERR_BUDGET_EXCEEDED: return "TC_ERR_BUDGET_EXCEEDED";
    case TC_ERR_BAD_ARGUMENT: return "TC_ERR_BAD_ARGUMENT";
    case TC_ERR_IO: return "TC_ERR_IO";
    case TC_ERR_NOMEM: return "TC_ERR_NOMEM";
    case TC_ERR_INTERNAL: return "TC_ERR_INTERNAL";
  }
  return "TC_ERR_UNKNOWN";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { delete[] s; }

tc_status tc_field_create(int64_t p, int32_t m, const char* modulus_csv, tc_field** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return TC_ERR_BAD_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    if (modulus_csv == nullptr) {
      *out = new tc_field{Field(p, m)};
    } else {
      *out = new tc_field{Field(p, m, Field::parse_modulus_csv(modulus_csv))};
    }
  });
}

void tc_field_free(tc_field* f) { delete f; }

int64_t tc_field_p(const tc_field* f) { return f ? f->field.p() : 0; }
int32_t tc_field_m(const tc_field* f) { return f ? f->field.m() : 0; }
uint64_t tc_field_q(const tc_field* f) { return f ? f->field.q() : 0; }

tc_status tc_field_modulus(const tc_field* f, char** out_csv) {
  if (f == nullptr || out_csv == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out_csv = dup_string(f->field.modulus_csv()); });
}

tc_status tc_field_element_csv(const tc_field* f, uint64_t x, char** out_csv) {
  if (out_csv == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, x); s != TC_OK) return s;
  return guarded([&] {
    FqElem e = f->field.element(x);
    std::string csv;
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) csv += ',';
      csv += std::to_string(e[i]);
    }
    *out_csv = dup_string(csv);
  });
}

tc_status tc_field_trace(const tc_field* f, uint64_t x, int64_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, x); s != TC_OK) return s;
  return guarded([&] { *out = f->field.trace(f->field.element(x)); });
}

tc_status tc_field_eta(const tc_field* f, uint64_t x, int32_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, x); s != TC_OK) return s;
  return guarded([&] { *out = f->field.eta(f->field.element(x)); });
}

tc_status tc_field_generator(const tc_field* f, uint64_t* out) {
  if (f == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  *out = f->field.generator_index();
  return TC_OK;
}

tc_status tc_legendre(int64_t p, int64_t y, int32_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out = legendre(p, y); });
}

tc_status tc_gauss_sums(const tc_field* f, double* numeric_re, double* numeric_im,
                        double* closed_re, double* closed_im) {
  if (f == nullptr || numeric_re == nullptr || numeric_im == nullptr || closed_re == nullptr ||
      closed_im == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    FieldTables t(f->field);
    Complex numeric = gauss_sum_numeric(t);
    Complex closed = gauss_sum_closed_form(f->field);
    *numeric_re = numeric.real();
    *numeric_im = numeric.imag();
    *closed_re = closed.real();
    *closed_im = closed.imag();
  });
}

tc_status tc_gauss_sums_fp(int64_t p, double* numeric_re, double* numeric_im, double* closed_re,
                           double* closed_im) {
  if (numeric_re == nullptr || numeric_im == nullptr || closed_re == nullptr ||
      closed_im == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
      fail(Errc::NotPrime, "p must be an odd prime");
    Complex numeric = gauss_sum_fp_numeric(p);
    Complex closed = gauss_sum_fp_closed_form(p);
    *numeric_re = numeric.real();
    *numeric_im = numeric.imag();
    *closed_re = closed.real();
    *closed_im = closed.imag();
  });
}

tc_status tc_code_build(const tc_field* f, int64_t a, uint64_t budget, tc_code** out) {
  if (f == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  *out = nullptr;
  if (budget == 0) budget = TC_DEFAULT_BUDGET;
  return guarded([&] { *out = new tc_code{f->field, code_summary(f->field, a, budget)}; });
}

void tc_code_free(tc_code* c) { delete c; }

uint64_t tc_code_length(const tc_code* c) { return c ? c->summary.n : 0; }
int32_t tc_code_dimension(const tc_code* c) { return c ? c->summary.k : 0; }
uint64_t tc_code_min_distance(const tc_code* c) { return c ? c->summary.d : 0; }
int32_t tc_code_matches_theory(const tc_code* c) {
  return (c && c->summary.matches_theory) ? 1 : 0;
}
int32_t tc_code_ratio_holds(const tc_code* c) { return (c && c->summary.ratio_holds) ? 1 : 0; }
size_t tc_code_weight_rows(const tc_code* c) {
  return c ? c->summary.distribution.entries.size() : 0;
}

tc_status tc_code_weight_row(const tc_code* c, size_t i, uint64_t* weight,
                             uint64_t* multiplicity) {
  if (c == nullptr || weight == nullptr || multiplicity == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (i >= c->summary.distribution.entries.size()) {
    g_last_error = "weight row index out of range";
    return TC_ERR_BAD_ARGUMENT;
  }
  *weight = c->summary.distribution.entries[i].first;
  *multiplicity = c->summary.distribution.entries[i].second;
  return TC_OK;
}

tc_status tc_code_enumerator_text(const tc_code* c, char** out) {
  if (c == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out = dup_string(enumerator_text(c->summary.distribution)); });
}

tc_status tc_code_summary_json(const tc_code* c, char** out) {
  if (c == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out = dup_string(summary_json(c->summary)); });
}

tc_status tc_code_generator_matrix_csv(const tc_code* c, char** out) {
  if (c == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *out = dup_string(generator_matrix_csv(c->field, c->summary.a)); });
}

tc_status tc_count_nba(const tc_field* f, uint64_t b, int64_t a, uint64_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, b); s != TC_OK) return s;
  return guarded([&] { *out = count_nba(f->field, f->field.element(b), a); });
}

tc_status tc_predicted_nba(const tc_field* f, uint64_t b, int64_t a, uint64_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, b); s != TC_OK) return s;
  return guarded([&] { *out = predicted_nba(f->field, f->field.element(b), a); });
}

tc_status tc_predicted_nb0(const tc_field* f, uint64_t b, uint64_t* out) {
  if (out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  if (tc_status s = check_element(f, b); s != TC_OK) return s;
  return guarded([&] { *out = predicted_nb0(f->field, f->field.element(b)); });
}

tc_status tc_verify_lemma(const tc_field* f, tc_lemma which, uint64_t seed,
                          tc_verify_result* out) {
  if (f == nullptr || out == nullptr) {
    g_last_error = "null argument";
    return TC_ERR_BAD_ARGUMENT;
  }
  switch (which) {
    case TC_LEMMA_1:
    case TC_LEMMA_2:
    case TC_LEMMA_4:
    case TC_LEMMA_5:
    case TC_LEMMA_6:
    case TC_LEMMA_7:
    case TC_LEMMA_8:
    case TC_LEMMA_12:
    case TC_LEMMA_13:
      break;
    default:
      g_last_error = "unknown lemma id";
      return TC_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    FieldTables t(f->field);
    LemmaCheck check = verify_lemma(f->field, t, static_cast<LemmaId>(which), seed);
    out->pass = check.pass ? 1 : 0;
    out->exhaustive = check.exhaustive ? 1 : 0;
    out->cases = check.cases;
    std::snprintf(out->witness, sizeof(out->witness), "%s", check.witness.c_str());
  });
}

}  // extern "C"
