#include <stdio.h>
#include <string.h>

#include "cyclo/cyclo.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int is(cyclo_rational r, int64_t num, int64_t den) {
  return r.num == num && r.den == den;
}

int main(void) {
  cyclo_group* c2 = NULL;
  cyclo_group* c3 = NULL;
  cyclo_group* prod = NULL;
  EXPECT(cyclo_group_cyclic(2, &c2) == CYCLO_OK);
  EXPECT(cyclo_group_cyclic(3, &c3) == CYCLO_OK);
  const cyclo_group* factors[] = {c2, c3};
  EXPECT(cyclo_group_free_product(factors, 2, &prod) == CYCLO_OK);

  const char* text = NULL;
  EXPECT(cyclo_group_describe(prod, &text) == CYCLO_OK);
  EXPECT(strcmp(text, "free_product[cyclic 2, cyclic 3]") == 0);

  cyclo_marked* m = NULL;
  EXPECT(cyclo_marked_default(prod, &m) == CYCLO_OK);
  EXPECT(cyclo_marked_rank(m) == 2);
  EXPECT(strcmp(cyclo_marked_symbol(m, 1), "g1") == 0);

  cyclo_prediction* p = NULL;
  cyclo_rational r;
  EXPECT(cyclo_predict(m, CYCLO_XI_HAT, &p) == CYCLO_OK);
  EXPECT(cyclo_prediction_unnormalized(p, &r) == CYCLO_OK && is(r, 3, 4));
  EXPECT(cyclo_prediction_value(p, &r) == CYCLO_OK && is(r, -1, 4));
  cyclo_prediction_destroy(p);

  cyclo_bounds* b = NULL;
  cyclo_bound_row row;
  EXPECT(cyclo_bounds_compute(m, 6, 0, &b) == CYCLO_OK);
  EXPECT(cyclo_bounds_count(b) == 6);
  EXPECT(cyclo_bounds_row(b, 5, &row) == CYCLO_OK);
  EXPECT(is(row.xi, 31, 42));
  EXPECT(strcmp(row.method, "exact-flow") == 0);
  EXPECT(cyclo_bounds_row(b, 6, &row) == CYCLO_E_OUT_OF_RANGE);
  cyclo_bounds_destroy(b);

  cyclo_rational gain;
  cyclo_rational zero = {0, 1};
  EXPECT(cyclo_circuit_gain_bound(2, 3, zero, 1, &gain) == CYCLO_OK && is(gain, -1, 2));
  EXPECT(cyclo_circuit_gain_bound(2, 1, zero, 1, &gain) == CYCLO_E_DIVISION_BY_ZERO);
  EXPECT(strlen(cyclo_last_error()) > 0);

  cyclo_group* bad = NULL;
  EXPECT(cyclo_group_cyclic(0, &bad) == CYCLO_E_INVALID_SPEC);
  EXPECT(bad == NULL);
  EXPECT(strcmp(cyclo_status_name(CYCLO_E_INVALID_SPEC), "InvalidSpec") == 0);
  EXPECT(cyclo_group_describe(NULL, &text) == CYCLO_E_NULL_POINTER);

  cyclo_group* f2 = NULL;
  EXPECT(cyclo_group_free(2, &f2) == CYCLO_OK);
  cyclo_letter g0 = {"g0", 1};
  cyclo_word images[] = {{&g0, 1}, {&g0, 1}};
  cyclo_schreier* s = NULL;
  EXPECT(cyclo_schreier_verify(f2, c2, images, 2, 2, &s) == CYCLO_OK);
  EXPECT(cyclo_schreier_basis_size(s) == 3);
  EXPECT(strcmp(cyclo_schreier_basis(s, 1), "g0^2") == 0);
  cyclo_rational lhs, rhs;
  int equal = 0;
  EXPECT(cyclo_schreier_sides(s, &lhs, &rhs, &equal) == CYCLO_OK);
  EXPECT(is(lhs, -2, 1) && is(rhs, -2, 1) && equal);
  cyclo_schreier_destroy(s);

  cyclo_marked_destroy(m);
  cyclo_group_destroy(f2);
  cyclo_group_destroy(prod);
  cyclo_group_destroy(c3);
  cyclo_group_destroy(c2);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi smoke ok\n");
  return 0;
}
