#include <math.h>
#include <stdio.h>
#include <string.h>

#include "graphcurv.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      const char *msg = gc_last_error_message();                     \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,         \
              msg ? msg : "no error message");                       \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  GcGraph *g = NULL;
  CHECK(gc_graph_paper_example(0.01, &g) == GC_STATUS_OK);

  size_t n = 0;
  CHECK(gc_graph_vertex_count(g, &n) == GC_STATUS_OK && n == 3);

  double rho[3];
  CHECK(gc_curvature(g, INFINITY, 1e-10, rho, n) == GC_STATUS_OK);
  CHECK(rho[0] < 0.0 && rho[1] > 0.0 && rho[2] > 0.0);

  bool ok = false;
  double value = -1.0;
  CHECK(gc_kato_check(g, rho, n, 1.0, 1.0, GC_KATO_VARIANT_B, false, &ok, &value) == GC_STATUS_OK);
  CHECK(ok && value >= 0.0);

  char *reports = NULL;
  CHECK(gc_verify(g, "all", NULL, 0, 1.0, 1.0, INFINITY, 20, 42, &reports) == GC_STATUS_OK);
  CHECK(strstr(reports, "\"check\":\"lichnerowicz\"") != NULL);
  gc_string_free(reports);

  GcGraph *bad = NULL;
  CHECK(gc_graph_from_json("{\"vertices\":[]}", &bad) == GC_STATUS_INVALID_INPUT);
  CHECK(bad == NULL && gc_last_error_message() != NULL);

  gc_graph_free(g);
  printf("ok\n");
  return 0;
}
