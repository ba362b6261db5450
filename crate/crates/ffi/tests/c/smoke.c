#include <stdio.h>
#include <string.h>

#include "chroma.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,  \
              chroma_last_error());                                   \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  /* C5 */
  uint32_t edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 0};
  ChromaGraph *g = NULL;
  CHECK(chroma_graph_new(5, edges, 5, &g) == CHROMA_STATUS_OK);
  CHECK(chroma_graph_edge_count(g) == 5);

  ChromaDecision *d = NULL;
  CHECK(chroma_solve_colouring(g, CHROMA_FAMILY_S, 1, 2, 3, 0, false, &d) ==
        CHROMA_STATUS_OK);
  CHECK(chroma_decision_verdict(d) == CHROMA_VERDICT_YES);
  uint32_t colours[8];
  size_t n = 0;
  CHECK(chroma_decision_certificate(d, colours, 8, &n) == CHROMA_STATUS_OK);
  CHECK(n == 5);
  for (size_t i = 0; i < 5; i++) {
    CHECK(colours[i] != colours[(i + 1) % 5]);
  }
  char *json = chroma_decision_json(d);
  CHECK(json != NULL && strstr(json, "\"verdict\":\"yes\"") != NULL);
  chroma_string_free(json);
  chroma_decision_free(d);

  uint32_t td = 0;
  CHECK(chroma_treedepth(g, 10, &td) == CHROMA_STATUS_OK && td == 4);
  CHECK(chroma_treedepth(g, 2, &td) == CHROMA_STATUS_CAP_EXCEEDED);

  ChromaGraph *bad = NULL;
  CHECK(chroma_graph_from_dimacs("p edge 2 1\ne 1 3\n", &bad) ==
        CHROMA_STATUS_INVALID_INPUT);
  CHECK(bad == NULL && strlen(chroma_last_error()) > 0);

  chroma_graph_free(g);
  puts("ok");
  return 0;
}
