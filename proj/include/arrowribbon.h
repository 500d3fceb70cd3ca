#ifndef ARROWRIBBON_H
#define ARROWRIBBON_H

/* C interface to the arrow ribbon graph library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return ARB_OK or an error code; the
 * message of the most recent failure on the calling thread is available from
 * arb_last_error(). Strings handed out through char** parameters are
 * allocated by the library and released with arb_string_free(). */

#include <stddef.h>

#if defined(_WIN32)
#define ARB_API __declspec(dllexport)
#else
#define ARB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct arb_graph arb_graph;
typedef struct arb_poly arb_poly;
typedef struct arb_link arb_link;

typedef enum arb_status {
  ARB_OK = 0,
  ARB_ERR_INVALID_ARGUMENT = 1,
  ARB_ERR_PARSE = 2,
  ARB_ERR_INVALID_GRAPH = 3,
  ARB_ERR_UNKNOWN_EDGE = 4,
  ARB_ERR_MISSING_SIGNS = 5,
  ARB_ERR_NON_INVERTIBLE = 6,
  ARB_ERR_SIZE_LIMIT = 7,
  ARB_ERR_INVALID_LINK = 8,
  ARB_ERR_MOVE_MISMATCH = 9,
  ARB_ERR_INTERNAL = 10
} arb_status;

/* Polynomial families computed from a graph. */
typedef enum arb_graph_poly_kind {
  ARB_POLY_ARROW_DICHROMATIC = 0,   /* A_G(a, b, c, K) */
  ARB_POLY_DICHROMATIC = 1,         /* Z_G(a, b, c) */
  ARB_POLY_TUTTE = 2,               /* T_G(x, y) */
  ARB_POLY_ARROW_BR = 3,            /* ABR_G with weights x[e], y[e] */
  ARB_POLY_SIGNED_BR = 4,           /* sBR_G(X, Y, Z, K) */
  ARB_POLY_SIGNED_DICHROMATIC = 5   /* Z_G at a = q, b = alpha or q/alpha */
} arb_graph_poly_kind;

/* Polynomial invariants of a link diagram. */
typedef enum arb_link_poly_kind {
  ARB_LINK_KAUFFMAN_BRACKET = 0,
  ARB_LINK_ARROW_BRACKET = 1,
  ARB_LINK_NORMALIZED_ARROW = 2,
  ARB_LINK_JONES = 3
} arb_link_poly_kind;

/* Identities checked on a link diagram. */
typedef enum arb_link_identity {
  ARB_IDENTITY_THISTLETHWAITE = 0, /* needs a state */
  ARB_IDENTITY_ALL_A = 1,
  ARB_IDENTITY_SEIFERT = 2
} arb_link_identity;

ARB_API const char* arb_version(void);
ARB_API const char* arb_last_error(void);
ARB_API const char* arb_status_name(arb_status status);
ARB_API void arb_string_free(char* s);

/* ---- graphs ---- */

ARB_API arb_status arb_graph_from_json(const char* json, arb_graph** out);
ARB_API arb_status arb_graph_to_json(const arb_graph* g, char** out);
ARB_API void arb_graph_free(arb_graph* g);
ARB_API arb_status arb_graph_num_vertices(const arb_graph* g, size_t* out);
ARB_API arb_status arb_graph_num_edges(const arb_graph* g, size_t* out);

ARB_API arb_status arb_graph_delete_edge(const arb_graph* g, const char* edge, arb_graph** out);
ARB_API arb_status arb_graph_contract_edge(const arb_graph* g, const char* edge, arb_graph** out);
/* Partial dual with respect to the listed edge ids. */
ARB_API arb_status arb_graph_partial_dual(const arb_graph* g, const char* const* edges, size_t count, arb_graph** out);
ARB_API arb_status arb_graph_natural_dual(const arb_graph* g, arb_graph** out);
/* max_edges = 0 removes the size bound. */
ARB_API arb_status arb_graph_canonical_form(const arb_graph* g, int include_reflection, size_t max_edges, char** out);

/* threads = 0 uses every hardware thread. */
ARB_API arb_status arb_graph_polynomial(const arb_graph* g, arb_graph_poly_kind kind, unsigned threads, arb_poly** out);

/* JSON report {"ok":bool,"checks":[{"name","passed","total"}]}; *all_ok is
 * set to 1 when every check passes. */
ARB_API arb_status arb_graph_verify_properties(const arb_graph* g, unsigned threads, char** report, int* all_ok);

/* ---- polynomials ---- */

ARB_API arb_status arb_poly_parse(const char* text, arb_poly** out);
ARB_API arb_status arb_poly_to_string(const arb_poly* p, char** out);
ARB_API arb_status arb_poly_to_json(const arb_poly* p, char** out);
ARB_API int arb_poly_equal(const arb_poly* p, const arb_poly* q);
ARB_API void arb_poly_free(arb_poly* p);

/* ---- link diagrams ---- */

ARB_API arb_status arb_link_parse(const char* gauss_code, arb_link** out);
ARB_API arb_status arb_link_to_string(const arb_link* l, char** out);
ARB_API void arb_link_free(arb_link* l);
ARB_API arb_status arb_link_num_crossings(const arb_link* l, size_t* out);
ARB_API arb_status arb_link_writhe(const arb_link* l, int* out);

ARB_API arb_status arb_link_polynomial(const arb_link* l, arb_link_poly_kind kind, arb_poly** out);

/* States are "A,B,A" in crossing order, or allA, allB, seifert,
 * disoriented. */
ARB_API arb_status arb_link_state_from_index(const arb_link* l, unsigned long long index, char** out);
ARB_API arb_status arb_link_state_graph(const arb_link* l, const char* state, arb_graph** out);
ARB_API arb_status arb_link_verify_state_duality(const arb_link* l, const char* state1, const char* state2, int* equal);

/* Fills lhs and rhs (either may be NULL) and *equal. `state` is only read by
 * ARB_IDENTITY_THISTLETHWAITE. */
ARB_API arb_status arb_link_verify_identity(const arb_link* l, arb_link_identity identity, const char* state,
                                            unsigned threads, arb_poly** lhs, arb_poly** rhs, int* equal);

#ifdef __cplusplus
}
#endif

#endif
