/* C interface to the GKM graph library.
 *
 * All objects are reached through the opaque gkm_space handle; every
 * function reports a gkm_status, writes results through out-parameters,
 * and never throws. Rendered reports are heap strings released with
 * gkm_string_free. gkm_last_error() describes the most recent failure on
 * the calling thread.
 */
#ifndef GKM_H
#define GKM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gkm_status {
  GKM_OK = 0,
  GKM_ERROR_INVALID_ARGUMENT = 1, /* null pointer or out-of-range parameter */
  GKM_ERROR_INVALID_SPEC = 2,     /* malformed or inadmissible space description */
  GKM_ERROR_INVARIANT = 3,        /* a mathematical invariant failed; never ignored */
  GKM_ERROR_INTERNAL = 4
} gkm_status;

typedef struct gkm_space gkm_space;

const char *gkm_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char *gkm_last_error(void);

/* Builds the GKM graph of G/K. type is a Cartan label ("A2", "B3", ...);
 * k_spec is one of "torus", "long", "short", "parabolic:i,j,...",
 * "explicit:[c1,...];[c1,...]". On success *out owns the space. */
gkm_status gkm_space_create(const char *type, const char *k_spec, gkm_space **out);
void gkm_space_destroy(gkm_space *space);

gkm_status gkm_space_rank(const gkm_space *space, int *out);
gkm_status gkm_space_vertex_count(const gkm_space *space, int *out);
gkm_status gkm_space_edge_count(const gkm_space *space, int *out);
gkm_status gkm_space_degree(const gkm_space *space, int *out);
gkm_status gkm_space_is_simple(const gkm_space *space, int *out);
gkm_status gkm_space_euler_characteristic(const gkm_space *space, long *out);
gkm_status gkm_space_acs_condition(const gkm_space *space, int *out);
gkm_status gkm_space_section_count(const gkm_space *space, long *out);

/* Warnings recorded while resolving K (e.g. closure enlargement). The
 * returned pointers live as long as the space. */
gkm_status gkm_space_warning_count(const gkm_space *space, int *out);
gkm_status gkm_space_warning(const gkm_space *space, int index, const char **out);

/* Renderers; *out receives a NUL-terminated heap string. */
gkm_status gkm_space_render_dot(const gkm_space *space, char **out);
gkm_status gkm_space_graph_json(const gkm_space *space, char **out);
gkm_status gkm_space_analyze_json(const gkm_space *space, uint64_t seed, int num_xi, char **out);
gkm_status gkm_space_cohomology_json(const gkm_space *space, uint64_t seed, int trials,
                                     int max_degree, char **out);

void gkm_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* GKM_H */
