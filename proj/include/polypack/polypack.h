/* C interface to the polypack library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * structured value crosses the boundary as a JSON string; strings returned
 * through `char**` are owned by the caller and released with
 * pp_string_free. Rational numbers in JSON are "p/q" strings.
 *
 * Every function returns a pp_status. On failure, pp_last_error() describes
 * the problem for the calling thread until its next call into the library.
 */
#ifndef POLYPACK_H
#define POLYPACK_H

#include <stdint.h>

#if defined(POLYPACK_BUILDING)
#define PP_API __attribute__((visibility("default")))
#else
#define PP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_DOMAIN = 1,
  PP_ERR_SIZE_LIMIT = 2,
  PP_ERR_UNSUPPORTED_KIND = 3,
  PP_ERR_LAYOUT_CONFLICT = 4,
  PP_ERR_UNROUTED = 5,
  PP_ERR_INVALID_ROTATION = 6,
  PP_ERR_PARITY_MISMATCH = 7,
  PP_ERR_PARAM_VIOLATION = 8,
  PP_ERR_NON_SIMPLE = 9,
  PP_ERR_PARSE = 10,
  PP_ERR_NULL_ARGUMENT = 11,
  PP_ERR_INTERNAL = 12
} pp_status;

typedef struct pp_instance pp_instance;
typedef struct pp_gadgets pp_gadgets;

PP_API const char* pp_status_name(pp_status status);
PP_API const char* pp_last_error(void);
PP_API void pp_string_free(char* s);

/* Planar-Grid-SAT instances. */
PP_API pp_status pp_instance_from_json(const char* json, pp_instance** out);
PP_API void pp_instance_free(pp_instance* inst);
PP_API pp_status pp_instance_to_json(const pp_instance* inst, char** json);
PP_API pp_status pp_instance_dimensions(const pp_instance* inst, int* width, int* height);
/* *ok = 1 when the instance has no violations; the list is JSON. */
PP_API pp_status pp_instance_validate(const pp_instance* inst, int* ok, char** violations_json);
PP_API pp_status pp_check_assignment(const pp_instance* inst, const char* assignment_json, int* ok,
                                     char** violations_json);
/* method 0: exhaustive (<= 24 vertices), 1: propagation. *assignment_json is
 * set only when satisfiable. */
PP_API pp_status pp_solve(const pp_instance* inst, int method, int* satisfiable, char** assignment_json);

/* Circuits. pp_lower expands macros before lowering. width/height <= 0
 * take the layout's "width"/"height" fields or the smallest grid covering
 * every placed vertex. */
PP_API pp_status pp_expand_macros(const char* netlist_json, char** expanded_json);
PP_API pp_status pp_lower(const char* netlist_json, const char* layout_json, int width, int height,
                          char** instance_json);

/* Gadget parameters. */
PP_API pp_status pp_default_params(int width, int height, char** params_json);
PP_API pp_status pp_validate_params(const char* params_json, int width, int height, int* ok,
                                    char** violations_json);

/* Polygon synthesis. params_json may be NULL for defaults; partial objects
 * override individual defaults. printed_tables != 0 programs phase 5 from the
 * printed tables instead of the filtered ones. */
PP_API pp_status pp_synth(const pp_instance* inst, int phase, const char* params_json, int printed_tables,
                          pp_gadgets** out);
PP_API void pp_gadgets_free(pp_gadgets* g);
PP_API pp_status pp_gadgets_to_json(const pp_gadgets* g, char** json);
PP_API pp_status pp_gadgets_from_json(const char* json, pp_gadgets** out);
PP_API pp_status pp_gadgets_copy_count(const pp_gadgets* g, int* copies);

/* Canonical placements for an assignment of the instance the gadgets were
 * built from. */
PP_API pp_status pp_canonical_certificate(const pp_instance* inst, const pp_gadgets* g,
                                          const char* assignment_json, char** certificate_json);
/* *valid = 1 iff the certificate packs every copy. */
PP_API pp_status pp_verify(const pp_gadgets* g, const char* certificate_json, int first_only, int* valid,
                           char** report_json);
/* certificate_json may be NULL to draw the small polygon once at the origin. */
PP_API pp_status pp_render_svg(const pp_gadgets* g, const char* certificate_json, char** svg);

/* Equivalence battery: every edge classification of each grid up to
 * max_w x max_h (at most 6 vertices), plus `seeds` random rand_w x rand_h
 * instances with seeds seed_base, seed_base+1, ... */
PP_API pp_status pp_equivalence(int max_w, int max_h, int seeds, int rand_w, int rand_h, uint64_t seed_base,
                                int jobs, int* all_agree, char** summary_json);

/* CSV transcription of the state and transition tables. */
PP_API pp_status pp_dump_tables(int filtered, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* POLYPACK_H */
