/*
 * pmc.h - C interface to the pseudomanifold library.
 *
 * Complexes are opaque handles. Every call that can fail returns a
 * pmc_status; on anything other than PMC_OK or PMC_NEGATIVE the message of the
 * failure is available from pmc_last_error() on the calling thread.
 *
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with pmc_string_free().
 */
#ifndef PMC_PMC_H
#define PMC_PMC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef PMC_BUILDING_LIBRARY
#    define PMC_API __declspec(dllexport)
#  else
#    define PMC_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define PMC_API __attribute__((visibility("default")))
#else
#  define PMC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmc_status {
  PMC_OK = 0,
  PMC_NEGATIVE = 1,      /* the question was answered "no" */
  PMC_ERR_USAGE = 2,     /* bad argument (unknown name, bad face, out of range) */
  PMC_ERR_INTEGRITY = 3, /* stored or computed data disagrees with itself */
  PMC_ERR_PARSE = 4,     /* malformed input; message carries line and column */
  PMC_ERR_MOVE = 5,      /* face not removable, or a script step failed */
  PMC_ERR_IO = 6,
  PMC_ERR_INTERNAL = 7
} pmc_status;

typedef struct pmc_complex pmc_complex;

PMC_API const char* pmc_version(void);
/* Message of the last failure on this thread; "" when none. */
PMC_API const char* pmc_last_error(void);
PMC_API void pmc_string_free(char* s);

/* --- complexes ---------------------------------------------------------- */

/* Facet-list text or the JSON form {"dim": d, "facets": [[...], ...]}. */
PMC_API pmc_status pmc_complex_parse(const char* text, pmc_complex** out);
PMC_API pmc_status pmc_complex_load(const char* path, pmc_complex** out);
/* Builds a complex from facet bit masks (bit v set when v is a vertex). */
PMC_API pmc_status pmc_complex_from_masks(const uint64_t* masks, size_t count, pmc_complex** out);
PMC_API void pmc_complex_free(pmc_complex* k);

PMC_API int pmc_complex_dim(const pmc_complex* k);
PMC_API size_t pmc_complex_num_facets(const pmc_complex* k);
PMC_API int pmc_complex_num_vertices(const pmc_complex* k);
/* Facets in lexicographic order; index must be < pmc_complex_num_facets. */
PMC_API uint64_t pmc_complex_facet(const pmc_complex* k, size_t index);
/* 1 when the two complexes have the same facets. */
PMC_API int pmc_complex_equal(const pmc_complex* a, const pmc_complex* b);

PMC_API pmc_status pmc_complex_to_text(const pmc_complex* k, int json, char** out);
PMC_API pmc_status pmc_complex_save(const pmc_complex* k, const char* path, int json);

/* --- reports --------------------------------------------------------------
 * Each writes a report to *out: aligned text, or a JSON document when json is
 * non-zero.
 */

/* PMC_NEGATIVE unless the complex is a normal pseudomanifold. */
PMC_API pmc_status pmc_verify(const pmc_complex* k, int json, char** out);
/* One line per vertex: link type and, when known, the catalog name. */
PMC_API pmc_status pmc_links(const pmc_complex* k, int json, char** out);
/* Removable faces for i-moves, or for every i >= 1 when i < 0 (every facet
 * admits a 0-move, so those are listed only on request). */
PMC_API pmc_status pmc_moves(const pmc_complex* k, int i, int json, char** out);
PMC_API pmc_status pmc_homology(const pmc_complex* k, int json, char** out);
/* PMC_NEGATIVE when not isomorphic; the report names the invariant. */
PMC_API pmc_status pmc_iso(const pmc_complex* a, const pmc_complex* b, int json, char** out);

/* --- moves --------------------------------------------------------------- */

/* face is "5 8", "58" or "{5,8}". fresh names the new vertex of a facet
 * subdivision; pass -1 for the least unused label. */
PMC_API pmc_status pmc_apply(const pmc_complex* k, const char* face, int fresh, pmc_complex** out);
/* Steps separated by ';', e.g. "67;56;238;348" or "1358+0". */
PMC_API pmc_status pmc_script(const pmc_complex* k, const char* steps, pmc_complex** out);

/* --- coverings ----------------------------------------------------------- */

/* map_text lists "source target" vertex pairs. PMC_NEGATIVE when the map is
 * simplicial but not a branched covering; PMC_ERR_USAGE when it is not
 * simplicial. */
PMC_API pmc_status pmc_cover_check(const pmc_complex* source, const pmc_complex* target,
                                   const char* map_text, int json, char** out);

/* --- catalog ------------------------------------------------------------- */

PMC_API pmc_status pmc_catalog_list(int json, char** out);
/* Verified entry; PMC_ERR_USAGE on an unknown name. */
PMC_API pmc_status pmc_catalog_get(const char* name, pmc_complex** out);
/* Runs every catalog check; PMC_ERR_INTEGRITY when any fails. */
PMC_API pmc_status pmc_catalog_verify(int json, char** out);

/* --- classification ------------------------------------------------------ */

typedef struct pmc_classify_options {
  int vertices;   /* only 8 is supported */
  int exhaustive; /* also run the flat search and require the same classes */
  int symmetry;   /* prune the neighbourly search by link automorphisms */
  int jobs;
} pmc_classify_options;

PMC_API void pmc_classify_defaults(pmc_classify_options* options);
/* Writes census.json, table1.txt, hasse_spheres.dot and hasse_normals.dot
 * into outdir (which must exist) and a short summary to *summary. */
PMC_API pmc_status pmc_classify(const pmc_classify_options* options, const char* outdir, char** summary);

/* Weak 2-pseudomanifolds on exactly n vertices, 4 <= n <= 10. */
PMC_API pmc_status pmc_enumerate_surfaces(int n, int json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PMC_PMC_H */
