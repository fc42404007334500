#ifndef WAVEFRONT_C_H
#define WAVEFRONT_C_H

/* C interface of the wavefront library. All operations exchange UTF-8
 * JSON strings. On success they return a malloc'd string the caller
 * releases with wf_string_free; on failure they return NULL and leave
 * an error code and message on the context. A context is not thread
 * safe; create one per thread. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wf_ctx wf_ctx;

/* Error codes: 0 ok, 1 parse error, 2 wrong class, 3 not special,
 * 4 not a partition, 5 bound exceeded, 6 invalid input, 7 internal. */

wf_ctx* wf_ctx_create(void);
void wf_ctx_destroy(wf_ctx* ctx);
int wf_ctx_errcode(const wf_ctx* ctx);
const char* wf_ctx_errmsg(const wf_ctx* ctx);
void wf_string_free(char* s);

/* quadruple -> orthogonal partition of 2n+1 */
char* wf_wavefront(wf_ctx* ctx, const char* quad_json);

/* partition with three distinct even parts -> array of 8 row objects
 * {"eps","k","lmax","emax","tmin","mu"} */
char* wf_table_5_3(wf_ctx* ctx, const char* partition_json);

/* duality map; cls is "symp", "orth_odd" or "orth_even" */
char* wf_dual(wf_ctx* ctx, const char* cls, const char* partition_json);

/* smallest special symplectic partition dominating the input */
char* wf_sp(wf_ctx* ctx, const char* partition_json);

/* special partition -> {"special","symbol","members":[symbols]} */
char* wf_family(wf_ctx* ctx, const char* cls, const char* partition_json);

/* endoscopic induction of two special partitions */
char* wf_induce(wf_ctx* ctx, const char* l1_json, const char* l2_json);

/* signed partition -> {"k","rho"} */
char* wf_springer(wf_ctx* ctx, const char* signed_json);

/* ordinary symbol of a partition of the class */
char* wf_symb(wf_ctx* ctx, const char* cls, const char* partition_json);

/* suite in {duality,symbols,springer,endoscopy,wavefront,all}; bound < 0
 * selects the suite default */
char* wf_verify(wf_ctx* ctx, const char* suite, int bound);

#ifdef __cplusplus
}
#endif

#endif
