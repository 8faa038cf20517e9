/*
 * cantor: constructive generation of transcendental numbers with checkable
 * certificates. C interface over the C++ core: opaque handles, status codes,
 * JSON strings for structured results. All functions are thread-safe; handles
 * may be shared across threads.
 */
#ifndef CANTOR_H
#define CANTOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cantor_status {
    CANTOR_OK = 0,
    CANTOR_EINVAL = 1,     /* invalid argument or configuration */
    CANTOR_EPARSE = 2,     /* malformed input (numbers, files, digit strings) */
    CANTOR_EUNRESOLVED = 3, /* a required difference proof missed its budget */
    CANTOR_EIO = 4,        /* file system failure */
    CANTOR_EINTERNAL = 5
} cantor_status;

const char* cantor_status_str(cantor_status s);
/* message for the most recent failure on this thread; empty when none */
const char* cantor_last_error(void);

/* every char* output is allocated by the library; release it here */
void cantor_string_free(char* s);

/*
 * Context: the working window (M, W) with rational endpoints given as decimal
 * strings, integers or fractions ("0", "1", "-4", "3/7"). All digit output is
 * the binary expansion after the affine map onto [0,1).
 */
typedef struct cantor_ctx cantor_ctx;
cantor_status cantor_ctx_new(const char* window_lo, const char* window_hi, cantor_ctx** out);
void cantor_ctx_free(cantor_ctx* ctx);

/* one enumeration record: index, carrier polynomial, isolator, digits */
cantor_status cantor_enumerate_json(cantor_ctx* ctx, uint64_t index, uint32_t precision,
                                    char** json_out);

/* ---- digit streams ---- */
typedef struct cantor_stream cantor_stream;
cantor_status cantor_stream_oracle(const char* name, cantor_stream** out); /* "liouville" */
cantor_status cantor_stream_rational(cantor_ctx* ctx, const char* window_value,
                                     cantor_stream** out);
cantor_status cantor_stream_prefix(const char* digits, cantor_stream** out);
cantor_status cantor_stream_algebraic(cantor_ctx* ctx, uint64_t index, cantor_stream** out);
cantor_status cantor_stream_digit(cantor_stream* s, uint64_t position, int32_t* bit);
cantor_status cantor_stream_digits(cantor_stream* s, uint64_t count, char** digits_out);
cantor_status cantor_stream_descriptor(cantor_stream* s, char** json_out);
void cantor_stream_free(cantor_stream* s);

/* proved iff the prefix cells separate at some p <= budget; position 0 = unresolved */
cantor_status cantor_reals_differ(cantor_stream* a, cantor_stream* b, uint64_t budget,
                                  uint64_t* position);

/* ---- sigma towers ---- */
typedef struct cantor_sigma cantor_sigma;
cantor_status cantor_sigma_build(cantor_ctx* ctx, uint32_t depth, cantor_sigma** out);
cantor_status cantor_sigma_element(cantor_sigma* s, uint64_t index, cantor_stream** out);
cantor_status cantor_sigma_record_json(cantor_sigma* s, uint64_t index, uint32_t precision,
                                       char** json_out);
cantor_status cantor_sigma_diagonalize(cantor_sigma* s, uint64_t offset, cantor_stream** out);
/* closed-form position of layer element j inside Sigma_at_level */
cantor_status cantor_index_of(uint32_t layer, uint64_t element, uint32_t at_level, uint64_t* out);
void cantor_sigma_free(cantor_sigma* s);

/* ---- certificates ---- */
cantor_status cantor_certify_diagonal(cantor_sigma* s, uint64_t offset, uint64_t count,
                                      uint64_t budget, char** json_out);
cantor_status cantor_certify_nonalgebraic(cantor_stream* s, uint32_t height, uint32_t degree,
                                          uint32_t precision, char** json_out);
cantor_status cantor_scan_collisions(cantor_sigma* s, uint64_t count, uint64_t budget,
                                     char** json_out);
/* re-validation from witness data alone; *valid is 1/0, reason optional */
cantor_status cantor_certificate_check(const char* json, int32_t* valid, char** reason_out);

/* ---- segment filling and hunts ---- */
typedef struct cantor_placement cantor_placement;
cantor_status cantor_placement_new(cantor_ctx* ctx, const char* mode, const char* policy,
                                   cantor_placement** out);
cantor_status cantor_placement_run(cantor_placement* p, uint32_t steps);
cantor_status cantor_placement_segments_json(cantor_placement* p, uint32_t precision,
                                             char** json_out);
void cantor_placement_free(cantor_placement* p);

/*
 * target_spec: "liouville", "@<path>" (file of 0/1 digits, unit coordinates),
 * or a rational literal in window coordinates. Returns the hunt report and the
 * nested-chain certificate as one JSON object {"report":..., "certificate":...}.
 */
cantor_status cantor_hunt_json(cantor_ctx* ctx, const char* mode, const char* policy,
                               const char* target_spec, uint32_t steps, uint64_t budget,
                               uint32_t precision, char** json_out);

/* ---- checkpoints ---- */
cantor_status cantor_checkpoint_load(cantor_ctx* ctx, const char* path);
cantor_status cantor_checkpoint_save(cantor_ctx* ctx, const char* path, uint32_t depth);

/* computed base-level digits so far (performance instrumentation) */
uint64_t cantor_base_digit_extractions(void);

#ifdef __cplusplus
}
#endif

#endif /* CANTOR_H */
