/*
 * C interface to vrtta: exact evaluation of historical circle
 * approximations. Numbers cross the boundary as strings ("p/q",
 * decimals, integers); returned strings are freed with vrtta_string_free.
 */

#ifndef VRTTA_H
#define VRTTA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdint.h>
#include <stddef.h>

typedef enum VrttaFormat {
  VRTTA_FORMAT_CSV = 0,
  VRTTA_FORMAT_JSON = 1,
} VrttaFormat;

typedef enum VrttaMethod {
  VRTTA_METHOD_BAUDHAYANA = 0,
  VRTTA_METHOD_MANAVA = 1,
  VRTTA_METHOD_MAITRAYANIYA = 2,
} VrttaMethod;

typedef enum VrttaRootMode {
  VRTTA_ROOT_MODE_FLOOR = 0,
  VRTTA_ROOT_MODE_CEIL = 1,
  VRTTA_ROOT_MODE_NEAREST = 2,
} VrttaRootMode;

typedef enum VrttaSign {
  VRTTA_SIGN_EMPIRICAL = 0,
  VRTTA_SIGN_LITERAL = 1,
} VrttaSign;

/**
 * Result of every fallible call.
 */
typedef enum VrttaStatus {
  VRTTA_STATUS_OK = 0,
  VRTTA_STATUS_NULL_POINTER = 1,
  VRTTA_STATUS_INVALID_UTF8 = 2,
  VRTTA_STATUS_PARSE = 3,
  VRTTA_STATUS_DOMAIN = 4,
  VRTTA_STATUS_OUT_OF_RANGE = 5,
  VRTTA_STATUS_DIVISION_BY_ZERO = 6,
  VRTTA_STATUS_PRECISION = 7,
  VRTTA_STATUS_UNSUPPORTED = 8,
  VRTTA_STATUS_PANIC = 9,
} VrttaStatus;

/**
 * A circle constructed from a square.
 */
typedef struct VrttaConstruction VrttaConstruction;

/**
 * An Rsine table.
 */
typedef struct VrttaSineTable VrttaSineTable;

/**
 * Exact value `(a + b√k)/q`.
 */
typedef struct VrttaSurd VrttaSurd;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string.
 */
const char *vrtta_version(void);

/**
 * Message for the last failure on this thread; empty after a success.
 */
const char *vrtta_last_error(void);

/**
 * Releases a string returned by this library.
 */
void vrtta_string_free(char *s);

/**
 * `(a + b√k)/q` from integer strings; `k` is reduced to its square-free part.
 */
enum VrttaStatus vrtta_surd_new(const char *a,
                                const char *b,
                                const char *k,
                                const char *q,
                                struct VrttaSurd **out);

/**
 * A rational value (`"p/q"`, decimal, or integer) as a surd.
 */
enum VrttaStatus vrtta_surd_from_rational(const char *x, struct VrttaSurd **out);

/**
 * `√x` for a non-negative rational `x`.
 */
enum VrttaStatus vrtta_surd_sqrt(const char *x, struct VrttaSurd **out);

void vrtta_surd_free(struct VrttaSurd *s);

/**
 * Binary operation: 0 add, 1 subtract, 2 multiply, 3 divide.
 */
enum VrttaStatus vrtta_surd_op(const struct VrttaSurd *x,
                               int op,
                               const struct VrttaSurd *y,
                               struct VrttaSurd **out);

/**
 * Exact comparison; writes -1, 0 or 1.
 */
enum VrttaStatus vrtta_surd_cmp(const struct VrttaSurd *x, const struct VrttaSurd *y, int *out);

/**
 * Exact form: with `ascii` non-zero as `(a+b*sqrt(k))/q`, otherwise with `√`.
 */
enum VrttaStatus vrtta_surd_to_string(const struct VrttaSurd *s, int ascii, char **out);

/**
 * Decimal value correctly rounded to `digits` places.
 */
enum VrttaStatus vrtta_surd_eval(const struct VrttaSurd *s, uint32_t digits, char **out);

/**
 * Circle with the area of the square of side `side`.
 */
enum VrttaStatus vrtta_circle_from_square(const char *side,
                                          enum VrttaMethod method,
                                          struct VrttaConstruction **out);

void vrtta_construction_free(struct VrttaConstruction *c);

/**
 * Exact radius, with `√`; nested for the Mānava construction.
 */
enum VrttaStatus vrtta_construction_radius(const struct VrttaConstruction *c, char **out);

/**
 * Radius² as a new surd handle.
 */
enum VrttaStatus vrtta_construction_radius_squared(const struct VrttaConstruction *c,
                                                   struct VrttaSurd **out);

/**
 * The π that would make the circle's area exact, as a new surd handle.
 */
enum VrttaStatus vrtta_construction_implied_pi(const struct VrttaConstruction *c,
                                               struct VrttaSurd **out);

/**
 * Circle area over square area, rounded to `digits` places.
 */
enum VrttaStatus vrtta_construction_area_ratio(const struct VrttaConstruction *c,
                                               uint32_t digits,
                                               char **out);

enum VrttaStatus vrtta_sine_table_new(uint64_t radius,
                                      uint32_t entries,
                                      struct VrttaSineTable **out);

void vrtta_sine_table_free(struct VrttaSineTable *t);

/**
 * Number of entries; 0 for NULL.
 */
size_t vrtta_sine_table_len(const struct VrttaSineTable *t);

/**
 * Rsine of entry `index` (1-based, as in the tables).
 */
enum VrttaStatus vrtta_sine_table_rsine(const struct VrttaSineTable *t,
                                        size_t index,
                                        uint64_t *out);

enum VrttaStatus vrtta_sine_table_render(const struct VrttaSineTable *t,
                                         enum VrttaFormat format,
                                         char **out);

/**
 * The π catalog, sorted by size of error, at `digits` places.
 */
enum VrttaStatus vrtta_pi_catalog(uint32_t digits, enum VrttaFormat format, char **out);

/**
 * Integer square root of a decimal integer string.
 */
enum VrttaStatus vrtta_isqrt(const char *n, enum VrttaRootMode mode, char **out);

/**
 * Jambudvīpa circumference `⌊√(10·d²)⌋` for an integer diameter.
 */
enum VrttaStatus vrtta_jambudvipa(uint64_t diameter, char **out);

/**
 * Bhāskara I's sine at `theta` degrees, as an exact fraction.
 */
enum VrttaStatus vrtta_bhaskara1_sine(const char *theta_deg, char **out);

/**
 * Bhāskara II's arc for chord `c`, diameter `d`, circumference `p`, exact.
 */
enum VrttaStatus vrtta_bhaskara2_arc(const char *c,
                                     const char *d,
                                     const char *p,
                                     struct VrttaSurd **out);

/**
 * End-corrected series estimate of π after `n` terms, to `digits` places,
 * and how many of its decimals agree with π.
 */
enum VrttaStatus vrtta_kerala_pi(uint64_t n,
                                 enum VrttaSign sign,
                                 uint32_t digits,
                                 char **out_value,
                                 uint32_t *out_digits_correct);

/**
 * Integer polygon doubling from the hexagon. `policy` is one letter per
 * square root (`f`, `c`, `n`), or NULL for floor throughout; `direct`
 * non-zero selects the unrationalized recurrence. Writes the perimeter.
 */
enum VrttaStatus vrtta_polygon_doubling(uint64_t diameter,
                                        uint32_t doublings,
                                        const char *policy,
                                        int direct,
                                        char **out);

/**
 * The √2 rule `1 + 1/3 + 1/(3·4) − 1/(3·4·34)` as an exact fraction.
 */
enum VrttaStatus vrtta_sqrt2_sulva(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VRTTA_H */
