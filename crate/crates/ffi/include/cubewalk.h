#ifndef CUBEWALK_H
#define CUBEWALK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CW_COIN_PADDED = 0,
  CW_COIN_FULL_REGISTER = 1,
} CwCoin;

typedef enum {
  CW_LOWERING_OPAQUE = 0,
  CW_LOWERING_ANCILLA_LADDER = 1,
} CwLowering;

/**
 * Result of every fallible call.
 */
typedef enum {
  CW_STATUS_OK = 0,
  CW_STATUS_NULL_POINTER = 1,
  CW_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Request exceeds a wire or memory limit.
   */
  CW_STATUS_RESOURCE_LIMIT = 3,
  /**
   * Coin strategy cannot handle this degree.
   */
  CW_STATUS_UNSUPPORTED = 4,
  CW_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  CW_STATUS_INTERNAL = 6,
} CwStatus;

typedef enum {
  /**
   * Diffusion circuit when the degree is a power of two, else prepare-reflect.
   */
  CW_STRATEGY_AUTO = 0,
  CW_STRATEGY_PAPER_DIFFUSION = 1,
  CW_STRATEGY_PREPARE_REFLECT = 2,
} CwStrategy;

/**
 * Cubelike graph handle.
 */
typedef struct CwGraph CwGraph;

/**
 * Gate program handle.
 */
typedef struct CwProgram CwProgram;

/**
 * Walk state handle.
 */
typedef struct CwWalk CwWalk;

typedef struct {
  size_t steps;
  uint64_t target;
  double probability;
  size_t window_lo;
  size_t window_hi;
} CwHittingRecord;

typedef struct {
  size_t x;
  size_t mcx;
  size_t h;
  size_t phase;
  size_t rotations;
  size_t ancillas;
} CwGateCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next `cw_*` call on the same thread.
 */
const char *cw_last_error_message(void);

CwStatus cw_graph_hypercube(uint32_t n, CwGraph **out);

CwStatus cw_graph_augmented(uint32_t n, CwGraph **out);

CwStatus cw_graph_complete(uint32_t n, CwGraph **out);

CwStatus cw_graph_random(uint32_t n, uint64_t extra, uint64_t seed, CwGraph **out);

/**
 * Graph on `n` bits from `len` generator values. With `canonicalize` the
 * generators are sorted, otherwise their order fixes the edge labels.
 */
CwStatus cw_graph_from_generators(uint32_t n,
                                  const uint64_t *values,
                                  size_t len,
                                  bool canonicalize,
                                  CwGraph **out);

void cw_graph_free(CwGraph *graph);

/**
 * Position bits `n`; 0 for a null handle.
 */
uint32_t cw_graph_dimension(const CwGraph *graph);

/**
 * Degree Δ; 0 for a null handle.
 */
size_t cw_graph_degree(const CwGraph *graph);

/**
 * Coin bits `m`; 0 for a null handle.
 */
uint32_t cw_graph_coin_width(const CwGraph *graph);

/**
 * XOR of all generators; 0 for a null handle.
 */
uint64_t cw_graph_target_vertex(const CwGraph *graph);

/**
 * Walk at `start` with the coin in its initial superposition.
 */
CwStatus cw_walk_new(const CwGraph *graph, uint64_t start, CwCoin coin, CwWalk **out);

CwStatus cw_walk_evolve(CwWalk *walk, size_t steps);

/**
 * Writes the `2^n` position probabilities into `buffer`.
 */
CwStatus cw_walk_probabilities(const CwWalk *walk, double *buffer, size_t len);

CwStatus cw_walk_probability_at(const CwWalk *walk, uint64_t vertex_value, double *out);

void cw_walk_free(CwWalk *walk);

CwStatus cw_one_shot_probability(const CwGraph *graph,
                                 CwCoin coin,
                                 size_t steps,
                                 uint64_t start,
                                 uint64_t target,
                                 double *out);

/**
 * Hitting time from `start`. A null `target` selects the XOR of the
 * generators; `window_hi == 0` selects the default window.
 */
CwStatus cw_find_hitting_time(const CwGraph *graph,
                              CwCoin coin,
                              uint64_t start,
                              const uint64_t *target,
                              size_t window_lo,
                              size_t window_hi,
                              CwHittingRecord *out);

/**
 * Coin initialisation plus `steps` walk steps.
 */
CwStatus cw_compile_walk(const CwGraph *graph, size_t steps, CwStrategy strat, CwProgram **out);

/**
 * One coin-then-shift step.
 */
CwStatus cw_compile_step(const CwGraph *graph, CwStrategy strat, CwProgram **out);

CwStatus cw_program_counts(const CwProgram *program, CwGateCounts *out);

/**
 * OpenQASM 2.0 text; release it with [`cw_string_free`].
 */
CwStatus cw_program_qasm(const CwProgram *program, CwLowering lowering, char **out);

void cw_program_free(CwProgram *program);

void cw_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBEWALK_H */
