/*
 * C interface to the subcount engine.
 *
 * Every fallible call returns an sc_status; on failure the message is
 * available from sc_last_error() on the calling thread until the next call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with sc_string_free.
 */
#ifndef SUBCOUNT_H
#define SUBCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_NULL_ARGUMENT,
  SC_ERR_PARSE,
  SC_ERR_DOMAIN,
  SC_ERR_ORDER_CAP,
  SC_ERR_LATTICE_CAP,
  SC_ERR_ISOMORPHISM_CAP,
  SC_ERR_INVALID_INPUT, /* bad permutation, table or action */
  SC_ERR_FORMAT,
  SC_ERR_IO,
  SC_ERR_INTERNAL
} sc_status;

typedef enum sc_format { SC_FORMAT_TABLE = 0, SC_FORMAT_CSV, SC_FORMAT_JSON } sc_format;

typedef enum sc_cyc_method { SC_CYC_PHI_SUM = 0, SC_CYC_ENUMERATION } sc_cyc_method;

typedef struct sc_group sc_group;
typedef struct sc_reports sc_reports;

typedef struct sc_caps {
  uint64_t order;
  uint64_t lattice;
  uint64_t subgroup_count;
  uint64_t isomorphism;
} sc_caps;

/* -1 marks an unknown tri-state value */
typedef struct sc_invariants {
  uint64_t order;
  uint32_t t;
  uint64_t cyc;
  int has_sub;
  uint64_t sub;
  int is_cyclic;
  int nilpotent;
  int supersolvable;
  int solvable;
  int generalized_quaternion_sylow;
} sc_invariants;

typedef struct sc_verify_config {
  uint64_t max_order;
  int include_squarefree;
  const char* const* specs;
  size_t spec_count;
  const char* const* ingest_paths;
  size_t ingest_count;
  uint64_t psl_max_q;
  uint32_t witness_t_min;
  uint32_t witness_t_max;
  sc_caps caps;
  unsigned jobs; /* 0 = available parallelism */
} sc_verify_config;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);
SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);

SC_API void sc_caps_default(sc_caps* caps);
SC_API void sc_verify_config_default(sc_verify_config* cfg);

/* caps may be NULL for defaults */
SC_API sc_status sc_group_from_spec(const char* spec, const sc_caps* caps, sc_group** out);
SC_API sc_status sc_group_from_file(const char* path, const sc_caps* caps, sc_group** out);
SC_API void sc_group_free(sc_group* g);
SC_API const char* sc_group_name(const sc_group* g);
SC_API uint64_t sc_group_order(const sc_group* g);

SC_API sc_status sc_group_cyc(const sc_group* g, sc_cyc_method method, uint64_t* out);
SC_API sc_status sc_group_sub(const sc_group* g, const sc_caps* caps, uint64_t* out);
SC_API sc_status sc_group_involutions(const sc_group* g, uint64_t* out);
SC_API sc_status sc_group_invariants(const sc_group* g, const sc_caps* caps, sc_invariants* out);
SC_API sc_status sc_group_invariants_text(const sc_group* g, const sc_caps* caps, sc_format format,
                                          char** out);
SC_API sc_status sc_group_lattice_text(const sc_group* g, const sc_caps* caps, sc_format format,
                                       char** out);

/* kind is one of NILP_CYC, NILP_SUB, SUPER_CYC, SUPER_SUB, SOLV_SUB */
SC_API sc_status sc_witness_group(uint32_t t, const char* kind, const sc_caps* caps, sc_group** out,
                                  uint64_t* expected);

/* cfg may be NULL for defaults */
SC_API sc_status sc_verify(const sc_verify_config* cfg, sc_reports** out);
SC_API sc_status sc_conjecture(const sc_verify_config* cfg, sc_reports** out);
SC_API sc_status sc_witness(uint32_t t_min, uint32_t t_max, const sc_caps* caps, sc_reports** out);
SC_API sc_status sc_errata(const sc_caps* caps, sc_reports** out);

SC_API size_t sc_reports_count(const sc_reports* r);
SC_API const char* sc_report_check_id(const sc_reports* r, size_t i);
SC_API const char* sc_report_status(const sc_reports* r, size_t i);
SC_API uint64_t sc_report_groups_checked(const sc_reports* r, size_t i);
SC_API size_t sc_report_violation_count(const sc_reports* r, size_t i);
/* nonzero when a report that decides the exit status has violations */
SC_API int sc_reports_failed(const sc_reports* r);
SC_API sc_status sc_reports_format(const sc_reports* r, sc_format format, char** out);
SC_API void sc_reports_free(sc_reports* r);

#ifdef __cplusplus
}
#endif

#endif /* SUBCOUNT_H */
