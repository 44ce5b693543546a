/* C interface to the transversal resource estimator.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return TQRE_OK on success; on failure they return an error code
 * and leave a message retrievable with tqre_last_error() (thread local).
 * Strings returned through char** are owned by the caller and must be
 * released with tqre_string_free().
 */
#ifndef TQRE_H
#define TQRE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqre_status {
    TQRE_OK = 0,
    TQRE_ERR_PARSE = 2,      /* malformed config or CSV input */
    TQRE_ERR_INFEASIBLE = 3, /* constraints cannot be satisfied */
    TQRE_ERR_INVALID = 4,    /* invalid argument */
    TQRE_ERR_IO = 5,         /* file could not be read or written */
    TQRE_ERR_INTERNAL = 6
} tqre_status;

typedef struct tqre_config tqre_config;
typedef struct tqre_report tqre_report;

const char* tqre_last_error(void);
void tqre_string_free(char* s);

/* -- configuration ------------------------------------------------------- */

tqre_status tqre_config_load(const char* path, tqre_config** out);
tqre_status tqre_config_parse(const char* text, tqre_config** out);
void tqre_config_free(tqre_config* cfg);

/* Replaces the sweep specification with the [sweep] section of another file. */
tqre_status tqre_config_apply_sweep_file(tqre_config* cfg, const char* path);

/* When nonzero, the sweep re-descends on grids refined around the incumbent. */
tqre_status tqre_config_set_grid_refine(tqre_config* cfg, int enabled);

/* -- estimation ---------------------------------------------------------- */

tqre_status tqre_estimate(const tqre_config* cfg, tqre_report** out);
void tqre_report_free(tqre_report* report);

double tqre_report_physical_qubits(const tqre_report* report);
double tqre_report_runtime_seconds(const tqre_report* report);
double tqre_report_spacetime_volume(const tqre_report* report);
double tqre_report_ccz_count(const tqre_report* report);
double tqre_report_lookup_additions(const tqre_report* report);
double tqre_report_lookup_seconds(const tqre_report* report);
double tqre_report_addition_seconds(const tqre_report* report);
double tqre_report_total_logical_error(const tqre_report* report);
int tqre_report_constraint_violations(const tqre_report* report);
tqre_status tqre_report_constraint_at(const tqre_report* report, int index, char** out);
tqre_status tqre_report_render_markdown(const tqre_report* report, char** out);
tqre_status tqre_report_phase_csv(const tqre_report* report, char** out);

/* -- optimization -------------------------------------------------------- */

/* Runs the pairwise sweep from the config's [sweep] section. Outputs the
 * trace CSV and the report of the best configuration. Either output pointer
 * may be NULL. */
tqre_status tqre_sweep(const tqre_config* cfg, char** trace_csv, tqre_report** best);

/* axis: "alpha", "coherence_time", "acceleration_scale", "reaction_time" or
 * "qubit_cap". grid: comma-separated values, or NULL for the default grid. */
tqre_status tqre_sensitivity(const tqre_config* cfg, const char* axis, const char* grid,
                             char** curve_csv);

/* -- error-model fitting -------------------------------------------------- */

/* csv_text rows: d,x,p_l,sigma (header line optional). Pass a negative value
 * to leave the corresponding parameter free. */
tqre_status tqre_fit(const char* csv_text, double fixed_c, double fixed_lambda,
                     double fixed_alpha, double* out_c, double* out_lambda,
                     double* out_alpha);

/* -- layout export ------------------------------------------------------- */

tqre_status tqre_emit_layouts(const tqre_config* cfg, const char* dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TQRE_H */
