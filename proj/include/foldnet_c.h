/* C API for the foldnet library: fold-construction networks for the regular
 * polygon classification family, exact linear-region enumeration, and claim
 * verification. Opaque handles, integer status codes; strings returned
 * through out-parameters are owned by the caller and released with
 * foldnet_string_free.
 */
#ifndef FOLDNET_C_H
#define FOLDNET_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum foldnet_status {
    FOLDNET_OK = 0,
    FOLDNET_ERROR_INVALID_ARGUMENT = 1,
    FOLDNET_ERROR_PARSE = 2,
    FOLDNET_ERROR_BUDGET = 3,
    FOLDNET_ERROR_CONSTRUCTION = 4,
    FOLDNET_ERROR_IO = 5,
    FOLDNET_ERROR_INTERNAL = 6
} foldnet_status;

typedef struct foldnet_network foldnet_network;
typedef struct foldnet_decomposition foldnet_decomposition;

/* Message for the most recent failure on this thread; empty string if none. */
const char* foldnet_last_error(void);

void foldnet_string_free(char* s);

/* Builds the fold construction for problem f_m. staged != 0 keeps the
 * per-stage form (serialized with a "stages" array); evaluation always uses
 * the collapsed network. */
foldnet_status foldnet_build(int m, int staged, foldnet_network** out);
foldnet_status foldnet_network_from_json(const char* json, foldnet_network** out);
foldnet_status foldnet_network_to_json(const foldnet_network* net, char** out_json);
void foldnet_network_free(foldnet_network* net);

/* label receives +1 or -1. Either out-pointer may be NULL. */
foldnet_status foldnet_network_eval(const foldnet_network* net, double x, double y,
                                    double* pre_sign, int* label);
int foldnet_network_hidden_relu_layers(const foldnet_network* net);
int foldnet_network_max_width(const foldnet_network* net);
int foldnet_network_param_count(const foldnet_network* net);

foldnet_status foldnet_enumerate_regions(const foldnet_network* net, double x0, double y0,
                                         double x1, double y1, foldnet_decomposition** out);
long long foldnet_decomposition_count(const foldnet_decomposition* d);
foldnet_status foldnet_decomposition_to_json(const foldnet_decomposition* d, char** out_json);
void foldnet_decomposition_free(foldnet_decomposition* d);

foldnet_status foldnet_region_upper_bound(int w, int d, long long* out);
foldnet_status foldnet_line_arrangement_max_regions(long long n, long long* out);

/* suite: "zero-error" | "lemma2" | "linearity" | "bounds" | "all".
 * override_net (nullable) substitutes the constructed network in the
 * zero-error suite. Writes a JSON array of reports; all_passed gets 0/1. */
foldnet_status foldnet_verify(const char* suite, int m, unsigned long long seed,
                              const foldnet_network* override_net, char** out_report_json,
                              int* all_passed);

/* target: "problem" | "fold" | "regions" | "chords" | "arrangement".
 * n_lines applies to "arrangement" only. */
foldnet_status foldnet_render(const char* target, int m, int n_lines, int width, int height,
                              unsigned long long seed, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* FOLDNET_C_H */
