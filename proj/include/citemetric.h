#ifndef CITEMETRIC_H
#define CITEMETRIC_H

/* C interface to the citemetric library.
 *
 * Conventions:
 *   - Functions that can fail return cm_status; outputs go through
 *     trailing out-pointers that are written only on CM_OK.
 *   - cm_last_error_message() returns a thread-local description of the
 *     most recent failure on the calling thread.
 *   - Objects returned through handle out-pointers are owned by the caller
 *     and released with the matching *_free function. Strings returned as
 *     char** are released with cm_string_free. const char* returns are
 *     borrowed pointers, valid while the owning handle lives.
 *   - Handles are immutable after creation (except cm_synth_config), so
 *     one handle may be read from several threads at once.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CITEMETRIC_BUILD)
#define CITEMETRIC_API __declspec(dllexport)
#else
#define CITEMETRIC_API __declspec(dllimport)
#endif
#else
#define CITEMETRIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
    CM_OK = 0,
    CM_ERR_IO = 1,
    CM_ERR_MALFORMED_DOCUMENT = 2,
    CM_ERR_DUPLICATE_PAPER_ID = 3,
    CM_ERR_DANGLING_CITATION = 4,
    CM_ERR_DUPLICATE_EDGE = 5,
    CM_ERR_INVALID_CATEGORY = 6,
    CM_ERR_NEGATIVE_WEIGHT = 7,
    CM_ERR_UNKNOWN_EDGE = 8,
    CM_ERR_CONFLICTING_ANNOTATION = 9,
    CM_ERR_UNKNOWN_PAPER = 10,
    CM_ERR_STRATEGY_UNAVAILABLE = 11,
    CM_ERR_INVALID_COUNTS = 12,
    CM_ERR_EMPTY_FEATURE_LIST = 13,
    CM_ERR_EMPTY_LEVELS = 14,
    CM_ERR_NONPOSITIVE_DESIGN_COUNT = 15,
    CM_ERR_EMPTY_HISTOGRAM = 16,
    CM_ERR_UNSUPPORTED_FORMAT = 17,
    CM_ERR_INVALID_CONFIG = 18,
    CM_ERR_INVALID_ARGUMENT = 19,
    CM_ERR_INTERNAL = 100
} cm_status;

/* Library version, e.g. "0.1.0". Static storage, never freed. */
CITEMETRIC_API const char* cm_version(void);

/* Stable lowercase name for a status code ("io", "unknown-paper", ...). */
CITEMETRIC_API const char* cm_status_name(cm_status status);

/* Message of the last failure on this thread; empty string when none. The
 * pointer stays valid until the next failing call on the same thread. */
CITEMETRIC_API const char* cm_last_error_message(void);

/* Frees a string returned through a char** out-parameter. NULL is a no-op. */
CITEMETRIC_API void cm_string_free(char* s);

/* 64-bit FNV-1a digest of a byte range, as used in report provenance. */
CITEMETRIC_API uint64_t cm_digest_fnv1a64(const void* data, size_t len);

/* --------------------------------------------------------------- corpus */

typedef struct cm_corpus cm_corpus;

CITEMETRIC_API cm_status cm_corpus_parse(const char* json_text, const char* source_name,
                                         cm_corpus** out);
CITEMETRIC_API cm_status cm_corpus_load(const char* path, cm_corpus** out);
CITEMETRIC_API void cm_corpus_free(cm_corpus* corpus);

/* Returns a new corpus with the CSV annotations applied; the input corpus
 * is not modified. */
CITEMETRIC_API cm_status cm_corpus_annotate(const cm_corpus* corpus, const char* csv_text,
                                            const char* source_name, cm_corpus** out);
CITEMETRIC_API cm_status cm_corpus_annotate_file(const cm_corpus* corpus, const char* path,
                                                 cm_corpus** out);

/* Canonical JSON serialization; parsing it back reproduces the corpus. */
CITEMETRIC_API cm_status cm_corpus_serialize(const cm_corpus* corpus, char** out_text);

CITEMETRIC_API size_t cm_corpus_paper_count(const cm_corpus* corpus);
CITEMETRIC_API size_t cm_corpus_edge_count(const cm_corpus* corpus);
CITEMETRIC_API size_t cm_corpus_annotated_edge_count(const cm_corpus* corpus);

/* Borrowed id of the index-th paper, in input order; NULL out of range. */
CITEMETRIC_API const char* cm_corpus_paper_id(const cm_corpus* corpus, size_t index);

/* ----------------------------------------------------------- validation */

typedef struct cm_report cm_report;

/* Lenient document validation: collects every finding instead of stopping
 * at the first. Fails only when the text is not parseable at all. */
CITEMETRIC_API cm_status cm_validate_document(const char* json_text, const char* source_name,
                                              cm_report** out);
CITEMETRIC_API cm_status cm_validate_file(const char* path, cm_report** out);
CITEMETRIC_API cm_status cm_corpus_validate(const cm_corpus* corpus, cm_report** out);

CITEMETRIC_API int cm_report_ok(const cm_report* report); /* 1 when no errors */
CITEMETRIC_API size_t cm_report_error_count(const cm_report* report);
CITEMETRIC_API size_t cm_report_warning_count(const cm_report* report);
/* Borrowed formatted line "location: [code] message"; NULL out of range. */
CITEMETRIC_API const char* cm_report_error_line(const cm_report* report, size_t index);
CITEMETRIC_API const char* cm_report_warning_line(const cm_report* report, size_t index);
CITEMETRIC_API void cm_report_free(cm_report* report);

/* ------------------------------------------------------------- grouping */

typedef enum cm_strategy {
    CM_STRATEGY_AUTO = 0, /* explicit labels when any exist, else shared authors */
    CM_STRATEGY_EXPLICIT_LABELS = 1,
    CM_STRATEGY_SHARED_AUTHOR_COMPONENTS = 2,
    CM_STRATEGY_LAST_AUTHOR = 3
} cm_strategy;

typedef struct cm_assignment cm_assignment;

CITEMETRIC_API cm_status cm_resolve_groups(const cm_corpus* corpus, cm_strategy strategy,
                                           cm_assignment** out);
CITEMETRIC_API cm_strategy cm_assignment_strategy(const cm_assignment* assignment);
CITEMETRIC_API size_t cm_assignment_group_count(const cm_assignment* assignment);
/* Borrowed group id of a paper. */
CITEMETRIC_API cm_status cm_assignment_group_of(const cm_assignment* assignment,
                                                const char* paper_id, const char** out_group_id);
CITEMETRIC_API void cm_assignment_free(cm_assignment* assignment);

/* ------------------------------------------------------------- clusters */

typedef struct cm_cluster_set cm_cluster_set;

typedef struct cm_cluster_info {
    const char* group_id; /* borrowed from the cluster set */
    int size;
    int auto_citation;         /* 1 when the group is the cited paper's own */
    int category_counts[7];    /* index 0 = category a .. index 6 = g */
    double weight_sums[7];
} cm_cluster_info;

/* Builds the per-group citation clusters of cited_id, auto-citation flags
 * already applied. */
CITEMETRIC_API cm_status cm_build_clusters(const cm_corpus* corpus,
                                           const cm_assignment* assignment,
                                           const char* cited_id, cm_cluster_set** out);
CITEMETRIC_API size_t cm_cluster_count(const cm_cluster_set* clusters);
CITEMETRIC_API cm_status cm_cluster_info_at(const cm_cluster_set* clusters, size_t index,
                                            cm_cluster_info* out);
CITEMETRIC_API int cm_cluster_max_size(const cm_cluster_set* clusters);
/* Largest per-cluster count of the given category (letter 'a'..'g'). */
CITEMETRIC_API cm_status cm_cluster_max_count(const cm_cluster_set* clusters, char category,
                                              int* out);
CITEMETRIC_API void cm_cluster_set_free(cm_cluster_set* clusters);

/* ----------------------------------------------------------- creativity */

typedef enum cm_novelty_form {
    CM_NOVELTY_RECIPROCAL = 0,
    CM_NOVELTY_NORMALIZED_SUM = 1
} cm_novelty_form;

typedef struct cm_creativity_profile {
    int novelty_defined; /* 0: no alternative-solution citations, value unset */
    double novelty_value;
    int novelty_contributing_clusters;
    int novelty_max_cluster;
    double usefulness_value;
    double usefulness_terms[7]; /* per category; only c,d,e,g can be non-zero */
    int cluster_count;
    int auto_citation_cluster_count;
} cm_creativity_profile;

CITEMETRIC_API cm_status cm_profile(const cm_corpus* corpus, const cm_assignment* assignment,
                                    const char* cited_id, cm_novelty_form form,
                                    cm_creativity_profile* out);

/* ----------------------------------------------------------- histograms */

typedef struct cm_histogram cm_histogram;

typedef struct cm_tail_stats {
    double singleton_fraction;
    int max_size;
    int has_loglog_slope; /* 0 when fewer than 3 distinct sizes */
    double loglog_slope;
} cm_tail_stats;

CITEMETRIC_API cm_status cm_histogram_build(const cm_cluster_set* clusters, cm_histogram** out);
CITEMETRIC_API size_t cm_histogram_bin_count(const cm_histogram* histogram);
/* Bins are indexed in ascending size order. */
CITEMETRIC_API cm_status cm_histogram_bin_at(const cm_histogram* histogram, size_t index,
                                             int* out_size, int* out_count);
CITEMETRIC_API long long cm_histogram_total_groups(const cm_histogram* histogram);
CITEMETRIC_API long long cm_histogram_total_citations(const cm_histogram* histogram);
CITEMETRIC_API cm_status cm_tail_statistics(const cm_histogram* histogram, cm_tail_stats* out);
/* Fraction of groups whose cluster size is >= size (size in 1..max_size). */
CITEMETRIC_API cm_status cm_tail_ccdf_fraction(const cm_histogram* histogram, int size,
                                               double* out);
/* format is "table" or "svg". */
CITEMETRIC_API cm_status cm_emit_plot(const cm_histogram* histogram, const char* format,
                                      char** out_text);
CITEMETRIC_API void cm_histogram_free(cm_histogram* histogram);

/* ------------------------------------------------------- design metrics */

typedef struct cm_feature_stat {
    long long designs_with_feature;        /* T */
    long long designs_same_implementation; /* C */
    double weight;                         /* f */
} cm_feature_stat;

typedef struct cm_variety_level {
    int level;            /* 1 = most conceptual */
    double variety_index; /* V */
    long long branch_count; /* b */
} cm_variety_level;

/* (T - C) / T * 10, in [0, 10). */
CITEMETRIC_API cm_status cm_feature_novelty(long long designs_with_feature,
                                            long long designs_same_implementation, double* out);
/* Weighted sum of per-feature novelty indices. */
CITEMETRIC_API cm_status cm_design_novelty(const cm_feature_stat* features, size_t count,
                                           double* out);
/* 10 * attribute_weight * (sum V_k * b_k) / (design_count * V_1). */
CITEMETRIC_API cm_status cm_design_variety(const cm_variety_level* levels, size_t count,
                                           double attribute_weight, long long design_count,
                                           double* out);

/* -------------------------------------------------------------- synthesis */

typedef struct cm_synth_config cm_synth_config;

CITEMETRIC_API cm_status cm_synth_config_parse(const char* json_text, const char* source_name,
                                               cm_synth_config** out);
CITEMETRIC_API cm_status cm_synth_config_load(const char* path, cm_synth_config** out);
CITEMETRIC_API void cm_synth_config_set_seed(cm_synth_config* config, uint64_t seed);
CITEMETRIC_API uint64_t cm_synth_config_seed(const cm_synth_config* config);
/* Borrowed id of the generated target paper. */
CITEMETRIC_API const char* cm_synth_config_target_id(const cm_synth_config* config);
CITEMETRIC_API void cm_synth_config_free(cm_synth_config* config);

/* Deterministic: the same config (same seed) generates a corpus that
 * serializes to identical bytes. */
CITEMETRIC_API cm_status cm_synth_generate(const cm_synth_config* config, cm_corpus** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CITEMETRIC_H */
