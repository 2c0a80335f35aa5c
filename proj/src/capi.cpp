#include "citemetric.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "citemetric/corpus.hpp"
#include "citemetric/creativity.hpp"
#include "citemetric/design_metrics.hpp"
#include "citemetric/digest.hpp"
#include "citemetric/distribution.hpp"
#include "citemetric/error.hpp"
#include "citemetric/grouping.hpp"
#include "citemetric/synth.hpp"
#include "citemetric/version.hpp"

using namespace citemetric;

namespace {

thread_local std::string g_last_error;

cm_status map_code(errc code) noexcept {
    return static_cast<cm_status>(static_cast<int>(code) + 1);
}

cm_status set_error(cm_status status, std::string message) noexcept {
    try {
        g_last_error = std::move(message);
    } catch (...) {
        /* keep the previous message on allocation failure */
    }
    return status;
}

cm_status bad_argument(const char* what) noexcept {
    return set_error(CM_ERR_INVALID_ARGUMENT, std::string("null or invalid argument: ") + what);
}

// Runs fn inside the exception boundary; fn returns cm_status.
template <typename Fn>
cm_status guarded(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CM_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CM_ERR_INTERNAL, "unknown failure");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io, "read failure: " + path);
    return std::move(buf).str();
}

} // namespace

struct cm_corpus {
    Corpus value;
};

struct cm_report {
    ValidationReport value;
    std::vector<std::string> error_lines;
    std::vector<std::string> warning_lines;

    explicit cm_report(ValidationReport r) : value(std::move(r)) {
        error_lines.reserve(value.errors.size());
        for (const Finding& f : value.errors) error_lines.push_back(f.to_string());
        warning_lines.reserve(value.warnings.size());
        for (const Finding& f : value.warnings) warning_lines.push_back(f.to_string());
    }
};

struct cm_assignment {
    GroupAssignment value;
};

struct cm_cluster_set {
    ClusterSet value;
};

struct cm_histogram {
    ClusterHistogram value;
    std::vector<std::pair<int, int>> flat; // bins in ascending size order

    explicit cm_histogram(ClusterHistogram h) : value(std::move(h)) {
        flat.assign(value.bins.begin(), value.bins.end());
    }
};

struct cm_synth_config {
    SynthConfig value;
};

extern "C" {

const char* cm_version(void) { return version_string; }

const char* cm_status_name(cm_status status) {
    if (status == CM_OK) return "ok";
    if (status == CM_ERR_INTERNAL) return "internal";
    int code = static_cast<int>(status) - 1;
    if (code < 0 || code > static_cast<int>(errc::invalid_argument)) return "unknown";
    return errc_name(static_cast<errc>(code));
}

const char* cm_last_error_message(void) { return g_last_error.c_str(); }

void cm_string_free(char* s) { ::operator delete(s); }

uint64_t cm_digest_fnv1a64(const void* data, size_t len) {
    if (data == nullptr && len > 0) return 0;
    return fnv1a64(data, len);
}

/* --------------------------------------------------------------- corpus */

cm_status cm_corpus_parse(const char* json_text, const char* source_name, cm_corpus** out) {
    if (!json_text || !out) return bad_argument("cm_corpus_parse");
    return guarded([&] {
        auto handle = std::make_unique<cm_corpus>();
        handle->value = parse_corpus(json_text, source_name ? source_name : "<buffer>");
        *out = handle.release();
        return CM_OK;
    });
}

cm_status cm_corpus_load(const char* path, cm_corpus** out) {
    if (!path || !out) return bad_argument("cm_corpus_load");
    return guarded([&] {
        auto handle = std::make_unique<cm_corpus>();
        handle->value = load_corpus_file(path);
        *out = handle.release();
        return CM_OK;
    });
}

void cm_corpus_free(cm_corpus* corpus) { delete corpus; }

cm_status cm_corpus_annotate(const cm_corpus* corpus, const char* csv_text,
                             const char* source_name, cm_corpus** out) {
    if (!corpus || !csv_text || !out) return bad_argument("cm_corpus_annotate");
    return guarded([&] {
        auto handle = std::make_unique<cm_corpus>();
        handle->value =
            load_annotations(corpus->value, csv_text, source_name ? source_name : "<annotations>");
        *out = handle.release();
        return CM_OK;
    });
}

cm_status cm_corpus_annotate_file(const cm_corpus* corpus, const char* path, cm_corpus** out) {
    if (!corpus || !path || !out) return bad_argument("cm_corpus_annotate_file");
    return guarded([&] {
        auto handle = std::make_unique<cm_corpus>();
        handle->value = load_annotations_file(corpus->value, path);
        *out = handle.release();
        return CM_OK;
    });
}

cm_status cm_corpus_serialize(const cm_corpus* corpus, char** out_text) {
    if (!corpus || !out_text) return bad_argument("cm_corpus_serialize");
    return guarded([&] {
        *out_text = copy_string(serialize_corpus(corpus->value));
        return CM_OK;
    });
}

size_t cm_corpus_paper_count(const cm_corpus* corpus) {
    return corpus ? corpus->value.papers().size() : 0;
}

size_t cm_corpus_edge_count(const cm_corpus* corpus) {
    return corpus ? corpus->value.edges().size() : 0;
}

size_t cm_corpus_annotated_edge_count(const cm_corpus* corpus) {
    return corpus ? corpus->value.annotated_edge_count() : 0;
}

const char* cm_corpus_paper_id(const cm_corpus* corpus, size_t index) {
    if (!corpus || index >= corpus->value.papers().size()) return nullptr;
    return corpus->value.papers()[index].id.c_str();
}

/* ----------------------------------------------------------- validation */

cm_status cm_validate_document(const char* json_text, const char* source_name, cm_report** out) {
    if (!json_text || !out) return bad_argument("cm_validate_document");
    return guarded([&] {
        *out = new cm_report(
            validate_document(json_text, source_name ? source_name : "<buffer>"));
        return CM_OK;
    });
}

cm_status cm_validate_file(const char* path, cm_report** out) {
    if (!path || !out) return bad_argument("cm_validate_file");
    return guarded([&] {
        std::string text = read_file_bytes(path);
        *out = new cm_report(validate_document(text, path));
        return CM_OK;
    });
}

cm_status cm_corpus_validate(const cm_corpus* corpus, cm_report** out) {
    if (!corpus || !out) return bad_argument("cm_corpus_validate");
    return guarded([&] {
        *out = new cm_report(validate_corpus(corpus->value));
        return CM_OK;
    });
}

int cm_report_ok(const cm_report* report) { return report && report->value.ok() ? 1 : 0; }

size_t cm_report_error_count(const cm_report* report) {
    return report ? report->error_lines.size() : 0;
}

size_t cm_report_warning_count(const cm_report* report) {
    return report ? report->warning_lines.size() : 0;
}

const char* cm_report_error_line(const cm_report* report, size_t index) {
    if (!report || index >= report->error_lines.size()) return nullptr;
    return report->error_lines[index].c_str();
}

const char* cm_report_warning_line(const cm_report* report, size_t index) {
    if (!report || index >= report->warning_lines.size()) return nullptr;
    return report->warning_lines[index].c_str();
}

void cm_report_free(cm_report* report) { delete report; }

/* ------------------------------------------------------------- grouping */

cm_status cm_resolve_groups(const cm_corpus* corpus, cm_strategy strategy, cm_assignment** out) {
    if (!corpus || !out) return bad_argument("cm_resolve_groups");
    return guarded([&] {
        GroupingStrategy s;
        switch (strategy) {
            case CM_STRATEGY_AUTO: s = default_strategy(corpus->value); break;
            case CM_STRATEGY_EXPLICIT_LABELS: s = GroupingStrategy::explicit_labels; break;
            case CM_STRATEGY_SHARED_AUTHOR_COMPONENTS:
                s = GroupingStrategy::shared_author_components;
                break;
            case CM_STRATEGY_LAST_AUTHOR: s = GroupingStrategy::last_author; break;
            default: return bad_argument("cm_resolve_groups: strategy");
        }
        auto handle = std::make_unique<cm_assignment>();
        handle->value = resolve_groups(corpus->value, s);
        *out = handle.release();
        return CM_OK;
    });
}

cm_strategy cm_assignment_strategy(const cm_assignment* assignment) {
    if (!assignment) return CM_STRATEGY_AUTO;
    switch (assignment->value.strategy) {
        case GroupingStrategy::explicit_labels: return CM_STRATEGY_EXPLICIT_LABELS;
        case GroupingStrategy::shared_author_components:
            return CM_STRATEGY_SHARED_AUTHOR_COMPONENTS;
        case GroupingStrategy::last_author: return CM_STRATEGY_LAST_AUTHOR;
    }
    return CM_STRATEGY_AUTO;
}

size_t cm_assignment_group_count(const cm_assignment* assignment) {
    return assignment ? assignment->value.groups.size() : 0;
}

cm_status cm_assignment_group_of(const cm_assignment* assignment, const char* paper_id,
                                 const char** out_group_id) {
    if (!assignment || !paper_id || !out_group_id) return bad_argument("cm_assignment_group_of");
    return guarded([&] {
        *out_group_id = assignment->value.group_of_paper(paper_id).c_str();
        return CM_OK;
    });
}

void cm_assignment_free(cm_assignment* assignment) { delete assignment; }

/* ------------------------------------------------------------- clusters */

cm_status cm_build_clusters(const cm_corpus* corpus, const cm_assignment* assignment,
                            const char* cited_id, cm_cluster_set** out) {
    if (!corpus || !assignment || !cited_id || !out) return bad_argument("cm_build_clusters");
    return guarded([&] {
        auto handle = std::make_unique<cm_cluster_set>();
        handle->value = flag_auto_citations(
            build_clusters(corpus->value, assignment->value, cited_id), assignment->value);
        *out = handle.release();
        return CM_OK;
    });
}

size_t cm_cluster_count(const cm_cluster_set* clusters) {
    return clusters ? clusters->value.clusters.size() : 0;
}

cm_status cm_cluster_info_at(const cm_cluster_set* clusters, size_t index, cm_cluster_info* out) {
    if (!clusters || !out) return bad_argument("cm_cluster_info_at");
    if (index >= clusters->value.clusters.size())
        return set_error(CM_ERR_INVALID_ARGUMENT, "cluster index out of range");
    const CitationCluster& c = clusters->value.clusters[index];
    out->group_id = c.group_id.c_str();
    out->size = c.size();
    out->auto_citation = c.auto_citation ? 1 : 0;
    for (std::size_t i = 0; i < category_count; ++i) {
        out->category_counts[i] = c.category_counts[i];
        out->weight_sums[i] = c.weight_sums[i];
    }
    return CM_OK;
}

int cm_cluster_max_size(const cm_cluster_set* clusters) {
    return clusters ? clusters->value.max_size_overall : 0;
}

cm_status cm_cluster_max_count(const cm_cluster_set* clusters, char category, int* out) {
    if (!clusters || !out) return bad_argument("cm_cluster_max_count");
    auto cat = parse_category(std::string_view(&category, 1));
    if (!cat) return set_error(CM_ERR_INVALID_CATEGORY, "category letter must be in a..g");
    *out = clusters->value.max_count(*cat);
    return CM_OK;
}

void cm_cluster_set_free(cm_cluster_set* clusters) { delete clusters; }

/* ----------------------------------------------------------- creativity */

cm_status cm_profile(const cm_corpus* corpus, const cm_assignment* assignment,
                     const char* cited_id, cm_novelty_form form, cm_creativity_profile* out) {
    if (!corpus || !assignment || !cited_id || !out) return bad_argument("cm_profile");
    if (form != CM_NOVELTY_RECIPROCAL && form != CM_NOVELTY_NORMALIZED_SUM)
        return bad_argument("cm_profile: form");
    return guarded([&] {
        CreativityProfile p = creativity_profile(
            corpus->value, assignment->value, cited_id,
            form == CM_NOVELTY_RECIPROCAL ? NoveltyForm::reciprocal : NoveltyForm::normalized_sum);
        out->novelty_defined = p.novelty.defined ? 1 : 0;
        out->novelty_value = p.novelty.value;
        out->novelty_contributing_clusters = p.novelty.contributing_clusters;
        out->novelty_max_cluster = p.novelty.max_cluster;
        out->usefulness_value = p.usefulness.value;
        for (std::size_t i = 0; i < category_count; ++i)
            out->usefulness_terms[i] = p.usefulness.terms[i];
        out->cluster_count = p.cluster_count;
        out->auto_citation_cluster_count = p.auto_citation_cluster_count;
        return CM_OK;
    });
}

/* ----------------------------------------------------------- histograms */

cm_status cm_histogram_build(const cm_cluster_set* clusters, cm_histogram** out) {
    if (!clusters || !out) return bad_argument("cm_histogram_build");
    return guarded([&] {
        *out = new cm_histogram(cluster_size_histogram(clusters->value));
        return CM_OK;
    });
}

size_t cm_histogram_bin_count(const cm_histogram* histogram) {
    return histogram ? histogram->flat.size() : 0;
}

cm_status cm_histogram_bin_at(const cm_histogram* histogram, size_t index, int* out_size,
                              int* out_count) {
    if (!histogram || !out_size || !out_count) return bad_argument("cm_histogram_bin_at");
    if (index >= histogram->flat.size())
        return set_error(CM_ERR_INVALID_ARGUMENT, "bin index out of range");
    *out_size = histogram->flat[index].first;
    *out_count = histogram->flat[index].second;
    return CM_OK;
}

long long cm_histogram_total_groups(const cm_histogram* histogram) {
    return histogram ? histogram->value.total_groups : 0;
}

long long cm_histogram_total_citations(const cm_histogram* histogram) {
    return histogram ? histogram->value.total_citations : 0;
}

cm_status cm_tail_statistics(const cm_histogram* histogram, cm_tail_stats* out) {
    if (!histogram || !out) return bad_argument("cm_tail_statistics");
    return guarded([&] {
        TailStats stats = tail_statistics(histogram->value);
        out->singleton_fraction = stats.singleton_fraction;
        out->max_size = stats.max_size;
        out->has_loglog_slope = stats.loglog_slope.has_value() ? 1 : 0;
        out->loglog_slope = stats.loglog_slope.value_or(0.0);
        return CM_OK;
    });
}

cm_status cm_tail_ccdf_fraction(const cm_histogram* histogram, int size, double* out) {
    if (!histogram || !out) return bad_argument("cm_tail_ccdf_fraction");
    return guarded([&] {
        TailStats stats = tail_statistics(histogram->value);
        if (size < 1 || size > stats.max_size)
            return set_error(CM_ERR_INVALID_ARGUMENT, "size outside 1..max_size");
        *out = stats.ccdf[static_cast<std::size_t>(size) - 1].second;
        return CM_OK;
    });
}

cm_status cm_emit_plot(const cm_histogram* histogram, const char* format, char** out_text) {
    if (!histogram || !format || !out_text) return bad_argument("cm_emit_plot");
    return guarded([&] {
        *out_text = copy_string(emit_plot_data(histogram->value, parse_plot_format(format)));
        return CM_OK;
    });
}

void cm_histogram_free(cm_histogram* histogram) { delete histogram; }

/* ------------------------------------------------------- design metrics */

cm_status cm_feature_novelty(long long designs_with_feature, long long designs_same_implementation,
                             double* out) {
    if (!out) return bad_argument("cm_feature_novelty");
    return guarded([&] {
        FeatureStat stat;
        stat.designs_with_feature = designs_with_feature;
        stat.designs_same_implementation = designs_same_implementation;
        *out = feature_novelty_index(stat);
        return CM_OK;
    });
}

cm_status cm_design_novelty(const cm_feature_stat* features, size_t count, double* out) {
    if (!out || (count > 0 && !features)) return bad_argument("cm_design_novelty");
    return guarded([&] {
        std::vector<FeatureStat> stats(count);
        for (size_t i = 0; i < count; ++i) {
            stats[i].designs_with_feature = features[i].designs_with_feature;
            stats[i].designs_same_implementation = features[i].designs_same_implementation;
            stats[i].weight = features[i].weight;
        }
        *out = design_novelty(stats);
        return CM_OK;
    });
}

cm_status cm_design_variety(const cm_variety_level* levels, size_t count, double attribute_weight,
                            long long design_count, double* out) {
    if (!out || (count > 0 && !levels)) return bad_argument("cm_design_variety");
    return guarded([&] {
        std::vector<VarietyLevel> rows(count);
        for (size_t i = 0; i < count; ++i) {
            rows[i].level = levels[i].level;
            rows[i].variety_index = levels[i].variety_index;
            rows[i].branch_count = levels[i].branch_count;
        }
        *out = design_variety(rows, attribute_weight, design_count);
        return CM_OK;
    });
}

/* ------------------------------------------------------------- synthesis */

cm_status cm_synth_config_parse(const char* json_text, const char* source_name,
                                cm_synth_config** out) {
    if (!json_text || !out) return bad_argument("cm_synth_config_parse");
    return guarded([&] {
        auto handle = std::make_unique<cm_synth_config>();
        handle->value = parse_synth_config(json_text, source_name ? source_name : "<config>");
        *out = handle.release();
        return CM_OK;
    });
}

cm_status cm_synth_config_load(const char* path, cm_synth_config** out) {
    if (!path || !out) return bad_argument("cm_synth_config_load");
    return guarded([&] {
        auto handle = std::make_unique<cm_synth_config>();
        handle->value = load_synth_config_file(path);
        *out = handle.release();
        return CM_OK;
    });
}

void cm_synth_config_set_seed(cm_synth_config* config, uint64_t seed) {
    if (config) config->value.seed = seed;
}

uint64_t cm_synth_config_seed(const cm_synth_config* config) {
    return config ? config->value.seed : 0;
}

const char* cm_synth_config_target_id(const cm_synth_config* config) {
    return config ? config->value.target_id.c_str() : nullptr;
}

void cm_synth_config_free(cm_synth_config* config) { delete config; }

cm_status cm_synth_generate(const cm_synth_config* config, cm_corpus** out) {
    if (!config || !out) return bad_argument("cm_synth_generate");
    return guarded([&] {
        auto handle = std::make_unique<cm_corpus>();
        handle->value = generate_corpus(config->value);
        *out = handle.release();
        return CM_OK;
    });
}

} // extern "C"
