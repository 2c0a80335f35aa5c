// citemetric command-line front end. Links only the public C API so that the
// shared library surface stays exercised end to end.

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "citemetric.h"

namespace {

// ---------------------------------------------------------------- helpers

struct CorpusDeleter {
    void operator()(cm_corpus* p) const { cm_corpus_free(p); }
};
struct AssignmentDeleter {
    void operator()(cm_assignment* p) const { cm_assignment_free(p); }
};
struct ClusterSetDeleter {
    void operator()(cm_cluster_set* p) const { cm_cluster_set_free(p); }
};
struct HistogramDeleter {
    void operator()(cm_histogram* p) const { cm_histogram_free(p); }
};
struct ReportDeleter {
    void operator()(cm_report* p) const { cm_report_free(p); }
};
struct SynthConfigDeleter {
    void operator()(cm_synth_config* p) const { cm_synth_config_free(p); }
};

using CorpusPtr = std::unique_ptr<cm_corpus, CorpusDeleter>;
using AssignmentPtr = std::unique_ptr<cm_assignment, AssignmentDeleter>;
using ClusterSetPtr = std::unique_ptr<cm_cluster_set, ClusterSetDeleter>;
using HistogramPtr = std::unique_ptr<cm_histogram, HistogramDeleter>;
using ReportPtr = std::unique_ptr<cm_report, ReportDeleter>;
using SynthConfigPtr = std::unique_ptr<cm_synth_config, SynthConfigDeleter>;

// Exit contract: 0 success, 1 I/O or parse trouble, 2 domain errors.
int exit_code_for(cm_status status) {
    if (status == CM_OK) return 0;
    if (status == CM_ERR_IO || status == CM_ERR_MALFORMED_DOCUMENT) return 1;
    return 2;
}

int report_failure(cm_status status) {
    std::fprintf(stderr, "citemetric: %s\n", cm_last_error_message());
    return exit_code_for(status);
}

int report_io_failure(const std::string& message) {
    std::fprintf(stderr, "citemetric: %s\n", message.c_str());
    return 1;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buf).str();
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    return out.good();
}

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string digest_of(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, cm_digest_fnv1a64(bytes.data(), bytes.size()));
    return std::string("fnv1a64:") + buf;
}

std::string utc_now_iso8601() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const char* strategy_label(cm_strategy s) {
    switch (s) {
        case CM_STRATEGY_EXPLICIT_LABELS: return "explicit-labels";
        case CM_STRATEGY_SHARED_AUTHOR_COMPONENTS: return "shared-author-components";
        case CM_STRATEGY_LAST_AUTHOR: return "last-author";
        case CM_STRATEGY_AUTO: break;
    }
    return "auto";
}

// ---------------------------------------------------------------- options

struct GlobalOptions {
    std::string strategy = "auto";
    std::string novelty_form = "reciprocal";
    bool no_header = false;

    cm_strategy strategy_value() const {
        if (strategy == "explicit-labels") return CM_STRATEGY_EXPLICIT_LABELS;
        if (strategy == "shared-author-components") return CM_STRATEGY_SHARED_AUTHOR_COMPONENTS;
        if (strategy == "last-author") return CM_STRATEGY_LAST_AUTHOR;
        return CM_STRATEGY_AUTO;
    }

    cm_novelty_form form_value() const {
        return novelty_form == "normalized-sum" ? CM_NOVELTY_NORMALIZED_SUM
                                                : CM_NOVELTY_RECIPROCAL;
    }
};

void print_header(const GlobalOptions& opts, const std::vector<std::string>& provenance_lines) {
    if (opts.no_header) return;
    std::printf("# citemetric %s\n", cm_version());
    for (const std::string& line : provenance_lines) std::printf("# %s\n", line.c_str());
    std::printf("# generated: %s\n", utc_now_iso8601().c_str());
}

// Loads corpus (+ optional annotations), reporting provenance lines for the
// header. Returns nonzero exit code on failure.
int load_inputs(const std::string& corpus_path, const std::string& annotations_path,
                CorpusPtr& corpus, std::vector<std::string>& provenance) {
    auto corpus_text = read_file(corpus_path);
    if (!corpus_text) return report_io_failure("cannot open file: " + corpus_path);
    provenance.push_back("corpus: " + corpus_path + " " + digest_of(*corpus_text));

    cm_corpus* raw = nullptr;
    cm_status st = cm_corpus_parse(corpus_text->c_str(), corpus_path.c_str(), &raw);
    if (st != CM_OK) return report_failure(st);
    corpus.reset(raw);

    if (!annotations_path.empty()) {
        auto ann_text = read_file(annotations_path);
        if (!ann_text) return report_io_failure("cannot open file: " + annotations_path);
        provenance.push_back("annotations: " + annotations_path + " " + digest_of(*ann_text));
        cm_corpus* annotated = nullptr;
        st = cm_corpus_annotate(corpus.get(), ann_text->c_str(), annotations_path.c_str(),
                                &annotated);
        if (st != CM_OK) return report_failure(st);
        corpus.reset(annotated);
    }
    return 0;
}

// ------------------------------------------------------------ cmd_validate

int cmd_validate(const std::string& corpus_path) {
    cm_report* raw = nullptr;
    cm_status st = cm_validate_file(corpus_path.c_str(), &raw);
    if (st != CM_OK) return report_failure(st);
    ReportPtr report(raw);

    size_t errors = cm_report_error_count(report.get());
    size_t warnings = cm_report_warning_count(report.get());
    for (size_t i = 0; i < errors; ++i)
        std::printf("%s\n", cm_report_error_line(report.get(), i));
    for (size_t i = 0; i < warnings; ++i)
        std::fprintf(stderr, "warning: %s\n", cm_report_warning_line(report.get(), i));
    std::fprintf(stderr, "%s: %zu error(s), %zu warning(s)\n", corpus_path.c_str(), errors,
                 warnings);
    return cm_report_ok(report.get()) ? 0 : 2;
}

// ------------------------------------------------------------- cmd_metrics

void print_profile_block(const std::string& paper_id, const cm_creativity_profile& p,
                         const GlobalOptions& opts) {
    std::printf("paper\t%s\n", paper_id.c_str());
    std::printf("clusters\t%d\n", p.cluster_count);
    std::printf("auto_citation_clusters\t%d\n", p.auto_citation_cluster_count);
    std::printf("novelty_form\t%s\n",
                opts.form_value() == CM_NOVELTY_RECIPROCAL ? "reciprocal" : "normalized-sum");
    if (p.novelty_defined) {
        std::printf("novelty\t%s\n", fixed6(p.novelty_value).c_str());
        std::printf("novelty_clusters\t%d\n", p.novelty_contributing_clusters);
        std::printf("novelty_max_cluster\t%d\n", p.novelty_max_cluster);
    } else {
        std::printf("novelty\tN/A\n");
        std::printf("novelty_clusters\t0\n");
        std::printf("novelty_max_cluster\t0\n");
    }
    std::printf("usefulness\t%s\n", fixed6(p.usefulness_value).c_str());
    for (char cat : {'c', 'd', 'e', 'g'})
        std::printf("term_%c\t%s\n", cat, fixed6(p.usefulness_terms[cat - 'a']).c_str());
    std::printf("\n");
}

int cmd_metrics(const std::string& corpus_path, const std::string& annotations_path,
                const std::string& paper, bool all, const GlobalOptions& opts) {
    CorpusPtr corpus;
    std::vector<std::string> provenance;
    if (int rc = load_inputs(corpus_path, annotations_path, corpus, provenance)) return rc;

    cm_assignment* raw_assignment = nullptr;
    cm_status st = cm_resolve_groups(corpus.get(), opts.strategy_value(), &raw_assignment);
    if (st != CM_OK) return report_failure(st);
    AssignmentPtr assignment(raw_assignment);

    std::vector<std::string> selected;
    if (all) {
        size_t n = cm_corpus_paper_count(corpus.get());
        selected.reserve(n);
        for (size_t i = 0; i < n; ++i) selected.push_back(cm_corpus_paper_id(corpus.get(), i));
        std::sort(selected.begin(), selected.end());
    } else {
        selected.push_back(paper);
    }

    provenance.push_back(std::string("strategy: ") +
                         strategy_label(cm_assignment_strategy(assignment.get())));
    provenance.push_back(std::string("novelty-form: ") +
                         (opts.form_value() == CM_NOVELTY_RECIPROCAL ? "reciprocal"
                                                                     : "normalized-sum"));
    print_header(opts, provenance);

    for (const std::string& id : selected) {
        cm_creativity_profile profile{};
        st = cm_profile(corpus.get(), assignment.get(), id.c_str(), opts.form_value(), &profile);
        if (st != CM_OK) return report_failure(st);
        print_profile_block(id, profile, opts);
    }

    std::fprintf(stderr, "evaluated %zu paper(s) with strategy %s\n", selected.size(),
                 strategy_label(cm_assignment_strategy(assignment.get())));
    return 0;
}

// ------------------------------------------------------------ cmd_clusters

void print_tail_block(std::FILE* to, const std::string& paper, const cm_histogram* histogram,
                      const std::string& plot_path) {
    std::fprintf(to, "paper\t%s\n", paper.c_str());
    std::fprintf(to, "groups\t%lld\n", cm_histogram_total_groups(histogram));
    std::fprintf(to, "citations\t%lld\n", cm_histogram_total_citations(histogram));
    cm_tail_stats stats{};
    if (cm_histogram_bin_count(histogram) > 0 &&
        cm_tail_statistics(histogram, &stats) == CM_OK) {
        std::fprintf(to, "singleton_fraction\t%s\n", fixed6(stats.singleton_fraction).c_str());
        std::fprintf(to, "max_size\t%d\n", stats.max_size);
        if (stats.has_loglog_slope)
            std::fprintf(to, "loglog_slope\t%s\n", fixed6(stats.loglog_slope).c_str());
        else
            std::fprintf(to, "loglog_slope\tN/A\n");
    } else {
        std::fprintf(to, "singleton_fraction\tN/A\n");
        std::fprintf(to, "max_size\t0\n");
        std::fprintf(to, "loglog_slope\tN/A\n");
    }
    if (!plot_path.empty()) std::fprintf(to, "plot\t%s\n", plot_path.c_str());
}

int cmd_clusters(const std::string& corpus_path, const std::string& annotations_path,
                 const std::string& paper, const std::string& plot_format,
                 const std::string& out_path, const GlobalOptions& opts) {
    CorpusPtr corpus;
    std::vector<std::string> provenance;
    if (int rc = load_inputs(corpus_path, annotations_path, corpus, provenance)) return rc;

    cm_assignment* raw_assignment = nullptr;
    cm_status st = cm_resolve_groups(corpus.get(), opts.strategy_value(), &raw_assignment);
    if (st != CM_OK) return report_failure(st);
    AssignmentPtr assignment(raw_assignment);

    cm_cluster_set* raw_clusters = nullptr;
    st = cm_build_clusters(corpus.get(), assignment.get(), paper.c_str(), &raw_clusters);
    if (st != CM_OK) return report_failure(st);
    ClusterSetPtr clusters(raw_clusters);

    cm_histogram* raw_histogram = nullptr;
    st = cm_histogram_build(clusters.get(), &raw_histogram);
    if (st != CM_OK) return report_failure(st);
    HistogramPtr histogram(raw_histogram);

    char* plot_text = nullptr;
    st = cm_emit_plot(histogram.get(), plot_format.c_str(), &plot_text);
    if (st != CM_OK) return report_failure(st);
    std::string plot(plot_text);
    cm_string_free(plot_text);

    if (!out_path.empty()) {
        if (!write_file(out_path, plot))
            return report_io_failure("cannot write file: " + out_path);
        provenance.push_back(std::string("strategy: ") +
                             strategy_label(cm_assignment_strategy(assignment.get())));
        print_header(opts, provenance);
        print_tail_block(stdout, paper, histogram.get(), out_path);
    } else {
        // The artifact itself is the standard output; keep it uncontaminated.
        std::fwrite(plot.data(), 1, plot.size(), stdout);
        print_tail_block(stderr, paper, histogram.get(), "");
    }
    return 0;
}

// ---------------------------------------------------------------- cmd_shah

// Splits one CSV line; no quoting, matching the annotation format.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(current);
    return fields;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_ll(const std::string& text, long long& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size()) return false;
    out = v;
    return true;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end != text.c_str() + text.size()) return false;
    out = v;
    return true;
}

// Feature tables: header `feature,T,C,f`; empty f defaults to 1.
int read_feature_table(const std::string& path, std::vector<cm_feature_stat>& rows) {
    auto text = read_file(path);
    if (!text) return report_io_failure("cannot open file: " + path);
    std::istringstream in(*text);
    std::string line;
    bool saw_header = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trimmed(line);
        if (t.empty()) continue;
        if (!saw_header) {
            std::string squeezed;
            for (char ch : t)
                if (ch != ' ') squeezed += ch;
            if (squeezed != "feature,T,C,f")
                return report_io_failure(path + ":" + std::to_string(line_no) +
                                         ": expected header 'feature,T,C,f'");
            saw_header = true;
            continue;
        }
        auto fields = split_csv(t);
        if (fields.size() != 3 && fields.size() != 4)
            return report_io_failure(path + ":" + std::to_string(line_no) +
                                     ": expected 3 or 4 fields");
        cm_feature_stat row{};
        row.weight = 1.0;
        if (!parse_ll(trimmed(fields[1]), row.designs_with_feature))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad T value");
        if (!parse_ll(trimmed(fields[2]), row.designs_same_implementation))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad C value");
        if (fields.size() == 4 && !trimmed(fields[3]).empty() &&
            !parse_double(trimmed(fields[3]), row.weight))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad f value");
        rows.push_back(row);
    }
    if (!saw_header) return report_io_failure(path + ": empty table");
    return 0;
}

// Variety tables: header `level,V,b`.
int read_variety_table(const std::string& path, std::vector<cm_variety_level>& rows) {
    auto text = read_file(path);
    if (!text) return report_io_failure("cannot open file: " + path);
    std::istringstream in(*text);
    std::string line;
    bool saw_header = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trimmed(line);
        if (t.empty()) continue;
        if (!saw_header) {
            std::string squeezed;
            for (char ch : t)
                if (ch != ' ') squeezed += ch;
            if (squeezed != "level,V,b")
                return report_io_failure(path + ":" + std::to_string(line_no) +
                                         ": expected header 'level,V,b'");
            saw_header = true;
            continue;
        }
        auto fields = split_csv(t);
        if (fields.size() != 3)
            return report_io_failure(path + ":" + std::to_string(line_no) +
                                     ": expected 3 fields");
        cm_variety_level row{};
        long long level = 0;
        if (!parse_ll(trimmed(fields[0]), level))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad level value");
        row.level = static_cast<int>(level);
        if (!parse_double(trimmed(fields[1]), row.variety_index))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad V value");
        if (!parse_ll(trimmed(fields[2]), row.branch_count))
            return report_io_failure(path + ":" + std::to_string(line_no) + ": bad b value");
        rows.push_back(row);
    }
    if (!saw_header) return report_io_failure(path + ": empty table");
    return 0;
}

int cmd_shah_feature(const std::string& table_path) {
    std::vector<cm_feature_stat> rows;
    if (int rc = read_feature_table(table_path, rows)) return rc;
    for (const cm_feature_stat& row : rows) {
        double value = 0.0;
        cm_status st =
            cm_feature_novelty(row.designs_with_feature, row.designs_same_implementation, &value);
        if (st != CM_OK) return report_failure(st);
        std::printf("%s\n", fixed6(value).c_str());
    }
    std::fprintf(stderr, "%zu feature row(s)\n", rows.size());
    return 0;
}

int cmd_shah_novelty(const std::string& table_path) {
    std::vector<cm_feature_stat> rows;
    if (int rc = read_feature_table(table_path, rows)) return rc;
    double value = 0.0;
    cm_status st = cm_design_novelty(rows.data(), rows.size(), &value);
    if (st != CM_OK) return report_failure(st);
    std::printf("%s\n", fixed6(value).c_str());
    return 0;
}

int cmd_shah_variety(const std::string& table_path, long long designs, double attribute_weight) {
    std::vector<cm_variety_level> rows;
    if (int rc = read_variety_table(table_path, rows)) return rc;
    double value = 0.0;
    cm_status st = cm_design_variety(rows.data(), rows.size(), attribute_weight, designs, &value);
    if (st != CM_OK) return report_failure(st);
    std::printf("%s\n", fixed6(value).c_str());
    return 0;
}

// --------------------------------------------------------------- cmd_synth

int cmd_synth(const std::string& config_path, const std::string& out_path,
              const GlobalOptions& opts) {
    cm_synth_config* raw_config = nullptr;
    cm_status st = cm_synth_config_load(config_path.c_str(), &raw_config);
    if (st != CM_OK) return report_failure(st);
    SynthConfigPtr config(raw_config);

    if (const char* env_seed = std::getenv("CITEMETRIC_SEED")) {
        errno = 0;
        char* end = nullptr;
        unsigned long long seed = std::strtoull(env_seed, &end, 10);
        if (errno != 0 || end == env_seed || *end != '\0') {
            std::fprintf(stderr, "citemetric: CITEMETRIC_SEED is not a valid integer: %s\n",
                         env_seed);
            return 2;
        }
        cm_synth_config_set_seed(config.get(), seed);
    }

    cm_corpus* raw_corpus = nullptr;
    st = cm_synth_generate(config.get(), &raw_corpus);
    if (st != CM_OK) return report_failure(st);
    CorpusPtr corpus(raw_corpus);

    char* text = nullptr;
    st = cm_corpus_serialize(corpus.get(), &text);
    if (st != CM_OK) return report_failure(st);
    std::string serialized(text);
    cm_string_free(text);

    if (!write_file(out_path, serialized))
        return report_io_failure("cannot write file: " + out_path);

    std::vector<std::string> provenance;
    provenance.push_back("config: " + config_path);
    provenance.push_back("out: " + out_path);
    print_header(opts, provenance);
    std::printf("%s\n", digest_of(serialized).c_str());
    std::fprintf(stderr, "wrote %s (%zu papers, %zu edges)\n", out_path.c_str(),
                 cm_corpus_paper_count(corpus.get()), cm_corpus_edge_count(corpus.get()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions opts;

    CLI::App app{"citation-cluster creativity metrics"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--strategy", opts.strategy, "research-group resolution strategy")
        ->check(CLI::IsMember(
            {"auto", "explicit-labels", "shared-author-components", "last-author"}))
        ->default_str("auto");
    app.add_option("--novelty-form", opts.novelty_form, "reciprocal or normalized-sum")
        ->check(CLI::IsMember({"reciprocal", "normalized-sum"}))
        ->default_str("reciprocal");
    app.add_flag("--no-header", opts.no_header, "suppress the # header lines");

    std::string corpus_path, annotations_path, paper, out_path;
    std::string plot_format = "table";
    bool all = false;

    CLI::App* validate = app.add_subcommand("validate", "check a corpus file, list findings");
    validate->add_option("corpus", corpus_path, "corpus file")->required();

    CLI::App* metrics =
        app.add_subcommand("metrics", "novelty and usefulness per cited paper");
    metrics->add_option("corpus", corpus_path, "corpus file")->required();
    metrics->add_option("annotations", annotations_path, "annotation CSV applied before scoring");
    auto* paper_opt = metrics->add_option("--paper", paper, "evaluate one paper id");
    auto* all_opt = metrics->add_flag("--all", all, "evaluate every paper");
    paper_opt->excludes(all_opt);

    CLI::App* clusters = app.add_subcommand("clusters", "cluster-size histogram for one paper");
    clusters->add_option("corpus", corpus_path, "corpus file")->required();
    clusters->add_option("annotations", annotations_path, "annotation CSV");
    clusters->add_option("--paper", paper, "cited paper id")->required();
    clusters->add_option("--plot", plot_format, "table or svg")
        ->check(CLI::IsMember({"table", "svg"}));
    clusters->add_option("--out", out_path, "write the plot artifact to this path");

    CLI::App* shah = app.add_subcommand("shah", "design-ideation measures from CSV tables");
    shah->require_subcommand(1);
    std::string table_path;
    long long designs = 0;
    double attribute_weight = 1.0;
    CLI::App* shah_feature = shah->add_subcommand("feature", "per-row feature novelty indices");
    shah_feature->add_option("table", table_path, "CSV: feature,T,C,f")->required();
    CLI::App* shah_novelty = shah->add_subcommand("novelty", "weighted design novelty");
    shah_novelty->add_option("table", table_path, "CSV: feature,T,C,f")->required();
    CLI::App* shah_variety = shah->add_subcommand("variety", "design variety for one attribute");
    shah_variety->add_option("table", table_path, "CSV: level,V,b")->required();
    shah_variety->add_option("--designs", designs, "number of designs in the set")->required();
    shah_variety->add_option("--attribute-weight", attribute_weight, "weight of the attribute");

    CLI::App* synth = app.add_subcommand("synth", "generate a deterministic corpus");
    synth->add_option("config", corpus_path, "generator config JSON")->required();
    synth->add_option("--out", out_path, "corpus output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate->parsed()) return cmd_validate(corpus_path);
        if (metrics->parsed()) {
            if (paper.empty() && !all) {
                std::fprintf(stderr, "citemetric: metrics needs --paper <id> or --all\n");
                return 2;
            }
            return cmd_metrics(corpus_path, annotations_path, paper, all, opts);
        }
        if (clusters->parsed())
            return cmd_clusters(corpus_path, annotations_path, paper, plot_format, out_path, opts);
        if (shah->parsed()) {
            if (shah_feature->parsed()) return cmd_shah_feature(table_path);
            if (shah_novelty->parsed()) return cmd_shah_novelty(table_path);
            return cmd_shah_variety(table_path, designs, attribute_weight);
        }
        if (synth->parsed()) return cmd_synth(corpus_path, out_path, opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "citemetric: %s\n", e.what());
        return 2;
    }
    return 0;
}
