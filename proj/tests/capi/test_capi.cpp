// Exercises the shared-library C interface end to end: ownership rules,
// error codes, and value fidelity against the fixtures used elsewhere.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "citemetric.h"

using doctest::Approx;

namespace {

const char* kTwoGroupCorpus = R"({
  "papers": [
    {"id": "T",  "title": "Target", "year": 1999, "authors": [{"name": "Target Author"}], "group_label": "GT"},
    {"id": "B1", "title": "Alt 1",  "year": 2001, "authors": [{"name": "A"}], "group_label": "G1"},
    {"id": "B2", "title": "Alt 2",  "year": 2002, "authors": [{"name": "B"}], "group_label": "G2"},
    {"id": "C1", "title": "Use 1",  "year": 2003, "authors": [{"name": "C"}], "group_label": "G3"},
    {"id": "S1", "title": "Self",   "year": 2004, "authors": [{"name": "D"}], "group_label": "GT"}
  ],
  "citations": [
    {"citing": "B1", "cited": "T", "category": "b", "weight": 1.0},
    {"citing": "B2", "cited": "T", "category": "f", "weight": 1.0},
    {"citing": "C1", "cited": "T", "category": "c", "weight": 1.0},
    {"citing": "S1", "cited": "T", "category": "g", "weight": 1.0}
  ]
})";

struct Corpus {
    cm_corpus* handle = nullptr;
    ~Corpus() { cm_corpus_free(handle); }
};

struct Assignment {
    cm_assignment* handle = nullptr;
    ~Assignment() { cm_assignment_free(handle); }
};

struct Clusters {
    cm_cluster_set* handle = nullptr;
    ~Clusters() { cm_cluster_set_free(handle); }
};

struct Histogram {
    cm_histogram* handle = nullptr;
    ~Histogram() { cm_histogram_free(handle); }
};

} // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status names are stable") {
    CHECK(std::string(cm_version()) == "0.1.0");
    CHECK(std::string(cm_status_name(CM_OK)) == "ok");
    CHECK(std::string(cm_status_name(CM_ERR_IO)) == "io");
    CHECK(std::string(cm_status_name(CM_ERR_MALFORMED_DOCUMENT)) == "malformed-document");
    CHECK(std::string(cm_status_name(CM_ERR_UNKNOWN_PAPER)) == "unknown-paper");
    CHECK(std::string(cm_status_name(CM_ERR_INVALID_CONFIG)) == "invalid-config");
    CHECK(std::string(cm_status_name(CM_ERR_INTERNAL)) == "internal");
}

TEST_CASE("digests match the reference FNV-1a values") {
    CHECK(cm_digest_fnv1a64("", 0) == UINT64_C(0xcbf29ce484222325));
    CHECK(cm_digest_fnv1a64("a", 1) == UINT64_C(0xaf63dc4c8601ec8c));
    CHECK(cm_digest_fnv1a64("hello", 5) == UINT64_C(0xa430d84680aabd0b));
}

TEST_CASE("null arguments are rejected with a message") {
    CHECK(cm_corpus_parse(nullptr, nullptr, nullptr) == CM_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(cm_last_error_message()) > 0);
    cm_corpus* out = nullptr;
    CHECK(cm_corpus_parse(nullptr, "x", &out) == CM_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}

TEST_CASE("corpus parse, accessors, and serialization round-trip") {
    Corpus corpus;
    REQUIRE(cm_corpus_parse(kTwoGroupCorpus, "fixture", &corpus.handle) == CM_OK);
    CHECK(cm_corpus_paper_count(corpus.handle) == 5);
    CHECK(cm_corpus_edge_count(corpus.handle) == 4);
    CHECK(cm_corpus_annotated_edge_count(corpus.handle) == 4);
    CHECK(std::string(cm_corpus_paper_id(corpus.handle, 0)) == "T");
    CHECK(std::string(cm_corpus_paper_id(corpus.handle, 4)) == "S1");
    CHECK(cm_corpus_paper_id(corpus.handle, 5) == nullptr);

    char* text = nullptr;
    REQUIRE(cm_corpus_serialize(corpus.handle, &text) == CM_OK);
    Corpus again;
    REQUIRE(cm_corpus_parse(text, "copy", &again.handle) == CM_OK);
    char* text2 = nullptr;
    REQUIRE(cm_corpus_serialize(again.handle, &text2) == CM_OK);
    CHECK(std::string(text) == text2);
    cm_string_free(text);
    cm_string_free(text2);
}

TEST_CASE("parse failures carry specific codes and messages") {
    cm_corpus* out = nullptr;
    CHECK(cm_corpus_parse("{not json", "broken.json", &out) == CM_ERR_MALFORMED_DOCUMENT);
    CHECK(std::string(cm_last_error_message()).find("broken.json") != std::string::npos);

    const char* dangling = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]}],
        "citations": [{"citing": "P1", "cited": "GHOST"}]})";
    CHECK(cm_corpus_parse(dangling, "x", &out) == CM_ERR_DANGLING_CITATION);
    CHECK(std::string(cm_last_error_message()).find("GHOST") != std::string::npos);

    CHECK(cm_corpus_load("/nonexistent/path.json", &out) == CM_ERR_IO);
}

TEST_CASE("annotations apply through the boundary") {
    const char* bare = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]},
        {"id": "P2", "title": "t", "year": 2001, "authors": [{"name": "B"}]}],
        "citations": [{"citing": "P2", "cited": "P1"}]})";
    Corpus corpus;
    REQUIRE(cm_corpus_parse(bare, "x", &corpus.handle) == CM_OK);
    CHECK(cm_corpus_annotated_edge_count(corpus.handle) == 0);

    Corpus annotated;
    REQUIRE(cm_corpus_annotate(corpus.handle, "citing_id,cited_id,category,weight\nP2,P1,b,2.5\n",
                               "ann", &annotated.handle) == CM_OK);
    CHECK(cm_corpus_annotated_edge_count(annotated.handle) == 1);
    CHECK(cm_corpus_annotated_edge_count(corpus.handle) == 0); // source untouched

    cm_corpus* out = nullptr;
    CHECK(cm_corpus_annotate(annotated.handle,
                             "citing_id,cited_id,category,weight\nP2,P1,c,2.5\n", "ann",
                             &out) == CM_ERR_CONFLICTING_ANNOTATION);
    CHECK(cm_corpus_annotate(corpus.handle, "citing_id,cited_id,category,weight\nP9,P1,b,\n",
                             "ann", &out) == CM_ERR_UNKNOWN_EDGE);
}

TEST_CASE("validation reports surface findings as lines") {
    const char* bad = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]},
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "B"}]}],
        "citations": [{"citing": "P1", "cited": "NOPE"}]})";
    cm_report* report = nullptr;
    REQUIRE(cm_validate_document(bad, "bad.json", &report) == CM_OK);
    CHECK(cm_report_ok(report) == 0);
    REQUIRE(cm_report_error_count(report) == 2);
    CHECK(std::string(cm_report_error_line(report, 0)).find("papers[1]") != std::string::npos);
    CHECK(std::string(cm_report_error_line(report, 1)).find("NOPE") != std::string::npos);
    CHECK(cm_report_error_line(report, 2) == nullptr);
    cm_report_free(report);

    Corpus corpus;
    REQUIRE(cm_corpus_parse(kTwoGroupCorpus, "x", &corpus.handle) == CM_OK);
    cm_report* clean = nullptr;
    REQUIRE(cm_corpus_validate(corpus.handle, &clean) == CM_OK);
    CHECK(cm_report_ok(clean) == 1);
    CHECK(cm_report_error_count(clean) == 0);
    cm_report_free(clean);
}

TEST_CASE("grouping, clusters, and profiles match the fixture") {
    Corpus corpus;
    REQUIRE(cm_corpus_parse(kTwoGroupCorpus, "x", &corpus.handle) == CM_OK);

    Assignment assignment;
    REQUIRE(cm_resolve_groups(corpus.handle, CM_STRATEGY_AUTO, &assignment.handle) == CM_OK);
    CHECK(cm_assignment_strategy(assignment.handle) == CM_STRATEGY_EXPLICIT_LABELS);
    CHECK(cm_assignment_group_count(assignment.handle) == 4);

    const char* group = nullptr;
    REQUIRE(cm_assignment_group_of(assignment.handle, "T", &group) == CM_OK);
    CHECK(std::string(group) == "S1"); // GT's members are {S1, T}; smallest id wins

    Clusters clusters;
    REQUIRE(cm_build_clusters(corpus.handle, assignment.handle, "T", &clusters.handle) == CM_OK);
    CHECK(cm_cluster_count(clusters.handle) == 4);
    CHECK(cm_cluster_max_size(clusters.handle) == 1);
    int max_b = 0;
    REQUIRE(cm_cluster_max_count(clusters.handle, 'b', &max_b) == CM_OK);
    CHECK(max_b == 1);
    CHECK(cm_cluster_max_count(clusters.handle, 'z', &max_b) == CM_ERR_INVALID_CATEGORY);

    int auto_flags = 0;
    for (size_t i = 0; i < cm_cluster_count(clusters.handle); ++i) {
        cm_cluster_info info{};
        REQUIRE(cm_cluster_info_at(clusters.handle, i, &info) == CM_OK);
        CHECK(info.size == 1);
        auto_flags += info.auto_citation;
    }
    CHECK(auto_flags == 1);

    cm_creativity_profile profile{};
    REQUIRE(cm_profile(corpus.handle, assignment.handle, "T", CM_NOVELTY_RECIPROCAL, &profile) ==
            CM_OK);
    CHECK(profile.cluster_count == 4);
    CHECK(profile.auto_citation_cluster_count == 1);
    CHECK(profile.novelty_defined == 1);
    CHECK(profile.novelty_value == Approx(0.5).epsilon(1e-12));
    CHECK(profile.usefulness_value == Approx(2.0).epsilon(1e-12));
    CHECK(profile.usefulness_terms['c' - 'a'] == Approx(1.0).epsilon(1e-12));
    CHECK(profile.usefulness_terms['g' - 'a'] == Approx(1.0).epsilon(1e-12));

    CHECK(cm_profile(corpus.handle, assignment.handle, "GHOST", CM_NOVELTY_RECIPROCAL,
                     &profile) == CM_ERR_UNKNOWN_PAPER);
}

TEST_CASE("histograms and plots flow through the boundary") {
    Corpus corpus;
    REQUIRE(cm_corpus_parse(kTwoGroupCorpus, "x", &corpus.handle) == CM_OK);
    Assignment assignment;
    REQUIRE(cm_resolve_groups(corpus.handle, CM_STRATEGY_EXPLICIT_LABELS, &assignment.handle) ==
            CM_OK);
    Clusters clusters;
    REQUIRE(cm_build_clusters(corpus.handle, assignment.handle, "T", &clusters.handle) == CM_OK);

    Histogram histogram;
    REQUIRE(cm_histogram_build(clusters.handle, &histogram.handle) == CM_OK);
    CHECK(cm_histogram_bin_count(histogram.handle) == 1);
    int size = 0, count = 0;
    REQUIRE(cm_histogram_bin_at(histogram.handle, 0, &size, &count) == CM_OK);
    CHECK(size == 1);
    CHECK(count == 4);
    CHECK(cm_histogram_total_groups(histogram.handle) == 4);
    CHECK(cm_histogram_total_citations(histogram.handle) == 4);

    cm_tail_stats stats{};
    REQUIRE(cm_tail_statistics(histogram.handle, &stats) == CM_OK);
    CHECK(stats.singleton_fraction == Approx(1.0).epsilon(1e-12));
    CHECK(stats.max_size == 1);
    CHECK(stats.has_loglog_slope == 0);

    double fraction = 0.0;
    REQUIRE(cm_tail_ccdf_fraction(histogram.handle, 1, &fraction) == CM_OK);
    CHECK(fraction == Approx(1.0).epsilon(1e-12));
    CHECK(cm_tail_ccdf_fraction(histogram.handle, 2, &fraction) == CM_ERR_INVALID_ARGUMENT);

    char* table = nullptr;
    REQUIRE(cm_emit_plot(histogram.handle, "table", &table) == CM_OK);
    CHECK(std::string(table) == "size\tcount\n1\t4\n");
    cm_string_free(table);

    char* svg = nullptr;
    REQUIRE(cm_emit_plot(histogram.handle, "svg", &svg) == CM_OK);
    CHECK(std::string(svg).find("<svg") != std::string::npos);
    cm_string_free(svg);

    char* nope = nullptr;
    CHECK(cm_emit_plot(histogram.handle, "png", &nope) == CM_ERR_UNSUPPORTED_FORMAT);

    // Empty histogram: tail statistics refuse, the table still emits.
    const char* lonely = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]}],
        "citations": []})";
    Corpus one;
    REQUIRE(cm_corpus_parse(lonely, "x", &one.handle) == CM_OK);
    Assignment a1;
    REQUIRE(cm_resolve_groups(one.handle, CM_STRATEGY_AUTO, &a1.handle) == CM_OK);
    Clusters c1;
    REQUIRE(cm_build_clusters(one.handle, a1.handle, "P1", &c1.handle) == CM_OK);
    Histogram h1;
    REQUIRE(cm_histogram_build(c1.handle, &h1.handle) == CM_OK);
    CHECK(cm_tail_statistics(h1.handle, &stats) == CM_ERR_EMPTY_HISTOGRAM);
    char* empty_table = nullptr;
    REQUIRE(cm_emit_plot(h1.handle, "table", &empty_table) == CM_OK);
    CHECK(std::string(empty_table) == "size\tcount\n");
    cm_string_free(empty_table);
}

TEST_CASE("design metric kernels compute the frozen examples") {
    double value = 0.0;
    REQUIRE(cm_feature_novelty(10, 3, &value) == CM_OK);
    CHECK(value == Approx(7.0).epsilon(1e-12));
    CHECK(cm_feature_novelty(3, 4, &value) == CM_ERR_INVALID_COUNTS);
    CHECK(cm_feature_novelty(5, 0, &value) == CM_ERR_INVALID_COUNTS);

    cm_feature_stat features[2] = {{10, 3, 0.6}, {4, 4, 0.4}};
    REQUIRE(cm_design_novelty(features, 2, &value) == CM_OK);
    CHECK(value == Approx(4.2).epsilon(1e-12));
    CHECK(cm_design_novelty(nullptr, 0, &value) == CM_ERR_EMPTY_FEATURE_LIST);

    cm_variety_level levels[2] = {{1, 10.0, 1}, {2, 5.0, 4}};
    REQUIRE(cm_design_variety(levels, 2, 1.0, 4, &value) == CM_OK);
    CHECK(value == Approx(7.5).epsilon(1e-12));
    cm_variety_level single[1] = {{1, 10.0, 4}};
    REQUIRE(cm_design_variety(single, 1, 1.0, 4, &value) == CM_OK);
    CHECK(value == Approx(10.0).epsilon(1e-12));
    CHECK(cm_design_variety(single, 1, 1.0, 0, &value) == CM_ERR_NONPOSITIVE_DESIGN_COUNT);
    CHECK(cm_design_variety(nullptr, 0, 1.0, 4, &value) == CM_ERR_EMPTY_LEVELS);
}

TEST_CASE("synthesis is deterministic through the boundary") {
    const char* config_text = R"({"seed": 5, "cluster_sizes": {"1": 3, "2": 2}})";
    cm_synth_config* config = nullptr;
    REQUIRE(cm_synth_config_parse(config_text, "cfg", &config) == CM_OK);
    CHECK(cm_synth_config_seed(config) == 5);
    CHECK(std::string(cm_synth_config_target_id(config)) == "TARGET");

    Corpus first;
    REQUIRE(cm_synth_generate(config, &first.handle) == CM_OK);
    CHECK(cm_corpus_paper_count(first.handle) == 8);
    CHECK(cm_corpus_edge_count(first.handle) == 7);

    Corpus second;
    REQUIRE(cm_synth_generate(config, &second.handle) == CM_OK);
    char* bytes1 = nullptr;
    char* bytes2 = nullptr;
    REQUIRE(cm_corpus_serialize(first.handle, &bytes1) == CM_OK);
    REQUIRE(cm_corpus_serialize(second.handle, &bytes2) == CM_OK);
    CHECK(std::string(bytes1) == bytes2);

    cm_synth_config_set_seed(config, 6);
    CHECK(cm_synth_config_seed(config) == 6);
    Corpus reseeded;
    REQUIRE(cm_synth_generate(config, &reseeded.handle) == CM_OK);
    char* bytes3 = nullptr;
    REQUIRE(cm_corpus_serialize(reseeded.handle, &bytes3) == CM_OK);
    CHECK(std::string(bytes3) != bytes1);
    cm_string_free(bytes1);
    cm_string_free(bytes2);
    cm_string_free(bytes3);
    cm_synth_config_free(config);

    cm_synth_config* bad = nullptr;
    CHECK(cm_synth_config_parse(R"({"cluster_sizes": {"1": -1}})", "cfg", &bad) ==
          CM_ERR_INVALID_CONFIG);
    CHECK(cm_synth_config_parse("{oops", "cfg", &bad) == CM_ERR_MALFORMED_DOCUMENT);
    CHECK(cm_synth_config_load("/nonexistent/config.json", &bad) == CM_ERR_IO);
}

} // TEST_SUITE
