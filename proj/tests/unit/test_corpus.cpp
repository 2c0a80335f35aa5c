#include <doctest.h>

#include <string>
#include <vector>

#include "citemetric/corpus.hpp"
#include "support/builders.hpp"
#include "support/check_error.hpp"

using namespace citemetric;
using namespace testsupport;

TEST_SUITE("corpus") {

TEST_CASE("category letters parse as the closed a..g set") {
    CHECK(parse_category("a") == Category::A);
    CHECK(parse_category("g") == Category::G);
    CHECK(category_letter(Category::C) == 'c');
    CHECK_FALSE(parse_category("h").has_value());
    CHECK_FALSE(parse_category("A").has_value());
    CHECK_FALSE(parse_category("").has_value());
    CHECK_FALSE(parse_category("ab").has_value());
}

TEST_CASE("author keys fold case, accents, and whitespace") {
    CHECK(normalize_author_key("Alice Smith") == "alice smith");
    CHECK(normalize_author_key("  Ana   MARÍA ") == "ana maria");
    CHECK(normalize_author_key("Müller") == "muller");
    CHECK(normalize_author_key("Ştefan Ionescu") == "stefan ionescu");
    CHECK(normalize_author_key("Hørowitz-Nağy") == "horowitz-nagy");
    CHECK(normalize_author_key("\tJoão\nPaulo") == "joao paulo");
    CHECK(normalize_author_key("   ") == "");
    CHECK(normalize_author_key("X") == "x");
}

TEST_CASE("empty document parses to an empty corpus") {
    Corpus c = parse_corpus(R"({"papers": [], "citations": []})");
    CHECK(c.papers().empty());
    CHECK(c.edges().empty());
    CHECK(c.annotated_edge_count() == 0);
}

TEST_CASE("minimal two-paper corpus with one annotated edge") {
    Corpus c = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}},
                           {{"P2", "P1", 'b', 1.0}});
    CHECK(c.papers().size() == 2);
    CHECK(c.edges().size() == 1);
    const CitationEdge* e = c.find_edge("P2", "P1");
    REQUIRE(e != nullptr);
    CHECK(e->category == Category::B);
    CHECK(e->weight == 1.0);
    CHECK(c.annotated_edge_count() == 1);
    CHECK(c.incoming_edge_indices("P1").size() == 1);
    CHECK(c.incoming_edge_indices("P2").empty());
}

TEST_CASE("dangling citation names the missing endpoint") {
    std::string msg = expect_error(errc::dangling_citation, [] {
        make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {{"P2", "P9"}});
    });
    CHECK(msg.find("P9") != std::string::npos);
}

TEST_CASE("self citation edges are allowed") {
    Corpus c = make_corpus({{"P1", {"Alice"}}}, {{"P1", "P1", 'd', 1.0}});
    CHECK(c.edges().size() == 1);
    CHECK(c.incoming_edge_indices("P1").size() == 1);
}

TEST_CASE("duplicate ids, duplicate edges, and bad fields are rejected") {
    expect_error(errc::duplicate_paper_id, [] {
        make_corpus({{"P1", {"Alice"}}, {"P1", {"Bob"}}}, {});
    });
    expect_error(errc::duplicate_edge, [] {
        make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}},
                    {{"P2", "P1", 'b'}, {"P2", "P1", 'c'}});
    });
    expect_error(errc::invalid_category, [] {
        parse_corpus(corpus_json({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {{"P2", "P1", 'h'}}));
    });
    expect_error(errc::negative_weight, [] {
        make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {{"P2", "P1", 'b', -0.5}});
    });
    expect_error(errc::malformed_document, [] {
        make_corpus({{"P1", {}}}, {}); // no authors
    });
    expect_error(errc::malformed_document, [] {
        make_corpus({{"P1", {"Alice"}, std::nullopt, 0}}, {}); // year 0
    });
}

TEST_CASE("weights that overflow a double are malformed") {
    std::string text = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]},
        {"id": "P2", "title": "t", "year": 2000, "authors": [{"name": "B"}]}],
        "citations": [{"citing": "P2", "cited": "P1", "weight": 1e999}]})";
    expect_error(errc::malformed_document, [&] { parse_corpus(text); });
}

TEST_CASE("syntax errors report the line") {
    std::string msg = expect_error(errc::malformed_document, [] {
        parse_corpus("{\"papers\": [],\n\"citations\": [}", "bad.json");
    });
    CHECK(msg.find("bad.json") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("unknown keys are rejected everywhere") {
    expect_error(errc::malformed_document,
                 [] { parse_corpus(R"({"papers": [], "citations": [], "extra": 1})"); });
    expect_error(errc::malformed_document, [] {
        parse_corpus(R"({"papers": [{"id": "P1", "title": "t", "year": 2000,
            "authors": [{"name": "A"}], "color": "red"}], "citations": []})");
    });
}

TEST_CASE("serialization round-trips content exactly") {
    Corpus original = make_corpus(
        {{"P1", {"Ana María", "Bob"}, std::string("lab1"), 1998, "First", std::string("VLDB")},
         {"P2", {"Carol"}, std::nullopt, 2005},
         {"P3", {"Dave"}, std::string("lab2"), 2010}},
        {{"P2", "P1", 'b', 0.25}, {"P3", "P1", 'c', 2.0}, {"P3", "P2"}});
    std::string bytes = serialize_corpus(original);
    Corpus reparsed = parse_corpus(bytes);
    CHECK(original.same_content(reparsed));
    CHECK(serialize_corpus(reparsed) == bytes);
}

TEST_CASE("annotations apply, preserve edge count, and stay idempotent") {
    Corpus base = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}, {"P3", {"Carol"}}},
                              {{"P2", "P1"}, {"P3", "P1"}});
    const std::string csv = "citing_id,cited_id,category,weight\nP2,P1,b,1.0\nP3,P1,c,\n";

    Corpus once = load_annotations(base, csv);
    CHECK(base.annotated_edge_count() == 0); // input untouched
    CHECK(once.edges().size() == base.edges().size());
    CHECK(once.annotated_edge_count() == 2);
    CHECK(once.find_edge("P2", "P1")->category == Category::B);
    CHECK(once.find_edge("P3", "P1")->weight == 1.0); // empty weight defaults

    Corpus twice = load_annotations(once, csv);
    CHECK(twice.same_content(once));
    CHECK(serialize_corpus(twice) == serialize_corpus(once));

    Corpus untouched = load_annotations(base, "citing_id,cited_id,category,weight\n");
    CHECK(untouched.same_content(base));
}

TEST_CASE("annotation conflicts and unknown edges are rejected") {
    Corpus base = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {{"P2", "P1"}});
    expect_error(errc::conflicting_annotation, [&] {
        load_annotations(base, "citing_id,cited_id,category,weight\nP2,P1,b,1.0\nP2,P1,c,1.0\n");
    });
    std::string msg = expect_error(errc::unknown_edge, [&] {
        load_annotations(base, "citing_id,cited_id,category,weight\nP1,P2,b,1.0\n");
    });
    CHECK(msg.find("P1") != std::string::npos);
    expect_error(errc::malformed_document, [&] {
        load_annotations(base, "nope\nP2,P1,b,1.0\n"); // bad header
    });
    expect_error(errc::invalid_category, [&] {
        load_annotations(base, "citing_id,cited_id,category,weight\nP2,P1,x,1.0\n");
    });
    expect_error(errc::negative_weight, [&] {
        load_annotations(base, "citing_id,cited_id,category,weight\nP2,P1,b,-1\n");
    });
}

TEST_CASE("re-annotating with identical values is a no-op, not a conflict") {
    Corpus base = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}}, {{"P2", "P1", 'b', 2.0}});
    Corpus again =
        load_annotations(base, "citing_id,cited_id,category,weight\nP2,P1,b,2.0\n");
    CHECK(again.same_content(base));
    expect_error(errc::conflicting_annotation, [&] {
        load_annotations(base, "citing_id,cited_id,category,weight\nP2,P1,b,3.0\n");
    });
}

TEST_CASE("validate_corpus reports warnings without failing") {
    Corpus clean = make_corpus({{"P1", {"Alice"}, std::string("lab1")},
                                {"P2", {"Bob"}, std::string("lab1")}},
                               {{"P2", "P1", 'b', 1.0}});
    ValidationReport r1 = validate_corpus(clean);
    CHECK(r1.ok());
    CHECK(r1.errors.empty());
    CHECK(r1.warnings.empty());

    Corpus partial = make_corpus({{"P1", {"Alice"}}, {"P2", {"Bob"}}, {"P3", {"Carol"}}},
                                 {{"P2", "P1", 'b', 1.0}, {"P3", "P1"}, {"P3", "P2"}});
    ValidationReport r2 = validate_corpus(partial);
    CHECK(r2.ok());
    REQUIRE(r2.warnings.size() == 1);
    CHECK(r2.warnings[0].message.find("2 unannotated edges") != std::string::npos);

    Corpus futuristic = make_corpus({{"P1", {"Alice"}, std::nullopt, 3000}}, {});
    ValidationReport r3 = validate_corpus(futuristic);
    CHECK(r3.ok()); // implausible year is a warning, never an error
    REQUIRE(r3.warnings.size() == 1);
    CHECK(r3.warnings[0].message.find("3000") != std::string::npos);

    Corpus mixed = make_corpus({{"P1", {"Alice"}, std::string("lab1")}, {"P2", {"Bob"}}}, {});
    ValidationReport r4 = validate_corpus(mixed);
    CHECK(r4.ok());
    REQUIRE(r4.warnings.size() == 1);
    CHECK(r4.warnings[0].message.find("group_label") != std::string::npos);
}

TEST_CASE("validate_document collects every finding with original locations") {
    std::string text = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]},
        {"id": "", "title": "t", "year": 2000, "authors": [{"name": "B"}]},
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "C"}]}
    ], "citations": [
        {"citing": "P1", "cited": "MISSING"},
        {"citing": "P1", "cited": "P1", "weight": -3}
    ]})";
    ValidationReport report = validate_document(text);
    CHECK_FALSE(report.ok());
    REQUIRE(report.errors.size() == 4);
    bool saw_empty_id = false, saw_duplicate = false, saw_dangling = false, saw_weight = false;
    for (const Finding& f : report.errors) {
        if (f.location == "papers[1]") saw_empty_id = true;
        if (f.location == "papers[2]" && f.code == errc::duplicate_paper_id) saw_duplicate = true;
        if (f.location == "citations[0]" && f.code == errc::dangling_citation) saw_dangling = true;
        if (f.location == "citations[1]" && f.code == errc::negative_weight) saw_weight = true;
    }
    CHECK(saw_empty_id);
    CHECK(saw_duplicate);
    CHECK(saw_dangling);
    CHECK(saw_weight);
}

TEST_CASE("validate_document keeps locations aligned after dropped records") {
    // papers[1] fails the schema and is dropped; the duplicate at papers[3]
    // must still be reported against its original position.
    std::string text = R"({"papers": [
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "A"}]},
        {"id": "BAD", "title": "t", "year": "not a number", "authors": [{"name": "B"}]},
        {"id": "P2", "title": "t", "year": 2000, "authors": [{"name": "C"}]},
        {"id": "P1", "title": "t", "year": 2000, "authors": [{"name": "D"}]}
    ], "citations": []})";
    ValidationReport report = validate_document(text);
    bool saw = false;
    for (const Finding& f : report.errors)
        if (f.location == "papers[3]" && f.code == errc::duplicate_paper_id) saw = true;
    CHECK(saw);
}

TEST_CASE("missing files raise io errors") {
    expect_error(errc::io, [] { load_corpus_file("/nonexistent/corpus.json"); });
    Corpus base = parse_corpus(R"({"papers": [], "citations": []})");
    expect_error(errc::io, [&] { load_annotations_file(base, "/nonexistent/ann.csv"); });
}

TEST_CASE("paper lookup throws unknown_paper for absent ids") {
    Corpus c = make_corpus({{"P1", {"Alice"}}}, {});
    CHECK(c.find_paper("P1") != nullptr);
    CHECK(c.find_paper("P2") == nullptr);
    CHECK(c.paper_at("P1").id == "P1");
    expect_error(errc::unknown_paper, [&] { c.paper_at("P2"); });
}

} // TEST_SUITE
