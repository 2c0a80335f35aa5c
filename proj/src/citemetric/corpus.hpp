#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citemetric/error.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Citation categories
// ---------------------------------------------------------------------------

// The seven roles a citation can play in the citing paper, from general
// domain reference (A) to established-fact justification (G). Closed set;
// nothing else parses.
enum class Category : std::uint8_t { A = 0, B, C, D, E, F, G };

inline constexpr std::size_t category_count = 7;

inline constexpr std::array<Category, category_count> all_categories = {
    Category::A, Category::B, Category::C, Category::D,
    Category::E, Category::F, Category::G,
};

inline char category_letter(Category c) noexcept {
    return static_cast<char>('a' + static_cast<int>(c));
}

// Accepts exactly the lowercase letters "a".."g".
std::optional<Category> parse_category(std::string_view text) noexcept;

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

struct AuthorRef {
    std::string raw_name;
    std::string normalized_key; // derived: lowercased, diacritics folded, spaces collapsed
};

// Lowercases ASCII and common Latin accented letters (folding the accents
// away), collapses whitespace runs to a single space and trims the ends.
// Codepoints outside those ranges pass through unchanged.
std::string normalize_author_key(std::string_view raw_name);

struct PaperRecord {
    std::string id;
    std::string title;
    int year = 0;
    std::optional<std::string> venue;
    std::vector<AuthorRef> authors; // non-empty
    std::optional<std::string> group_label;
};

struct CitationEdge {
    std::string citing_id;
    std::string cited_id;
    std::optional<Category> category;
    double weight = 1.0; // >= 0; the per-edge share of f_i / w_i
};

struct Provenance {
    std::string source_path; // "<buffer>" when parsed from memory
    std::optional<std::string> annotations_path;
    std::chrono::system_clock::time_point loaded_at;
};

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

// Immutable once constructed; safe to share across threads. The constructor
// enforces the invariants (unique ids, non-empty author lists, positive
// years, resolvable edge endpoints, one edge per (citing, cited) pair,
// non-negative weights) and throws Error on the first violation.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<PaperRecord> papers, std::vector<CitationEdge> edges,
           Provenance provenance);

    const std::vector<PaperRecord>& papers() const noexcept { return papers_; }
    const std::vector<CitationEdge>& edges() const noexcept { return edges_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    const PaperRecord* find_paper(std::string_view id) const noexcept;
    // Throws Error(unknown_paper) when absent.
    const PaperRecord& paper_at(std::string_view id) const;

    const CitationEdge* find_edge(std::string_view citing_id,
                                  std::string_view cited_id) const noexcept;

    // Indices into edges() of all edges pointing at cited_id.
    const std::vector<std::size_t>& incoming_edge_indices(std::string_view cited_id) const noexcept;

    std::size_t annotated_edge_count() const noexcept;

    // Paper and edge content equality; provenance is ignored.
    bool same_content(const Corpus& other) const noexcept;

private:
    std::vector<PaperRecord> papers_;
    std::vector<CitationEdge> edges_;
    Provenance provenance_;
    std::unordered_map<std::string, std::size_t> paper_index_;
    std::unordered_map<std::string, std::size_t> edge_index_; // key: citing \x1f cited
    std::unordered_map<std::string, std::vector<std::size_t>> incoming_;
};

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

// Corpus file format: one JSON document with top-level arrays `papers`
// ({id, title, year, venue?, authors: [{name}], group_label?}) and
// `citations` ({citing, cited, category?, weight?}). Unknown keys are
// rejected. Throws Error (malformed_document for syntax/schema trouble,
// specific codes for semantic violations).
Corpus parse_corpus(std::string_view text, std::string source_name = "<buffer>");
Corpus load_corpus_file(const std::string& path);

// Annotation format: CSV rows `citing_id,cited_id,category,weight` below a
// mandatory header line; empty weight defaults to 1.0. Returns a new corpus;
// the input corpus is untouched. Re-annotating an edge with identical values
// is a no-op, so applying the same stream twice equals applying it once;
// differing values raise conflicting_annotation.
Corpus load_annotations(const Corpus& corpus, std::string_view csv_text,
                        std::string source_name = "<annotations>");
Corpus load_annotations_file(const Corpus& corpus, const std::string& path);

// Canonical JSON serialization; parse_corpus(serialize_corpus(c)) has the
// same content as c, and identical corpora serialize to identical bytes.
std::string serialize_corpus(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Finding {
    std::string location; // e.g. "papers[3]" or "citations[0]"
    errc code = errc::invalid_argument;
    std::string message;

    std::string to_string() const;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

// Re-checks every corpus invariant (always clean for a constructed Corpus)
// and collects warnings: unannotated edge counts, papers missing a
// group_label while others carry one, implausible years.
ValidationReport validate_corpus(const Corpus& corpus);

// Lenient single-pass validation of a corpus document: semantic problems are
// collected instead of thrown, so a report can list all of them at once.
// Only unparseable JSON still throws (malformed_document).
ValidationReport validate_document(std::string_view text,
                                   std::string source_name = "<buffer>");

} // namespace citemetric
