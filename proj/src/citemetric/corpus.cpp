#include "citemetric/corpus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace citemetric {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Categories
// ---------------------------------------------------------------------------

std::optional<Category> parse_category(std::string_view text) noexcept {
    if (text.size() != 1) return std::nullopt;
    char c = text[0];
    if (c < 'a' || c > 'g') return std::nullopt;
    return static_cast<Category>(c - 'a');
}

// ---------------------------------------------------------------------------
// Author name normalization
// ---------------------------------------------------------------------------

namespace {

// U+00C0..U+00FF -> ASCII base letters; nullptr passes the codepoint through.
const char* const latin1_fold[64] = {
    "a", "a", "a", "a", "a", "a", "ae", "c",  // À Á Â Ã Ä Å Æ Ç
    "e", "e", "e", "e", "i", "i", "i", "i",   // È É Ê Ë Ì Í Î Ï
    "d", "n", "o", "o", "o", "o", "o", nullptr, // Ð Ñ Ò Ó Ô Õ Ö ×
    "o", "u", "u", "u", "u", "y", "th", "ss", // Ø Ù Ú Û Ü Ý Þ ß
    "a", "a", "a", "a", "a", "a", "ae", "c",  // à á â ã ä å æ ç
    "e", "e", "e", "e", "i", "i", "i", "i",   // è é ê ë ì í î ï
    "d", "n", "o", "o", "o", "o", "o", nullptr, // ð ñ ò ó ô õ ö ÷
    "o", "u", "u", "u", "u", "y", "th", "y",  // ø ù ú û ü ý þ ÿ
};

// U+0100..U+017F -> ASCII base letters.
const char* const latin_ext_a_fold[128] = {
    "a", "a", "a", "a", "a", "a",                     // 0100-0105 Ā..ą
    "c", "c", "c", "c", "c", "c", "c", "c",           // 0106-010D Ć..č
    "d", "d", "d", "d",                               // 010E-0111 Ď..đ
    "e", "e", "e", "e", "e", "e", "e", "e", "e", "e", // 0112-011B Ē..ě
    "g", "g", "g", "g", "g", "g", "g", "g",           // 011C-0123 Ĝ..ģ
    "h", "h", "h", "h",                               // 0124-0127 Ĥ..ħ
    "i", "i", "i", "i", "i", "i", "i", "i", "i", "i", // 0128-0131 Ĩ..ı
    "ij", "ij",                                       // 0132-0133 Ĳ ĳ
    "j", "j",                                         // 0134-0135 Ĵ ĵ
    "k", "k", "k",                                    // 0136-0138 Ķ ķ ĸ
    "l", "l", "l", "l", "l", "l", "l", "l", "l", "l", // 0139-0142 Ĺ..ł
    "n", "n", "n", "n", "n", "n", "n", "n", "n",      // 0143-014B Ń..ŋ
    "o", "o", "o", "o", "o", "o",                     // 014C-0151 Ō..ő
    "oe", "oe",                                       // 0152-0153 Œ œ
    "r", "r", "r", "r", "r", "r",                     // 0154-0159 Ŕ..ř
    "s", "s", "s", "s", "s", "s", "s", "s",           // 015A-0161 Ś..š
    "t", "t", "t", "t", "t", "t",                     // 0162-0167 Ţ..ŧ
    "u", "u", "u", "u", "u", "u", "u", "u", "u", "u", "u", "u", // 0168-0173 Ũ..ų
    "w", "w",                                         // 0174-0175 Ŵ ŵ
    "y", "y", "y",                                    // 0176-0178 Ŷ ŷ Ÿ
    "z", "z", "z", "z", "z", "z",                     // 0179-017E Ź..ž
    "s",                                              // 017F ſ
};

struct DecodedChar {
    std::uint32_t codepoint = 0;
    std::size_t length = 1;
    bool valid = false;
};

DecodedChar decode_utf8(std::string_view s, std::size_t pos) {
    DecodedChar d;
    auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        d = {b0, 1, true};
    } else if ((b0 & 0xE0) == 0xC0 && pos + 1 < s.size() && (byte(pos + 1) & 0xC0) == 0x80) {
        d = {static_cast<std::uint32_t>((b0 & 0x1Fu) << 6 | (byte(pos + 1) & 0x3Fu)), 2, true};
    } else if ((b0 & 0xF0) == 0xE0 && pos + 2 < s.size() && (byte(pos + 1) & 0xC0) == 0x80 &&
               (byte(pos + 2) & 0xC0) == 0x80) {
        d = {static_cast<std::uint32_t>((b0 & 0x0Fu) << 12 | (byte(pos + 1) & 0x3Fu) << 6 |
                                        (byte(pos + 2) & 0x3Fu)),
             3, true};
    } else if ((b0 & 0xF8) == 0xF0 && pos + 3 < s.size() && (byte(pos + 1) & 0xC0) == 0x80 &&
               (byte(pos + 2) & 0xC0) == 0x80 && (byte(pos + 3) & 0xC0) == 0x80) {
        d = {static_cast<std::uint32_t>((b0 & 0x07u) << 18 | (byte(pos + 1) & 0x3Fu) << 12 |
                                        (byte(pos + 2) & 0x3Fu) << 6 | (byte(pos + 3) & 0x3Fu)),
             4, true};
    }
    return d;
}

bool is_space_codepoint(std::uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
           cp == 0xA0;
}

} // namespace

std::string normalize_author_key(std::string_view raw_name) {
    std::string out;
    out.reserve(raw_name.size());
    bool pending_space = false;
    auto emit = [&](std::string_view piece) {
        if (piece.empty()) return;
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.append(piece);
    };

    std::size_t i = 0;
    while (i < raw_name.size()) {
        DecodedChar d = decode_utf8(raw_name, i);
        if (!d.valid) { // stray byte: copy as-is
            emit(raw_name.substr(i, 1));
            i += 1;
            continue;
        }
        std::uint32_t cp = d.codepoint;
        if (is_space_codepoint(cp)) {
            pending_space = true;
        } else if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            emit({&c, 1});
        } else if (cp >= 0xC0 && cp <= 0xFF && latin1_fold[cp - 0xC0]) {
            emit(latin1_fold[cp - 0xC0]);
        } else if (cp >= 0x100 && cp <= 0x17F) {
            emit(latin_ext_a_fold[cp - 0x100]);
        } else {
            emit(raw_name.substr(i, d.length));
        }
        i += d.length;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Semantic checks shared by the strict constructor and the lenient validator
// ---------------------------------------------------------------------------

namespace {

std::string quote_text(std::string_view s) {
    std::string out = "\"";
    out += s;
    out += '"';
    return out;
}

std::string edge_name(const CitationEdge& e) {
    return "(" + e.citing_id + " -> " + e.cited_id + ")";
}

std::string edge_key(std::string_view citing, std::string_view cited) {
    std::string k(citing);
    k.push_back('\x1f');
    k += cited;
    return k;
}

struct SemanticCheck {
    std::vector<Finding> findings;
    std::vector<char> paper_ok;
    std::vector<char> edge_ok;
};

// One pass over raw records: the rules behind DuplicatePaperId,
// DanglingCitation, DuplicateEdge, NegativeWeight and the per-record
// invariants. Offending records are masked out so a lenient caller can keep
// the valid remainder. The optional location vectors carry the records'
// positions in the source document when some entries were already dropped.
SemanticCheck check_semantics(const std::vector<PaperRecord>& papers,
                              const std::vector<CitationEdge>& edges,
                              const std::vector<std::string>* paper_locations = nullptr,
                              const std::vector<std::string>* edge_locations = nullptr) {
    SemanticCheck result;
    result.paper_ok.assign(papers.size(), 1);
    result.edge_ok.assign(edges.size(), 1);

    auto flag_paper = [&](std::size_t i, errc code, std::string message) {
        result.paper_ok[i] = 0;
        std::string loc = paper_locations ? (*paper_locations)[i]
                                          : "papers[" + std::to_string(i) + "]";
        result.findings.push_back({std::move(loc), code, std::move(message)});
    };
    auto flag_edge = [&](std::size_t i, errc code, std::string message) {
        result.edge_ok[i] = 0;
        std::string loc = edge_locations ? (*edge_locations)[i]
                                         : "citations[" + std::to_string(i) + "]";
        result.findings.push_back({std::move(loc), code, std::move(message)});
    };

    std::unordered_map<std::string, std::size_t> seen_ids;
    for (std::size_t i = 0; i < papers.size(); ++i) {
        const PaperRecord& p = papers[i];
        if (p.id.empty()) {
            flag_paper(i, errc::malformed_document, "paper id must be a non-empty string");
            continue;
        }
        if (auto [it, inserted] = seen_ids.emplace(p.id, i); !inserted) {
            flag_paper(i, errc::duplicate_paper_id,
                       "duplicate paper id " + quote_text(p.id) + " (first declared at papers[" +
                           std::to_string(it->second) + "])");
            continue;
        }
        if (p.authors.empty()) {
            flag_paper(i, errc::malformed_document, "paper " + quote_text(p.id) + " has no authors");
            continue;
        }
        bool bad_author = false;
        for (const AuthorRef& a : p.authors) {
            if (a.normalized_key.empty()) {
                flag_paper(i, errc::malformed_document,
                           "paper " + quote_text(p.id) + " has an author whose name normalizes to nothing");
                bad_author = true;
                break;
            }
        }
        if (bad_author) continue;
        if (p.year <= 0) {
            flag_paper(i, errc::malformed_document,
                       "paper " + quote_text(p.id) + " has non-positive year " + std::to_string(p.year));
        }
    }

    std::unordered_map<std::string, std::size_t> seen_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const CitationEdge& e = edges[i];
        auto resolves = [&](const std::string& id) {
            auto it = seen_ids.find(id);
            return it != seen_ids.end() && result.paper_ok[it->second];
        };
        if (!resolves(e.citing_id)) {
            flag_edge(i, errc::dangling_citation,
                      "edge " + edge_name(e) + ": citing paper " + quote_text(e.citing_id) +
                          " not declared");
            continue;
        }
        if (!resolves(e.cited_id)) {
            flag_edge(i, errc::dangling_citation,
                      "edge " + edge_name(e) + ": cited paper " + quote_text(e.cited_id) +
                          " not declared");
            continue;
        }
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
            flag_edge(i, errc::negative_weight,
                      "edge " + edge_name(e) + " has invalid weight " + std::to_string(e.weight));
            continue;
        }
        if (auto [it, inserted] = seen_edges.emplace(edge_key(e.citing_id, e.cited_id), i);
            !inserted) {
            flag_edge(i, errc::duplicate_edge,
                      "duplicate edge " + edge_name(e) + " (first declared at citations[" +
                          std::to_string(it->second) + "])");
        }
    }
    return result;
}

} // namespace

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

Corpus::Corpus(std::vector<PaperRecord> papers, std::vector<CitationEdge> edges,
               Provenance provenance)
    : papers_(std::move(papers)), edges_(std::move(edges)), provenance_(std::move(provenance)) {
    SemanticCheck check = check_semantics(papers_, edges_);
    if (!check.findings.empty()) {
        const Finding& first = check.findings.front();
        fail(first.code, first.location + ": " + first.message);
    }
    paper_index_.reserve(papers_.size());
    for (std::size_t i = 0; i < papers_.size(); ++i) paper_index_.emplace(papers_[i].id, i);
    edge_index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        edge_index_.emplace(edge_key(edges_[i].citing_id, edges_[i].cited_id), i);
        incoming_[edges_[i].cited_id].push_back(i);
    }
}

const PaperRecord* Corpus::find_paper(std::string_view id) const noexcept {
    auto it = paper_index_.find(std::string(id));
    return it == paper_index_.end() ? nullptr : &papers_[it->second];
}

const PaperRecord& Corpus::paper_at(std::string_view id) const {
    const PaperRecord* p = find_paper(id);
    if (!p) fail(errc::unknown_paper, "unknown paper " + quote_text(id));
    return *p;
}

const CitationEdge* Corpus::find_edge(std::string_view citing_id,
                                      std::string_view cited_id) const noexcept {
    auto it = edge_index_.find(edge_key(citing_id, cited_id));
    return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const std::vector<std::size_t>& Corpus::incoming_edge_indices(
    std::string_view cited_id) const noexcept {
    static const std::vector<std::size_t> empty;
    auto it = incoming_.find(std::string(cited_id));
    return it == incoming_.end() ? empty : it->second;
}

std::size_t Corpus::annotated_edge_count() const noexcept {
    std::size_t n = 0;
    for (const CitationEdge& e : edges_)
        if (e.category) ++n;
    return n;
}

bool Corpus::same_content(const Corpus& other) const noexcept {
    if (papers_.size() != other.papers_.size() || edges_.size() != other.edges_.size())
        return false;
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        const PaperRecord& a = papers_[i];
        const PaperRecord& b = other.papers_[i];
        if (a.id != b.id || a.title != b.title || a.year != b.year || a.venue != b.venue ||
            a.group_label != b.group_label || a.authors.size() != b.authors.size())
            return false;
        for (std::size_t j = 0; j < a.authors.size(); ++j) {
            if (a.authors[j].raw_name != b.authors[j].raw_name ||
                a.authors[j].normalized_key != b.authors[j].normalized_key)
                return false;
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const CitationEdge& a = edges_[i];
        const CitationEdge& b = other.edges_[i];
        if (a.citing_id != b.citing_id || a.cited_id != b.cited_id || a.category != b.category ||
            a.weight != b.weight)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// JSON document reading
// ---------------------------------------------------------------------------

namespace {

struct RawDocument {
    std::vector<PaperRecord> papers;
    std::vector<CitationEdge> edges;
    // Source locations, parallel to the vectors above; they diverge from the
    // vector indices once lenient reading drops records.
    std::vector<std::string> paper_locations;
    std::vector<std::string> edge_locations;
};

[[noreturn]] void fail_at(const std::string& location, errc code, const std::string& message) {
    fail(code, location + ": " + message);
}

void schema_issue(std::vector<Finding>* sink, const std::string& location, errc code,
                  const std::string& message) {
    if (sink)
        sink->push_back({location, code, message});
    else
        fail_at(location, code, message);
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

void check_keys(const ordered_json& obj, const std::string& location,
                std::initializer_list<const char*> allowed, std::vector<Finding>* sink,
                bool* ok) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) {
            schema_issue(sink, location, errc::malformed_document,
                         "unknown key " + quote_text(it.key()));
            *ok = false;
            return;
        }
    }
}

// JSON -> raw records. Schema problems at document level always throw; a
// problem inside one record throws in strict mode and drops the record in
// lenient mode.
RawDocument read_document(std::string_view text, const std::string& source,
                          std::vector<Finding>* sink) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::malformed_document,
             source + ": syntax error at line " + std::to_string(line_of_offset(text, e.byte)) +
                 " (byte " + std::to_string(e.byte) + "): " + e.what());
    } catch (const nlohmann::json::exception& e) {
        // e.g. numeric literals that overflow a double
        fail(errc::malformed_document, source + ": unrepresentable value: " + e.what());
    }
    if (!doc.is_object())
        fail(errc::malformed_document, source + ": top level must be an object");
    {
        bool ok = true;
        check_keys(doc, source, {"papers", "citations"}, nullptr, &ok);
    }
    if (!doc.contains("papers") || !doc["papers"].is_array())
        fail(errc::malformed_document, source + ": missing required array \"papers\"");
    if (!doc.contains("citations") || !doc["citations"].is_array())
        fail(errc::malformed_document, source + ": missing required array \"citations\"");

    RawDocument out;
    const ordered_json& papers = doc["papers"];
    out.papers.reserve(papers.size());
    for (std::size_t i = 0; i < papers.size(); ++i) {
        const ordered_json& jp = papers[i];
        std::string loc = "papers[" + std::to_string(i) + "]";
        bool ok = true;
        auto bad = [&](const std::string& message) {
            schema_issue(sink, loc, errc::malformed_document, message);
            ok = false;
        };
        if (!jp.is_object()) {
            bad("paper entry must be an object");
            continue;
        }
        check_keys(jp, loc, {"id", "title", "year", "venue", "authors", "group_label"}, sink, &ok);
        if (!ok) continue;
        PaperRecord rec;
        if (!jp.contains("id") || !jp["id"].is_string()) {
            bad("\"id\" must be a string");
            continue;
        }
        rec.id = jp["id"].get<std::string>();
        if (!jp.contains("title") || !jp["title"].is_string()) {
            bad("\"title\" must be a string");
            continue;
        }
        rec.title = jp["title"].get<std::string>();
        if (!jp.contains("year") || !jp["year"].is_number_integer()) {
            bad("\"year\" must be an integer");
            continue;
        }
        rec.year = jp["year"].get<int>();
        if (jp.contains("venue")) {
            if (!jp["venue"].is_string()) {
                bad("\"venue\" must be a string");
                continue;
            }
            rec.venue = jp["venue"].get<std::string>();
        }
        if (jp.contains("group_label")) {
            if (!jp["group_label"].is_string()) {
                bad("\"group_label\" must be a string");
                continue;
            }
            rec.group_label = jp["group_label"].get<std::string>();
        }
        if (!jp.contains("authors") || !jp["authors"].is_array()) {
            bad("\"authors\" must be an array");
            continue;
        }
        for (const ordered_json& ja : jp["authors"]) {
            if (!ja.is_object() || !ja.contains("name") || !ja["name"].is_string()) {
                bad("author entries must be objects with a \"name\" string");
                ok = false;
                break;
            }
            bool keys_ok = true;
            check_keys(ja, loc, {"name"}, sink, &keys_ok);
            if (!keys_ok) {
                ok = false;
                break;
            }
            std::string raw = ja["name"].get<std::string>();
            rec.authors.push_back({raw, normalize_author_key(raw)});
        }
        if (!ok) continue;
        out.papers.push_back(std::move(rec));
        out.paper_locations.push_back(loc);
    }

    const ordered_json& citations = doc["citations"];
    out.edges.reserve(citations.size());
    for (std::size_t i = 0; i < citations.size(); ++i) {
        const ordered_json& je = citations[i];
        std::string loc = "citations[" + std::to_string(i) + "]";
        bool ok = true;
        auto bad = [&](errc code, const std::string& message) {
            schema_issue(sink, loc, code, message);
            ok = false;
        };
        if (!je.is_object()) {
            bad(errc::malformed_document, "citation entry must be an object");
            continue;
        }
        check_keys(je, loc, {"citing", "cited", "category", "weight"}, sink, &ok);
        if (!ok) continue;
        CitationEdge edge;
        if (!je.contains("citing") || !je["citing"].is_string()) {
            bad(errc::malformed_document, "\"citing\" must be a string");
            continue;
        }
        edge.citing_id = je["citing"].get<std::string>();
        if (!je.contains("cited") || !je["cited"].is_string()) {
            bad(errc::malformed_document, "\"cited\" must be a string");
            continue;
        }
        edge.cited_id = je["cited"].get<std::string>();
        if (je.contains("category")) {
            if (!je["category"].is_string()) {
                bad(errc::invalid_category, "\"category\" must be a string");
                continue;
            }
            std::string cat = je["category"].get<std::string>();
            auto parsed = parse_category(cat);
            if (!parsed) {
                bad(errc::invalid_category,
                    "invalid category " + quote_text(cat) + " (expected \"a\"..\"g\")");
                continue;
            }
            edge.category = *parsed;
        }
        if (je.contains("weight")) {
            if (!je["weight"].is_number()) {
                bad(errc::malformed_document, "\"weight\" must be a number");
                continue;
            }
            edge.weight = je["weight"].get<double>();
        }
        out.edges.push_back(std::move(edge));
        out.edge_locations.push_back(loc);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open " + quote_text(path));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(errc::io, "read failure on " + quote_text(path));
    return buf.str();
}

Provenance make_provenance(std::string source) {
    Provenance p;
    p.source_path = std::move(source);
    p.loaded_at = std::chrono::system_clock::now();
    return p;
}

} // namespace

Corpus parse_corpus(std::string_view text, std::string source_name) {
    RawDocument raw = read_document(text, source_name, nullptr);
    return Corpus(std::move(raw.papers), std::move(raw.edges), make_provenance(std::move(source_name)));
}

Corpus load_corpus_file(const std::string& path) {
    return parse_corpus(read_file(path), path);
}

// ---------------------------------------------------------------------------
// Annotations
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_weight_field(std::string_view field, const std::string& where) {
    std::string text(field);
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || !std::isfinite(value))
        fail(errc::malformed_document, where + ": weight " + quote_text(text) + " is not a finite number");
    if (value < 0.0)
        fail(errc::negative_weight, where + ": weight must be non-negative, got " + text);
    return value;
}

} // namespace

Corpus load_annotations(const Corpus& corpus, std::string_view csv_text,
                        std::string source_name) {
    std::vector<PaperRecord> papers = corpus.papers();
    std::vector<CitationEdge> edges = corpus.edges();

    std::vector<std::string_view> lines;
    {
        std::size_t start = 0;
        while (start <= csv_text.size()) {
            std::size_t nl = csv_text.find('\n', start);
            if (nl == std::string_view::npos) {
                lines.push_back(csv_text.substr(start));
                break;
            }
            lines.push_back(csv_text.substr(start, nl - start));
            start = nl + 1;
        }
    }

    auto line_location = [&](std::size_t idx) {
        return source_name + ":" + std::to_string(idx + 1);
    };

    // Header is mandatory; spacing is irrelevant.
    std::string header;
    if (!lines.empty())
        for (char c : trim(lines[0]))
            if (c != ' ' && c != '\t') header.push_back(c);
    if (header != "citing_id,cited_id,category,weight")
        fail(errc::malformed_document,
             source_name + ": missing header line \"citing_id,cited_id,category,weight\"");

    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::string_view line = trim(lines[li]);
        if (line.empty()) continue;
        const std::string where = line_location(li);
        std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() != 3 && fields.size() != 4)
            fail(errc::malformed_document,
                 where + ": expected citing_id,cited_id,category,weight, got " +
                     std::to_string(fields.size()) + " field(s)");
        std::string citing(fields[0]);
        std::string cited(fields[1]);
        if (citing.empty() || cited.empty())
            fail(errc::malformed_document, where + ": citing_id and cited_id must be non-empty");
        auto category = parse_category(fields[2]);
        if (!category)
            fail(errc::invalid_category,
                 where + ": invalid category " + quote_text(fields[2]) + " (expected \"a\"..\"g\")");
        double weight = 1.0;
        if (fields.size() == 4 && !fields[3].empty())
            weight = parse_weight_field(fields[3], where);

        const CitationEdge* existing = corpus.find_edge(citing, cited);
        if (!existing)
            fail(errc::unknown_edge,
                 where + ": no edge (" + citing + " -> " + cited + ") in the corpus");
        std::size_t idx = static_cast<std::size_t>(existing - corpus.edges().data());
        CitationEdge& edge = edges[idx];
        if (edge.category) {
            if (*edge.category == *category && edge.weight == weight) continue; // re-assertion
            fail(errc::conflicting_annotation,
                 where + ": edge (" + citing + " -> " + cited + ") already carries category \"" +
                     std::string(1, category_letter(*edge.category)) + "\" with weight " +
                     std::to_string(edge.weight));
        }
        edge.category = category;
        edge.weight = weight;
    }

    Provenance prov = make_provenance(corpus.provenance().source_path);
    prov.annotations_path = std::move(source_name);
    return Corpus(std::move(papers), std::move(edges), std::move(prov));
}

Corpus load_annotations_file(const Corpus& corpus, const std::string& path) {
    return load_annotations(corpus, read_file(path), path);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string serialize_corpus(const Corpus& corpus) {
    ordered_json doc;
    ordered_json papers = ordered_json::array();
    for (const PaperRecord& p : corpus.papers()) {
        ordered_json jp;
        jp["id"] = p.id;
        jp["title"] = p.title;
        jp["year"] = p.year;
        if (p.venue) jp["venue"] = *p.venue;
        ordered_json authors = ordered_json::array();
        for (const AuthorRef& a : p.authors) authors.push_back({{"name", a.raw_name}});
        jp["authors"] = std::move(authors);
        if (p.group_label) jp["group_label"] = *p.group_label;
        papers.push_back(std::move(jp));
    }
    doc["papers"] = std::move(papers);
    ordered_json citations = ordered_json::array();
    for (const CitationEdge& e : corpus.edges()) {
        ordered_json je;
        je["citing"] = e.citing_id;
        je["cited"] = e.cited_id;
        if (e.category) je["category"] = std::string(1, category_letter(*e.category));
        if (e.weight != 1.0) je["weight"] = e.weight;
        citations.push_back(std::move(je));
    }
    doc["citations"] = std::move(citations);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::string Finding::to_string() const {
    return location + ": " + message + " [" + errc_name(code) + "]";
}

namespace {

void collect_warnings(const Corpus& corpus, std::vector<Finding>& warnings) {
    std::size_t unannotated = corpus.edges().size() - corpus.annotated_edge_count();
    if (unannotated > 0)
        warnings.push_back({"citations", errc::invalid_argument,
                            std::to_string(unannotated) + " unannotated edge" +
                                (unannotated == 1 ? "" : "s")});

    std::size_t labeled = 0;
    for (const PaperRecord& p : corpus.papers())
        if (p.group_label) ++labeled;
    if (labeled > 0 && labeled < corpus.papers().size()) {
        std::size_t missing = corpus.papers().size() - labeled;
        warnings.push_back({"papers", errc::invalid_argument,
                            std::to_string(missing) + " paper" + (missing == 1 ? "" : "s") +
                                " carry no group_label while others do"});
    }

    for (std::size_t i = 0; i < corpus.papers().size(); ++i) {
        const PaperRecord& p = corpus.papers()[i];
        if (p.year < 1500 || p.year > 2100)
            warnings.push_back({"papers[" + std::to_string(i) + "]", errc::invalid_argument,
                                "paper " + quote_text(p.id) + " has implausible year " +
                                    std::to_string(p.year)});
    }
}

} // namespace

ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport report;
    SemanticCheck check = check_semantics(corpus.papers(), corpus.edges());
    report.errors = std::move(check.findings);
    collect_warnings(corpus, report.warnings);
    return report;
}

ValidationReport validate_document(std::string_view text, std::string source_name) {
    ValidationReport report;
    RawDocument raw = read_document(text, source_name, &report.errors);
    SemanticCheck check =
        check_semantics(raw.papers, raw.edges, &raw.paper_locations, &raw.edge_locations);
    for (Finding& f : check.findings) report.errors.push_back(std::move(f));

    // Warnings are computed on the valid remainder.
    std::vector<PaperRecord> papers;
    std::vector<CitationEdge> edges;
    for (std::size_t i = 0; i < raw.papers.size(); ++i)
        if (check.paper_ok[i]) papers.push_back(std::move(raw.papers[i]));
    for (std::size_t i = 0; i < raw.edges.size(); ++i)
        if (check.edge_ok[i]) edges.push_back(std::move(raw.edges[i]));
    Corpus remainder(std::move(papers), std::move(edges), make_provenance(std::move(source_name)));
    collect_warnings(remainder, report.warnings);
    return report;
}

} // namespace citemetric
