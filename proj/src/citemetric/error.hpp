#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace citemetric {

// Every failure the library reports carries one of these codes. The CLI maps
// io/malformed_document to exit 1 and everything else to exit 2.
enum class errc {
    io,
    malformed_document,
    duplicate_paper_id,
    dangling_citation,
    duplicate_edge,
    invalid_category,
    negative_weight,
    unknown_edge,
    conflicting_annotation,
    unknown_paper,
    strategy_unavailable,
    invalid_counts,
    empty_feature_list,
    empty_levels,
    nonpositive_design_count,
    empty_histogram,
    unsupported_format,
    invalid_config,
    invalid_argument,
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::io: return "io";
        case errc::malformed_document: return "malformed-document";
        case errc::duplicate_paper_id: return "duplicate-paper-id";
        case errc::dangling_citation: return "dangling-citation";
        case errc::duplicate_edge: return "duplicate-edge";
        case errc::invalid_category: return "invalid-category";
        case errc::negative_weight: return "negative-weight";
        case errc::unknown_edge: return "unknown-edge";
        case errc::conflicting_annotation: return "conflicting-annotation";
        case errc::unknown_paper: return "unknown-paper";
        case errc::strategy_unavailable: return "strategy-unavailable";
        case errc::invalid_counts: return "invalid-counts";
        case errc::empty_feature_list: return "empty-feature-list";
        case errc::empty_levels: return "empty-levels";
        case errc::nonpositive_design_count: return "nonpositive-design-count";
        case errc::empty_histogram: return "empty-histogram";
        case errc::unsupported_format: return "unsupported-format";
        case errc::invalid_config: return "invalid-config";
        case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace citemetric
