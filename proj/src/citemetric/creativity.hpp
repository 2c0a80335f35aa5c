#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "citemetric/grouping.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Publication-level creativity metrics
//
// Novelty works on the clusters holding alternative-solution citations
// (categories b and f): per contributing cluster i, Cit_i is its count of
// b/f-labeled citing papers and f_i the summed b/f weights, and
//
//   reciprocal (default):  1 / (MAX * sum_i f_i / Cit_i)
//   normalized-sum:        (1 / MAX) * sum_i f_i / Cit_i
//
// with MAX the largest such Cit_i. The reciprocal form is the default: more
// groups publishing alternatives must reduce uniqueness.
//
// Usefulness accumulates the build-on categories (c, d, e, g): per category
// X, term_X = (sum_i w_i * Cit_i) / MAX_X over clusters with X citations,
// and the score is the sum of the four terms. Category a citations are
// ingested and reported but enter neither metric.
// ---------------------------------------------------------------------------

enum class NoveltyForm { reciprocal, normalized_sum };

std::optional<NoveltyForm> parse_novelty_form(std::string_view text) noexcept;
const char* novelty_form_name(NoveltyForm form) noexcept;

struct NoveltyScore {
    // Undefined (and value meaningless) when no cluster carries b/f
    // citations with positive weight; reported as N/A, never as 0 or
    // infinity.
    bool defined = false;
    double value = 0.0;
    int contributing_clusters = 0; // clusters with >= 1 citation in b or f
    int max_cluster = 0;           // largest b/f citation count in one cluster
    NoveltyForm form = NoveltyForm::reciprocal;
};

struct UsefulnessScore {
    double value = 0.0;                          // sum of the four terms
    std::array<double, category_count> terms{};  // only c, d, e, g can be non-zero
    std::array<int, category_count> max_counts{}; // MAX_X used; 0 when category absent

    double term(Category c) const noexcept { return terms[static_cast<std::size_t>(c)]; }
    int max_count(Category c) const noexcept {
        return max_counts[static_cast<std::size_t>(c)];
    }
};

NoveltyScore novelty(const ClusterSet& clusters, NoveltyForm form = NoveltyForm::reciprocal);
UsefulnessScore usefulness(const ClusterSet& clusters);

struct CreativityProfile {
    std::string paper_id;
    NoveltyScore novelty;
    UsefulnessScore usefulness;
    int cluster_count = 0;
    int auto_citation_cluster_count = 0;
};

// build_clusters + flag_auto_citations + both metrics in one call.
// Throws Error(unknown_paper).
CreativityProfile creativity_profile(const Corpus& corpus, const GroupAssignment& assignment,
                                     std::string_view cited_id,
                                     NoveltyForm form = NoveltyForm::reciprocal);

} // namespace citemetric
