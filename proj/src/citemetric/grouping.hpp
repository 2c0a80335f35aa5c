#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citemetric/corpus.hpp"

namespace citemetric {

// ---------------------------------------------------------------------------
// Research-group resolution
// ---------------------------------------------------------------------------

enum class GroupingStrategy {
    explicit_labels,           // share a group_label, unlabeled papers are singletons
    shared_author_components,  // connected components of the shared-author graph
    last_author,               // share the final author's normalized key
};

std::optional<GroupingStrategy> parse_strategy(std::string_view text) noexcept;
const char* strategy_name(GroupingStrategy s) noexcept;

// explicit-labels when any paper carries a label, shared-author-components
// otherwise.
GroupingStrategy default_strategy(const Corpus& corpus) noexcept;

// A partition of all corpus papers. Group ids are the lexicographically
// smallest member paper id, for every strategy, so assignments are
// deterministic and independent of input order.
struct GroupAssignment {
    GroupingStrategy strategy = GroupingStrategy::shared_author_components;
    std::unordered_map<std::string, std::string> group_of;
    std::map<std::string, std::vector<std::string>> groups; // id -> sorted member ids

    // Throws Error(unknown_paper) when the paper is not in the partition.
    const std::string& group_of_paper(std::string_view paper_id) const;
};

// Throws Error(strategy_unavailable) when explicit-labels is requested but no
// paper carries a label.
GroupAssignment resolve_groups(const Corpus& corpus, GroupingStrategy strategy);

// ---------------------------------------------------------------------------
// Citation clusters
// ---------------------------------------------------------------------------

// All citing papers of one cited paper that originate from a single group.
struct CitationCluster {
    std::string cited_id;
    std::string group_id;
    std::vector<std::string> citing_ids; // sorted, distinct
    std::array<int, category_count> category_counts{};
    std::array<double, category_count> weight_sums{};
    bool auto_citation = false;

    int size() const noexcept { return static_cast<int>(citing_ids.size()); }
    int count(Category c) const noexcept { return category_counts[static_cast<std::size_t>(c)]; }
    double weight_sum(Category c) const noexcept {
        return weight_sums[static_cast<std::size_t>(c)];
    }
};

struct ClusterSet {
    std::string cited_id;
    std::vector<CitationCluster> clusters; // sorted by group id
    int max_size_overall = 0;
    // Per category, the largest count of citations of that category within a
    // single cluster; 0 when no cluster carries the category.
    std::array<int, category_count> max_size_by_category{};

    int max_count(Category c) const noexcept {
        return max_size_by_category[static_cast<std::size_t>(c)];
    }
};

// One cluster per group with at least one citing paper of cited_id; every
// citing edge lands in exactly one cluster. Auto-citation flags start false;
// apply flag_auto_citations for them. Throws Error(unknown_paper).
ClusterSet build_clusters(const Corpus& corpus, const GroupAssignment& assignment,
                          std::string_view cited_id);

// Sets each cluster's auto_citation flag (group equals the cited paper's own
// group); everything else is carried over unchanged.
ClusterSet flag_auto_citations(ClusterSet clusters, const GroupAssignment& assignment);

} // namespace citemetric
