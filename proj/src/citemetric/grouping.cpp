#include "citemetric/grouping.hpp"

#include <algorithm>
#include <numeric>

namespace citemetric {

std::optional<GroupingStrategy> parse_strategy(std::string_view text) noexcept {
    if (text == "explicit-labels") return GroupingStrategy::explicit_labels;
    if (text == "shared-author-components") return GroupingStrategy::shared_author_components;
    if (text == "last-author") return GroupingStrategy::last_author;
    return std::nullopt;
}

const char* strategy_name(GroupingStrategy s) noexcept {
    switch (s) {
        case GroupingStrategy::explicit_labels: return "explicit-labels";
        case GroupingStrategy::shared_author_components: return "shared-author-components";
        case GroupingStrategy::last_author: return "last-author";
    }
    return "?";
}

GroupingStrategy default_strategy(const Corpus& corpus) noexcept {
    for (const PaperRecord& p : corpus.papers())
        if (p.group_label) return GroupingStrategy::explicit_labels;
    return GroupingStrategy::shared_author_components;
}

const std::string& GroupAssignment::group_of_paper(std::string_view paper_id) const {
    auto it = group_of.find(std::string(paper_id));
    if (it == group_of.end())
        fail(errc::unknown_paper, "paper \"" + std::string(paper_id) + "\" is not in the group assignment");
    return it->second;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Turns per-paper component representatives into the final assignment with
// smallest-member group ids.
GroupAssignment finalize(const Corpus& corpus, GroupingStrategy strategy,
                         const std::vector<std::size_t>& representative) {
    const auto& papers = corpus.papers();

    std::unordered_map<std::size_t, std::string> group_id_of_rep;
    for (std::size_t i = 0; i < papers.size(); ++i) {
        std::size_t rep = representative[i];
        auto [it, inserted] = group_id_of_rep.emplace(rep, papers[i].id);
        if (!inserted && papers[i].id < it->second) it->second = papers[i].id;
    }

    GroupAssignment out;
    out.strategy = strategy;
    out.group_of.reserve(papers.size());
    for (std::size_t i = 0; i < papers.size(); ++i) {
        const std::string& gid = group_id_of_rep[representative[i]];
        out.group_of.emplace(papers[i].id, gid);
        out.groups[gid].push_back(papers[i].id);
    }
    for (auto& [gid, members] : out.groups) std::sort(members.begin(), members.end());
    return out;
}

} // namespace

GroupAssignment resolve_groups(const Corpus& corpus, GroupingStrategy strategy) {
    const auto& papers = corpus.papers();
    std::vector<std::size_t> representative(papers.size());
    std::iota(representative.begin(), representative.end(), std::size_t{0});

    switch (strategy) {
        case GroupingStrategy::explicit_labels: {
            std::unordered_map<std::string, std::size_t> first_with_label;
            bool any_label = false;
            for (std::size_t i = 0; i < papers.size(); ++i) {
                if (!papers[i].group_label) continue; // unlabeled papers stay singletons
                any_label = true;
                auto [it, inserted] = first_with_label.emplace(*papers[i].group_label, i);
                representative[i] = it->second;
            }
            if (!any_label)
                fail(errc::strategy_unavailable,
                     "explicit-labels requested but no paper carries a group_label");
            break;
        }
        case GroupingStrategy::shared_author_components: {
            UnionFind uf(papers.size());
            std::unordered_map<std::string, std::size_t> first_with_author;
            for (std::size_t i = 0; i < papers.size(); ++i) {
                for (const AuthorRef& a : papers[i].authors) {
                    auto [it, inserted] = first_with_author.emplace(a.normalized_key, i);
                    if (!inserted) uf.unite(i, it->second);
                }
            }
            for (std::size_t i = 0; i < papers.size(); ++i) representative[i] = uf.find(i);
            break;
        }
        case GroupingStrategy::last_author: {
            std::unordered_map<std::string, std::size_t> first_with_key;
            for (std::size_t i = 0; i < papers.size(); ++i) {
                const std::string& key = papers[i].authors.back().normalized_key;
                auto [it, inserted] = first_with_key.emplace(key, i);
                representative[i] = it->second;
            }
            break;
        }
    }
    return finalize(corpus, strategy, representative);
}

ClusterSet build_clusters(const Corpus& corpus, const GroupAssignment& assignment,
                          std::string_view cited_id) {
    corpus.paper_at(cited_id); // throws when unknown

    std::map<std::string, CitationCluster> by_group;
    for (std::size_t edge_idx : corpus.incoming_edge_indices(cited_id)) {
        const CitationEdge& edge = corpus.edges()[edge_idx];
        const std::string& gid = assignment.group_of_paper(edge.citing_id);
        CitationCluster& cluster = by_group[gid];
        if (cluster.citing_ids.empty()) {
            cluster.cited_id = std::string(cited_id);
            cluster.group_id = gid;
        }
        cluster.citing_ids.push_back(edge.citing_id);
        if (edge.category) {
            auto idx = static_cast<std::size_t>(*edge.category);
            cluster.category_counts[idx] += 1;
            cluster.weight_sums[idx] += edge.weight;
        }
    }

    ClusterSet out;
    out.cited_id = std::string(cited_id);
    out.clusters.reserve(by_group.size());
    for (auto& [gid, cluster] : by_group) {
        std::sort(cluster.citing_ids.begin(), cluster.citing_ids.end());
        out.max_size_overall = std::max(out.max_size_overall, cluster.size());
        for (std::size_t c = 0; c < category_count; ++c)
            out.max_size_by_category[c] =
                std::max(out.max_size_by_category[c], cluster.category_counts[c]);
        out.clusters.push_back(std::move(cluster));
    }
    return out;
}

ClusterSet flag_auto_citations(ClusterSet clusters, const GroupAssignment& assignment) {
    const std::string& own_group = assignment.group_of_paper(clusters.cited_id);
    for (CitationCluster& cluster : clusters.clusters)
        cluster.auto_citation = (cluster.group_id == own_group);
    return clusters;
}

} // namespace citemetric
