#include "citemetric/creativity.hpp"

#include <algorithm>

namespace citemetric {

std::optional<NoveltyForm> parse_novelty_form(std::string_view text) noexcept {
    if (text == "reciprocal") return NoveltyForm::reciprocal;
    if (text == "normalized-sum") return NoveltyForm::normalized_sum;
    return std::nullopt;
}

const char* novelty_form_name(NoveltyForm form) noexcept {
    switch (form) {
        case NoveltyForm::reciprocal: return "reciprocal";
        case NoveltyForm::normalized_sum: return "normalized-sum";
    }
    return "?";
}

NoveltyScore novelty(const ClusterSet& clusters, NoveltyForm form) {
    NoveltyScore score;
    score.form = form;

    double ratio_sum = 0.0; // sum_i f_i / Cit_i over contributing clusters
    for (const CitationCluster& cluster : clusters.clusters) {
        int alt_count = cluster.count(Category::B) + cluster.count(Category::F);
        if (alt_count == 0) continue;
        double alt_weight = cluster.weight_sum(Category::B) + cluster.weight_sum(Category::F);
        score.contributing_clusters += 1;
        score.max_cluster = std::max(score.max_cluster, alt_count);
        ratio_sum += alt_weight / static_cast<double>(alt_count);
    }

    // Zero total weight gives no evidence to score (and a division by zero
    // in the reciprocal form); treat it like the no-alternatives case.
    if (score.contributing_clusters == 0 || ratio_sum <= 0.0) {
        score.defined = false;
        return score;
    }
    score.defined = true;
    double max = static_cast<double>(score.max_cluster);
    score.value = (form == NoveltyForm::reciprocal) ? 1.0 / (max * ratio_sum)
                                                    : ratio_sum / max;
    return score;
}

UsefulnessScore usefulness(const ClusterSet& clusters) {
    static constexpr std::array<Category, 4> used = {Category::C, Category::D, Category::E,
                                                     Category::G};
    UsefulnessScore score;
    for (Category category : used) {
        auto idx = static_cast<std::size_t>(category);
        int max_count = 0;
        double weighted_sum = 0.0; // sum_i w_i * Cit_i
        for (const CitationCluster& cluster : clusters.clusters) {
            int count = cluster.count(category);
            if (count == 0) continue;
            max_count = std::max(max_count, count);
            weighted_sum += cluster.weight_sum(category) * static_cast<double>(count);
        }
        if (max_count == 0) continue; // category absent: term stays 0
        score.max_counts[idx] = max_count;
        score.terms[idx] = weighted_sum / static_cast<double>(max_count);
        score.value += score.terms[idx];
    }
    return score;
}

CreativityProfile creativity_profile(const Corpus& corpus, const GroupAssignment& assignment,
                                     std::string_view cited_id, NoveltyForm form) {
    ClusterSet clusters =
        flag_auto_citations(build_clusters(corpus, assignment, cited_id), assignment);

    CreativityProfile profile;
    profile.paper_id = std::string(cited_id);
    profile.novelty = novelty(clusters, form);
    profile.usefulness = usefulness(clusters);
    profile.cluster_count = static_cast<int>(clusters.clusters.size());
    for (const CitationCluster& cluster : clusters.clusters)
        if (cluster.auto_citation) profile.auto_citation_cluster_count += 1;
    return profile;
}

} // namespace citemetric
