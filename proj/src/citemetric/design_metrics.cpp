#include "citemetric/design_metrics.hpp"

#include <cmath>
#include <string>

namespace citemetric {

double feature_novelty_index(const FeatureStat& stat) {
    long long t = stat.designs_with_feature;
    long long c = stat.designs_same_implementation;
    if (c < 1)
        fail(errc::invalid_counts,
             "feature \"" + stat.feature + "\": implementation count must be >= 1, got " +
                 std::to_string(c));
    if (t < c)
        fail(errc::invalid_counts,
             "feature \"" + stat.feature + "\": feature count " + std::to_string(t) +
                 " is smaller than implementation count " + std::to_string(c));
    return static_cast<double>(t - c) / static_cast<double>(t) * 10.0;
}

double design_novelty(std::span<const FeatureStat> features) {
    if (features.empty()) fail(errc::empty_feature_list, "no features to score");
    double total = 0.0;
    for (const FeatureStat& stat : features) total += stat.weight * feature_novelty_index(stat);
    return total;
}

double design_variety(std::span<const VarietyLevel> levels, double attribute_weight,
                      long long design_count) {
    if (levels.empty()) fail(errc::empty_levels, "no abstraction levels given");
    if (design_count < 1)
        fail(errc::nonpositive_design_count,
             "design count must be >= 1, got " + std::to_string(design_count));
    if (levels.front().level != 1)
        fail(errc::invalid_counts, "levels must start at level 1 (most conceptual)");

    double branch_sum = 0.0; // sum_k V_k * b_k
    int previous_level = 0;
    for (const VarietyLevel& lv : levels) {
        if (lv.level <= previous_level)
            fail(errc::invalid_counts,
                 "levels must be strictly ordered top-down, got level " +
                     std::to_string(lv.level) + " after " + std::to_string(previous_level));
        previous_level = lv.level;
        if (!(lv.variety_index > 0.0) || !std::isfinite(lv.variety_index))
            fail(errc::invalid_counts, "level " + std::to_string(lv.level) +
                                           ": variety index must be positive");
        if (lv.branch_count < 1)
            fail(errc::invalid_counts, "level " + std::to_string(lv.level) +
                                           ": branch count must be >= 1, got " +
                                           std::to_string(lv.branch_count));
        branch_sum += lv.variety_index * static_cast<double>(lv.branch_count);
    }

    double max_variety = static_cast<double>(design_count) * levels.front().variety_index;
    return 10.0 * attribute_weight * branch_sum / max_variety;
}

} // namespace citemetric
